#pragma once

// Brute-force reference for the state-vector engine: every step is an
// explicit 2^n x 2^n matrix assembled from Kronecker products and projectors,
// applied to a plain Eigen vector. Qubit 0 is the most significant bit.
// Nothing here goes through qrep::QState.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qrep::oracle {

using cplx = std::complex<double>;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// I x ... x op x ... x I with `op` acting on qubit `target` of n.
Eigen::MatrixXcd embed(int n, int target, const Eigen::Matrix2cd& op);

// |bit><bit| on `target`.
Eigen::MatrixXcd projector(int n, int target, int bit);

// P_{control != bit} + P_{control == bit} (u on target).
Eigen::MatrixXcd controlled(int n, int control, int control_bit, int target,
                            const Eigen::Matrix2cd& u);

// r0 P_h P_G + r P_h P_S + P_v.
Eigen::MatrixXcd reflection(int n, int photon, int ensemble, cplx r, cplx r0);

// Ancilla already in (|h>+|v>)/sqrt2: HWP, cavity a, flip, cavity b, HWP, H.
Eigen::MatrixXcd parity_check(int n, int ancilla, int ensemble_a, int ensemble_b, cplx r,
                              cplx r0);

// Keeps the amplitudes with `target` == bit and removes that qubit.
Eigen::MatrixXcd select(int n, int target, int bit);

Eigen::VectorXcd product(const std::vector<Eigen::Vector2cd>& factors);

Eigen::Matrix2cd hadamard();
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_z();

// Encoder -> collective noise (delta, eta) -> decoder on a single photon.
// Returns the (polarization, output port) vector.
Eigen::Vector4cd transmit(const Eigen::Vector2cd& polarization, cplx delta, cplx eta);

}  // namespace qrep::oracle
