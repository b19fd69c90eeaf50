#include "qrep_oracle/oracle.hpp"

#include <cmath>

namespace qrep::oracle {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd embed(int n, int target, const Eigen::Matrix2cd& op) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    out = kron(out, q == target ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd::Identity(2, 2));
  }
  return out;
}

Eigen::MatrixXcd projector(int n, int target, int bit) {
  Eigen::Matrix2cd p = Eigen::Matrix2cd::Zero();
  p(bit, bit) = 1;
  return embed(n, target, p);
}

Eigen::MatrixXcd controlled(int n, int control, int control_bit, int target,
                            const Eigen::Matrix2cd& u) {
  return projector(n, control, 1 - control_bit) +
         projector(n, control, control_bit) * embed(n, target, u);
}

Eigen::MatrixXcd reflection(int n, int photon, int ensemble, cplx r, cplx r0) {
  return r0 * projector(n, photon, 0) * projector(n, ensemble, 0) +
         r * projector(n, photon, 0) * projector(n, ensemble, 1) + projector(n, photon, 1);
}

Eigen::MatrixXcd parity_check(int n, int ancilla, int ensemble_a, int ensemble_b, cplx r,
                              cplx r0) {
  const Eigen::MatrixXcd flip = embed(n, ancilla, pauli_x());
  return embed(n, ancilla, hadamard()) * flip * reflection(n, ancilla, ensemble_b, r, r0) * flip *
         reflection(n, ancilla, ensemble_a, r, r0) * flip;
}

Eigen::MatrixXcd select(int n, int target, int bit) {
  Eigen::RowVector2cd pick = Eigen::RowVector2cd::Zero();
  pick(bit) = 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    out = kron(out, q == target ? Eigen::MatrixXcd(pick) : Eigen::MatrixXcd::Identity(2, 2));
  }
  return out;
}

Eigen::VectorXcd product(const std::vector<Eigen::Vector2cd>& factors) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out.col(0);
}

Eigen::Matrix2cd hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  return h;
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  return x;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  return z;
}

Eigen::Vector4cd transmit(const Eigen::Vector2cd& polarization, cplx delta, cplx eta) {
  // Qubits: 0 polarization (h,v), 1 time bin (l,s), 2 arm (u,d).
  constexpr int n = 3;
  const double s = 1.0 / std::sqrt(2.0);

  // Encoder isometry, columns are the images of |h> and |v>:
  //   |h> -> |h>(|u_s> - |d_s>)/sqrt2,  |v> -> |h>(|u_l> + |d_l>)/sqrt2.
  Eigen::MatrixXcd encoder = Eigen::MatrixXcd::Zero(8, 2);
  encoder(0b010, 0) = s;   // h s u
  encoder(0b011, 0) = -s;  // h s d
  encoder(0b000, 1) = s;   // h l u
  encoder(0b001, 1) = s;   // h l d

  Eigen::Matrix2cd channel;
  channel << delta, -std::conj(eta), eta, std::conj(delta);

  Eigen::VectorXcd x = encoder * polarization;
  x = embed(n, 0, channel) * x;
  x = embed(n, 2, pauli_z()) * x;                 // p_pi on d
  x = embed(n, 2, hadamard()) * x;                // BS
  x = controlled(n, 2, 0, 1, pauli_x()) * x;      // u arm moved to the common time slot
  x = select(n, 1, 0) * x;                        // qubits now: 0 pol, 1 arm

  constexpr int m = 2;
  x = controlled(m, 1, 0, 0, pauli_x()) * x;      // HWP on u
  x = controlled(m, 0, 1, 1, pauli_x()) * x;      // PBS routing
  x = embed(m, 1, pauli_x()) * x;                 // arm -> port (a1 = 0)
  x = controlled(m, 1, 0, 0, pauli_x()) * x;      // HWP on a1
  return x;
}

}  // namespace qrep::oracle
