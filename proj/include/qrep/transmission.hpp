#pragma once

// Polarization-error-free single-photon transmission over a collective-noise
// fiber channel. The encoder moves the polarization qubit into time-bin and
// spatial modes so that the channel only ever sees h-polarized light; the
// decoder returns the original polarization and leaves the noise in the choice
// of output port.
//
// Subsystem labels added for a photon "p":
//   p.t     time bin (l = long path, s = short path)      after encode()
//   p.s     spatial arm (u = upper, d = lower)            after encode()
//   p.port  decoder output port (1 = a1, 2 = a2)          after decode()

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "qrep/qstate.hpp"

namespace qrep {

// U_C |h> = delta |h> + eta |v>.
struct ChannelNoise {
  cplx delta{1.0};
  cplx eta{0.0};
};

void validate(const ChannelNoise& noise);

// The SU(2) completion U|v> = -conj(eta)|h> + conj(delta)|v>.
Eigen::Matrix2cd channel_unitary(const ChannelNoise& noise);

std::string timebin_label(std::string_view photon);
std::string arm_label(std::string_view photon);
std::string port_label(std::string_view photon);

QState encode(const QState& state, std::string_view photon);

// Identical unitary on the photon's polarization in every time bin and arm.
QState apply_channel(const QState& state, std::string_view photon, const ChannelNoise& noise);

// pi phase shift on the d arm, then BS, path recombination, HWP, PBS, HWP.
// Throws if the time-bin recombination leaks more than tol::norm_leakage.
QState decode(const QState& state, std::string_view photon);

// Source state (|h>_a|v>_b + |v>_a|h>_b)/sqrt2 sent through two encoded
// channels. Register order: a, b, a.port, b.port.
QState distribute_pair(const ChannelNoise& noise_a, const ChannelNoise& noise_b);

}  // namespace qrep
