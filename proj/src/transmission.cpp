#include "qrep/transmission.hpp"

#include <cmath>
#include <stdexcept>

#include "qrep/tolerances.hpp"

namespace qrep {

namespace {

// 4x4 gate on (control, target): X on target when control == value.
Eigen::Matrix4cd controlled_x(int value) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  const int a = value == 0 ? 0 : 2;
  m(a, a) = m(a + 1, a + 1) = 0;
  m(a, a + 1) = m(a + 1, a) = 1;
  return m;
}

QState relabel(const QState& state, std::string_view from, Subsystem to) {
  auto subs = state.subsystems();
  subs[state.index_of(from)] = std::move(to);
  return QState(std::move(subs), state.amplitudes());
}

}  // namespace

void validate(const ChannelNoise& noise) {
  if (!std::isfinite(noise.delta.real()) || !std::isfinite(noise.delta.imag()) ||
      !std::isfinite(noise.eta.real()) || !std::isfinite(noise.eta.imag())) {
    throw std::invalid_argument("non-finite channel noise");
  }
  if (std::abs(std::norm(noise.delta) + std::norm(noise.eta) - 1.0) > tol::normalization) {
    throw std::invalid_argument("channel noise must satisfy |delta|^2 + |eta|^2 = 1");
  }
}

Eigen::Matrix2cd channel_unitary(const ChannelNoise& noise) {
  validate(noise);
  Eigen::Matrix2cd u;
  u << noise.delta, -std::conj(noise.eta), noise.eta, std::conj(noise.delta);
  return u;
}

std::string timebin_label(std::string_view photon) { return std::string(photon) + ".t"; }
std::string arm_label(std::string_view photon) { return std::string(photon) + ".s"; }
std::string port_label(std::string_view photon) { return std::string(photon) + ".port"; }

QState encode(const QState& state, std::string_view photon) {
  if (state.subsystem(photon).kind != Kind::polarization) {
    throw std::invalid_argument(std::string(photon) + " is not a polarization subsystem");
  }
  const std::string p(photon), t = timebin_label(photon), s = arm_label(photon);
  if (state.contains(t) || state.contains(s)) {
    throw std::invalid_argument(p + " already carries time-bin/spatial modes");
  }
  QState x = append(state, {t, Kind::timebin, Eigen::Vector2cd(1, 0)});
  x = append(x, {s, Kind::spatial, Eigen::Vector2cd(1, 0)});

  // PBS + HWP on (p, t, s): h takes the short path into the lower BS port,
  // v is flipped to h and takes the long path into the upper port.
  // Index = 4p + 2t + s; cycle |hlu> -> |hsd> -> |vlu> -> |hlu>.
  Eigen::MatrixXcd route = Eigen::MatrixXcd::Identity(8, 8);
  route(0, 0) = route(3, 3) = route(4, 4) = 0;
  route(3, 0) = 1;
  route(4, 3) = 1;
  route(0, 4) = 1;
  x = apply_gate(x, {p, t, s}, route);
  return apply_1q(x, s, hadamard());  // BS
}

QState apply_channel(const QState& state, std::string_view photon, const ChannelNoise& noise) {
  return apply_1q(state, photon, channel_unitary(noise));
}

QState decode(const QState& state, std::string_view photon) {
  const std::string p(photon), t = timebin_label(photon), s = arm_label(photon);
  if (!state.contains(t) || !state.contains(s)) {
    throw std::invalid_argument(p + " is not encoded");
  }
  QState x = apply_1q(state, s, pauli_z());  // p_pi on the d arm
  x = apply_1q(x, s, hadamard());            // BS

  // Long-then-short and short-then-long paths arrive together.
  x = apply_gate(x, {s, t}, controlled_x(0));
  const double leak = project_out(x, t, 1).norm_sq();
  if (leak > tol::norm_leakage) {
    throw std::invalid_argument("decoder input is not an encoded channel output");
  }
  x = project_out(x, t, 0);

  x = apply_gate(x, {s, p}, controlled_x(0));  // HWP on the upper arm

  // PBS: (d,h) and (u,v) exit at a1, the other two at a2.
  Eigen::Matrix4cd pbs = controlled_x(1);  // CNOT p -> s
  Eigen::Matrix4cd flip_s = Eigen::Matrix4cd::Zero();
  flip_s(0, 1) = flip_s(1, 0) = flip_s(2, 3) = flip_s(3, 2) = 1;
  x = apply_gate(x, {p, s}, flip_s * pbs);
  x = relabel(x, s, Subsystem(port_label(photon), Kind::spatial, {'1', '2'}));

  return apply_gate(x, {port_label(photon), p}, controlled_x(0));  // HWP on a1
}

QState distribute_pair(const ChannelNoise& noise_a, const ChannelNoise& noise_b) {
  validate(noise_a);
  validate(noise_b);
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd bell(0, s, s, 0);
  QState x({Subsystem("a", Kind::polarization), Subsystem("b", Kind::polarization)}, bell);
  x = encode(x, "a");
  x = encode(x, "b");
  x = apply_channel(x, "a", noise_a);
  x = apply_channel(x, "b", noise_b);
  x = decode(x, "a");
  return decode(x, "b");
}

}  // namespace qrep
