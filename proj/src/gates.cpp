#include "qrep/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrep {

namespace {

void require_kind(const QState& s, std::string_view label, Kind k) {
  if (s.subsystem(label).kind != k) {
    throw std::invalid_argument(std::string(label) + " is not a " + std::string(to_string(k)) +
                                " subsystem");
  }
}

HeraldedOutcome detection_branch(const QState& pre, int bit, double input_norm) {
  QState branch = project_out(pre, kPcgAncilla, bit);
  HeraldedOutcome o;
  o.outcome_label = bit == 0 ? "h" : "v";
  o.probability = input_norm > 0 ? branch.norm_sq() / input_norm : 0.0;
  o.collapsed = branch.norm_sq() > 0 ? renormalized(branch) : std::move(branch);
  return o;
}

}  // namespace

QState cpf(const QState& state, std::string_view photon, std::string_view ensemble,
           const ReflectionCoefficientsd& coeffs) {
  return apply_reflection(state, photon, ensemble, coeffs);
}

QState pcg_pre_detection(const QState& state, std::string_view ensemble_a,
                         std::string_view ensemble_b, const ReflectionCoefficientsd& coeffs) {
  require_kind(state, ensemble_a, Kind::ensemble);
  require_kind(state, ensemble_b, Kind::ensemble);
  if (ensemble_a == ensemble_b) throw std::invalid_argument("parity check needs two ensembles");

  const std::string p(kPcgAncilla);
  const double s = 1.0 / std::sqrt(2.0);
  QState x = append(state, {p, Kind::polarization, Eigen::Vector2cd(s, s)});
  x = apply_1q(x, p, pauli_x());                         // HWP1
  x = apply_reflection(x, p, ensemble_a, coeffs);        // h arm: cavity A
  x = apply_1q(x, p, pauli_x());                         // flip so the v arm meets cavity B
  x = apply_reflection(x, p, ensemble_b, coeffs);
  x = apply_1q(x, p, pauli_x());                         // HWP2
  return apply_1q(x, p, hadamard());
}

ParityOutcome pcg(const QState& state, std::string_view ensemble_a, std::string_view ensemble_b,
                  const ReflectionCoefficientsd& coeffs) {
  const QState pre = pcg_pre_detection(state, ensemble_a, ensemble_b, coeffs);
  return {detection_branch(pre, 0, state.norm_sq()), detection_branch(pre, 1, state.norm_sq())};
}

}  // namespace qrep
