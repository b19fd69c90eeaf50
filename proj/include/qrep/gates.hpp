#pragma once

// Photon-ensemble controlled phase flip and the two-ensemble parity check,
// together with their closed-form fidelities and efficiencies for the
// symmetric input (all single-qubit amplitudes 1/sqrt2).

#include <complex>
#include <string_view>

#include "qrep/cavity_io.hpp"
#include "qrep/qstate.hpp"

namespace qrep {

template <typename Real>
struct GateMetrics {
  Real f_cpf = Real(1);
  Real eta_cpf = Real(1);
  Real f_pcg = Real(1);    // h click, even parity
  Real f_pcg_v = Real(1);  // v click, odd parity
  Real eta_pcg = Real(1);
};

using GateMetricsd = GateMetrics<double>;

template <typename Real>
GateMetrics<Real> gate_metrics(const ReflectionCoefficients<Real>& c) {
  const Real r2 = std::norm(c.r);
  const Real r02 = std::norm(c.r0);
  const Real cross = std::real(c.r * std::conj(c.r0));

  GateMetrics<Real> m;
  m.f_cpf = Real(0.25) + (1 - cross - 2 * std::real(c.r0) + 2 * std::real(c.r)) /
                             (2 * (2 + r2 + r02));
  m.eta_cpf = Real(0.5) + (r2 + r02) / 4;
  m.f_pcg = (r2 + r02 - 2 * cross) / (3 * (r2 + r02) + 2 * cross);
  m.f_pcg_v = Real(1);
  m.eta_pcg = (r2 + r02) / 2;
  return m;
}

// The CPF gate. The PBS/mirror routing reduces to a diagonal map on
// (polarization, ensemble), so this is exactly a cavity reflection.
QState cpf(const QState& state, std::string_view photon, std::string_view ensemble,
           const ReflectionCoefficientsd& coeffs);

struct ParityOutcome {
  HeraldedOutcome even;  // h click
  HeraldedOutcome odd;   // v click
};

// Label of the ancilla photon injected by pcg(); reserved while it runs.
inline constexpr std::string_view kPcgAncilla = "pcg.photon";

// State just before the ancilla is detected, ancilla included (last subsystem).
QState pcg_pre_detection(const QState& state, std::string_view ensemble_a,
                         std::string_view ensemble_b, const ReflectionCoefficientsd& coeffs);

// Parity check on two ensembles using an internal ancilla photon prepared in
// (|h>+|v>)/sqrt2. Probabilities are absolute, i.e. relative to a
// normalized input, so even + odd equals the detection probability.
ParityOutcome pcg(const QState& state, std::string_view ensemble_a, std::string_view ensemble_b,
                  const ReflectionCoefficientsd& coeffs);

}  // namespace qrep
