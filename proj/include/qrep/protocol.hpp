#pragma once

// Repeater procedures on top of the gates: heralded entanglement distribution
// between two neighbouring ensembles, and entanglement swapping at a middle
// node with either two parity checks or one parity check plus single-ensemble
// measurements.

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "qrep/cavity_io.hpp"
#include "qrep/gates.hpp"
#include "qrep/qstate.hpp"
#include "qrep/transmission.hpp"

namespace qrep {

enum class Click { h, v };

std::string_view to_string(Click c);

template <typename Real>
struct DistributionMetrics {
  Real f_mh = Real(1);     // Alice h, Bob h
  Real f_mv = Real(1);     // Alice h, Bob v
  Real eta_m = Real(1);    // any click pattern
  Real eta_m_h = Real(0.5);  // Alice h, Bob either
};

using DistributionMetricsd = DistributionMetrics<double>;

template <typename Real>
DistributionMetrics<Real> distribution_metrics(const ReflectionCoefficients<Real>& c) {
  using C = std::complex<Real>;
  const C r = c.r, r0 = c.r0;
  const C rr0 = r * r0, r2 = r * r, r02 = r0 * r0;

  DistributionMetrics<Real> m;
  m.f_mh = 2 * std::norm(rr0 - Real(1)) /
           (std::norm(r02 - Real(1)) + std::norm(r2 - Real(1)) + 2 * std::norm(rr0 - Real(1)));
  m.f_mv = Real(0.5) * std::norm(r2 + r02 + Real(2)) /
           (std::norm(r02 + Real(1)) + std::norm(r2 + Real(1)) + 2 * std::norm(rr0 + Real(1)));
  const Real weight = std::norm(r02) + std::norm(r2) + 2 * std::norm(rr0) + 4;
  m.eta_m_h = weight / 16;
  m.eta_m = weight / 8;
  return m;
}

inline constexpr std::string_view kEnsembleA = "E_A";
inline constexpr std::string_view kEnsembleB = "E_B";

struct DistributionBranch {
  Click alice = Click::h;
  Click bob = Click::h;
  // Over (E_A, E_B), local bit flips already applied. Probability is
  // absolute, so the four branches sum to eta_m.
  HeraldedOutcome outcome;
  // Joint probabilities of the decoder ports (a1b1, a1b2, a2b1, a2b2),
  // conditional on this click pattern.
  std::array<double, 4> port_probabilities{};
};

// Heralded distribution with both ensembles starting in (|G>+|S>)/sqrt2.
// Branch order: (h,h), (h,v), (v,h), (v,v).
std::array<DistributionBranch, 4> distribute(const ReflectionCoefficientsd& coeffs_a,
                                             const ReflectionCoefficientsd& coeffs_b,
                                             const ChannelNoise& noise_a,
                                             const ChannelNoise& noise_b);

enum class SwapVariant { two_pcg, one_pcg };

struct SwapRecord {
  SwapVariant variant = SwapVariant::two_pcg;
  Click p1 = Click::h;
  std::optional<Click> p2;                        // two_pcg
  std::optional<std::array<int, 2>> middle_bits;  // one_pcg; 0 = G, 1 = S
  Pauli correction = Pauli::I;
  double probability = 0.0;
  // (remote of the first pair, remote of the second pair), corrected and
  // normalized; all-zero when the branch has probability 0.
  QState final_state;
  // Weight of the leading Schmidt term across middle | remote when the
  // middle ensembles are retired. 1 whenever they factor out exactly.
  double middle_weight = 1.0;
};

// Correction on the first remote ensemble after two parity checks.
Pauli table1_correction(Click p1, Click p2);
// Correction after one parity check and measurement of both middle ensembles.
Pauli one_pcg_correction(Click p, int bit1, int bit2);

// (|G>_A|S>_B1 - |S>_A|G>_B1)/sqrt2.
QState swap_input_ab1();
// (|G>_B2|S>_C + |S>_B2|G>_C)/sqrt2.
QState swap_input_b2c();
// (|G>|S> + |S>|G>)/sqrt2 on two given ensemble labels.
QState psi_plus(std::string_view first, std::string_view second);

// Maps a distributed (|GS>+|SG>)/sqrt2 pair onto the minus-sign convention
// expected for the first swap input by a sigma_z on `ensemble`.
QState to_minus_convention(const QState& pair, std::string_view ensemble);

// Inputs are two-ensemble registers (remote, middle) and (middle, remote).
std::vector<SwapRecord> swap_two_pcg(const QState& state_ab1, const QState& state_b2c,
                                     const ReflectionCoefficientsd& coeffs);
std::vector<SwapRecord> swap_one_pcg(const QState& state_ab1, const QState& state_b2c,
                                     const ReflectionCoefficientsd& coeffs);

// Total heralding probability of a swap on the standard inputs.
double swap_efficiency(const ReflectionCoefficientsd& coeffs, SwapVariant variant);

}  // namespace qrep
