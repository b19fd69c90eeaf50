#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "qrep/gates.hpp"
#include "qrep/protocol.hpp"
#include "qrep/reference_states.hpp"
#include "qrep/tolerances.hpp"

using namespace qrep;

namespace {

const double s = 1.0 / std::sqrt(2.0);

ReflectionCoefficientsd at(double g, double gamma, double dp) {
  return reflection(CavityParamsd{g, 1.0, gamma, 0.0}, dp);
}

ChannelNoise random_noise(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector2cd v(cplx(n(rng), n(rng)), cplx(n(rng), n(rng)));
  v.normalize();
  return {v(0), v(1)};
}

const QState& psi_ab() {
  static const QState x = psi_plus(kEnsembleA, kEnsembleB);
  return x;
}

const QState& psi_ac() {
  static const QState x = psi_plus("E_A", "E_C");
  return x;
}

}  // namespace

TEST_CASE("distribution metrics in the ideal limit") {
  const auto m = distribution_metrics(ideal_coefficients());
  CHECK(m.f_mh == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.f_mv == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.eta_m == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.eta_m_h == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ideal distribution is deterministic for any channel noise") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const auto br = distribute(ideal_coefficients(), ideal_coefficients(), random_noise(rng),
                               random_noise(rng));
    double total = 0.0;
    for (const auto& b : br) {
      CHECK(fidelity(psi_ab(), b.outcome.collapsed) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(b.outcome.probability == doctest::Approx(0.25).epsilon(1e-12));
      total += b.outcome.probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("branch order and recorded corrections") {
  const auto br = distribute(ideal_coefficients(), ideal_coefficients(), {}, {});
  CHECK(br[0].outcome.outcome_label == "hh");
  CHECK(br[1].outcome.outcome_label == "hv");
  CHECK(br[2].outcome.outcome_label == "vh");
  CHECK(br[3].outcome.outcome_label == "vv");
  CHECK(br[0].outcome.corrections.empty());
  REQUIRE(br[1].outcome.corrections.size() == 1);
  CHECK(br[1].outcome.corrections[0] == Correction{Pauli::X, std::string(kEnsembleB)});
  REQUIRE(br[2].outcome.corrections.size() == 1);
  CHECK(br[2].outcome.corrections[0] == Correction{Pauli::X, std::string(kEnsembleA)});
  CHECK(br[3].outcome.corrections.size() == 2);
}

TEST_CASE("port probabilities follow the channel amplitudes") {
  const ChannelNoise na{0.6, cplx(0.0, 0.8)}, nb{cplx(0.0, s), s};
  const auto br = distribute(ideal_coefficients(), ideal_coefficients(), na, nb);
  for (const auto& b : br) {
    CHECK(b.port_probabilities[0] == doctest::Approx(0.36 * 0.5).epsilon(1e-12));
    CHECK(b.port_probabilities[1] == doctest::Approx(0.36 * 0.5).epsilon(1e-12));
    CHECK(b.port_probabilities[2] == doctest::Approx(0.64 * 0.5).epsilon(1e-12));
    CHECK(b.port_probabilities[3] == doctest::Approx(0.64 * 0.5).epsilon(1e-12));
  }
}

TEST_CASE("experimental parameters within half a linewidth") {
  const double g = 215.0 / 53.0, gamma = 3.0 / 53.0;
  for (int i = -50; i <= 50; ++i) {
    const auto k = at(g, gamma, i / 100.0 * gamma);
    const auto m = distribution_metrics(k);
    CHECK(std::min(m.f_mh, m.f_mv) > 0.9936);
    const auto br = distribute(k, k, {}, {});
    CHECK(std::abs(fidelity(psi_ab(), br[0].outcome.collapsed) - m.f_mh) <= tol::cross_check);
    CHECK(std::abs(fidelity(psi_ab(), br[1].outcome.collapsed) - m.f_mv) <= tol::cross_check);
  }
}

TEST_CASE("efficiency above the coupling threshold") {
  for (int i = 0; i <= 100; ++i) {
    const double g = 2.0283 + i * (10.0 - 2.0283) / 100;
    CHECK(distribution_metrics(at(g, 0.0566, 0.0566)).eta_m > 0.9931);
  }
}

TEST_CASE("no phase contrast gives a coin-flip fidelity") {
  const cplx r0 = reflection(CavityParamsd{0.0, 1.0, 0.0, 0.0}, 0.3).r0;
  const auto k = make_coefficients<double>(r0, r0);
  const auto m = distribution_metrics(k);
  const cplx r2m1 = r0 * r0 - 1.0;
  CHECK(m.f_mh == doctest::Approx(2 * std::norm(r2m1) / (4 * std::norm(r2m1))).epsilon(1e-12));
  CHECK(m.f_mh == doctest::Approx(0.5).epsilon(1e-12));
  const auto br = distribute(k, k, {}, {});
  CHECK(std::abs(fidelity(psi_ab(), br[0].outcome.collapsed) - m.f_mh) <= tol::cross_check);
}

TEST_CASE("randomized distribution cross-check, mirror symmetry and noise independence") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> g(0.3, 10.0), gam(0.005, 0.5), dp(-0.5, 0.5);
  for (int i = 0; i < 1000; ++i) {
    const auto k = at(g(rng), gam(rng), dp(rng));
    const auto m = distribution_metrics(k);
    const auto br = distribute(k, k, random_noise(rng), random_noise(rng));
    const auto quiet = distribute(k, k, {}, {});
    const double f[4] = {fidelity(psi_ab(), br[0].outcome.collapsed),
                         fidelity(psi_ab(), br[1].outcome.collapsed),
                         fidelity(psi_ab(), br[2].outcome.collapsed),
                         fidelity(psi_ab(), br[3].outcome.collapsed)};
    CHECK(std::abs(f[0] - m.f_mh) <= tol::cross_check);
    CHECK(std::abs(f[1] - m.f_mv) <= tol::cross_check);
    CHECK(std::abs(f[2] - m.f_mv) <= tol::cross_check);  // v at Alice mirrors Bob
    CHECK(std::abs(f[3] - m.f_mh) <= tol::cross_check);
    CHECK(std::abs(m.eta_m - 2 * m.eta_m_h) <= 1e-12);
    CHECK(std::abs(br[0].outcome.probability + br[1].outcome.probability - m.eta_m_h) <=
          tol::cross_check);
    double total = 0.0;
    for (std::size_t b = 0; b < 4; ++b) {
      total += br[b].outcome.probability;
      CHECK(std::abs(br[b].outcome.probability - quiet[b].outcome.probability) <= 1e-12);
      CHECK(std::abs(f[b] - fidelity(psi_ab(), quiet[b].outcome.collapsed)) <= 1e-12);
    }
    CHECK(std::abs(total - m.eta_m) <= tol::cross_check);
  }
}

TEST_CASE("correction tables") {
  CHECK(table1_correction(Click::v, Click::h) == Pauli::I);
  CHECK(table1_correction(Click::v, Click::v) == Pauli::Z);
  CHECK(table1_correction(Click::h, Click::v) == Pauli::Y);
  CHECK(table1_correction(Click::h, Click::h) == Pauli::X);
  std::set<Pauli> seen;
  for (Click a : {Click::h, Click::v})
    for (Click b : {Click::h, Click::v}) seen.insert(table1_correction(a, b));
  CHECK(seen.size() == 4);
}

TEST_CASE("swap inputs") {
  const QState ab1 = swap_input_ab1();
  CHECK(std::abs(ab1.amplitude("GS") - s) < 1e-15);
  CHECK(std::abs(ab1.amplitude("SG") + s) < 1e-15);
  CHECK(fidelity(ab1, to_minus_convention(psi_plus("E_A", "E_B1"), "E_A")) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK((to_minus_convention(psi_plus("E_A", "E_B1"), "E_A").amplitudes() - ab1.amplitudes())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("two parity checks, ideal") {
  const auto ideal = ideal_coefficients();
  const QState joint = tensor(swap_input_ab1(), swap_input_b2c());
  const auto first = pcg(joint, "E_B1", "E_B2", ideal);
  CHECK(fidelity(reference::psi_e(), first.odd.collapsed) == doctest::Approx(1.0).epsilon(1e-12));

  const auto recs = swap_two_pcg(swap_input_ab1(), swap_input_b2c(), ideal);
  REQUIRE(recs.size() == 4);
  for (const auto& r : recs) {
    REQUIRE(r.p2.has_value());
    CHECK(r.correction == table1_correction(r.p1, *r.p2));
    CHECK(r.probability == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.middle_weight == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.final_state.num_subsystems() == 2);
    CHECK(fidelity(psi_ac(), r.final_state) == doctest::Approx(1.0).epsilon(1e-12));
    if (r.p1 == Click::v && *r.p2 == Click::h) CHECK(r.correction == Pauli::I);
  }
}

TEST_CASE("product inputs cannot be swapped into entanglement") {
  const QState ab1 = init_register({{"E_A", Kind::ensemble, Eigen::Vector2cd(1, 0)},
                                    {"E_B1", Kind::ensemble, Eigen::Vector2cd(0, 1)}});
  const QState b2c = init_register({{"E_B2", Kind::ensemble, Eigen::Vector2cd(1, 0)},
                                    {"E_C", Kind::ensemble, Eigen::Vector2cd(0, 1)}});
  double total = 0.0;
  for (const auto& r : swap_two_pcg(ab1, b2c, ideal_coefficients())) {
    total += r.probability;
    if (r.probability < 1e-12) continue;
    CHECK(fidelity(psi_ac(), r.final_state) == doctest::Approx(0.5).epsilon(1e-12));
    // Separable: the 2x2 coefficient matrix has rank one.
    const auto& a = r.final_state.amplitudes();
    CHECK(std::abs(a(0) * a(3) - a(1) * a(2)) < 1e-12);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("one parity check, ideal") {
  const auto recs = swap_one_pcg(swap_input_ab1(), swap_input_b2c(), ideal_coefficients());
  REQUIRE(recs.size() == 8);
  double total = 0.0;
  for (const auto& r : recs) {
    REQUIRE(r.middle_bits.has_value());
    const auto [b1, b2] = *r.middle_bits;
    CHECK(r.correction == one_pcg_correction(r.p1, b1, b2));
    CHECK(r.probability == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(fidelity(psi_ac(), r.final_state) == doctest::Approx(1.0).epsilon(1e-12));
    total += r.probability;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("one parity check, realistic") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> g(0.5, 10.0), gam(0.005, 0.3), dp(-0.3, 0.3);
  for (int i = 0; i < 200; ++i) {
    const auto k = at(g(rng), gam(rng), dp(rng));
    const auto m = gate_metrics(k);
    double total = 0.0;
    for (const auto& r : swap_one_pcg(swap_input_ab1(), swap_input_b2c(), k)) {
      const double f = fidelity(psi_ac(), r.final_state);
      CHECK(std::abs(f - (r.p1 == Click::h ? m.f_pcg : 1.0)) <= tol::cross_check);
      total += r.probability;
    }
    CHECK(std::abs(total - m.eta_pcg) <= 1e-12);
    CHECK(std::abs(swap_efficiency(k, SwapVariant::one_pcg) - m.eta_pcg) <= 1e-12);
    CHECK(swap_efficiency(k, SwapVariant::two_pcg) <= m.eta_pcg + 1e-12);
  }
}

TEST_CASE("distributed pairs feed the swap after the sign convention") {
  const auto k = ideal_coefficients();
  const auto br = distribute(k, k, {}, {});
  // Relabel a distributed (E_A, E_B) pair as (E_A, E_B1) and (E_B2, E_C).
  const QState& pair = br[0].outcome.collapsed;
  const QState ab1 = to_minus_convention(
      QState({Subsystem("E_A", Kind::ensemble), Subsystem("E_B1", Kind::ensemble)},
             pair.amplitudes()),
      "E_A");
  const QState b2c(
      {Subsystem("E_B2", Kind::ensemble), Subsystem("E_C", Kind::ensemble)}, pair.amplitudes());
  for (const auto& r : swap_two_pcg(ab1, b2c, k))
    CHECK(fidelity(psi_ac(), r.final_state) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("swap input validation") {
  const QState bad = init_register({{"p", Kind::polarization, Eigen::Vector2cd(1, 0)},
                                    {"E_B1", Kind::ensemble, Eigen::Vector2cd(1, 0)}});
  CHECK_THROWS_AS(swap_two_pcg(bad, swap_input_b2c(), ideal_coefficients()),
                  std::invalid_argument);
  CHECK_THROWS_AS(swap_one_pcg(swap_input_ab1(), swap_input_ab1(), ideal_coefficients()),
                  std::invalid_argument);
}
