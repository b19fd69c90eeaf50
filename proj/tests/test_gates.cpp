#include <cmath>
#include <random>

#include "doctest.h"
#include "qrep/gates.hpp"
#include "qrep/reference_states.hpp"
#include "qrep/tolerances.hpp"

using namespace qrep;

namespace {

const double s = 1.0 / std::sqrt(2.0);
const Eigen::Vector2cd kPlus(s, s);

ReflectionCoefficientsd at(double g, double gamma, double dp) {
  return reflection(CavityParamsd{g, 1.0, gamma, 0.0}, dp);
}

QState symmetric_pe() {
  return init_register({{"p", Kind::polarization, kPlus}, {"E", Kind::ensemble, kPlus}});
}

QState symmetric_ab() {
  return init_register({{"E_A", Kind::ensemble, kPlus}, {"E_B", Kind::ensemble, kPlus}});
}

}  // namespace

TEST_CASE("ideal CPF on the symmetric input") {
  const QState out = cpf(symmetric_pe(), "p", "E", ideal_coefficients());
  CHECK(std::abs(out.amplitude("hG") + 0.5) < 1e-15);
  CHECK(std::abs(out.amplitude("hS") - 0.5) < 1e-15);
  CHECK(std::abs(out.amplitude("vG") - 0.5) < 1e-15);
  CHECK(std::abs(out.amplitude("vS") - 0.5) < 1e-15);

  const QState vg = init_register({{"p", Kind::polarization, Eigen::Vector2cd(0, 1)},
                                   {"E", Kind::ensemble, Eigen::Vector2cd(1, 0)}});
  CHECK(cpf(vg, "p", "E", ideal_coefficients()).amplitudes() == vg.amplitudes());
}

TEST_CASE("realistic CPF fidelity matches the closed form") {
  const auto k = at(4.0566, 0.0566, 0.5 * 0.0566);
  const QState out = cpf(symmetric_pe(), "p", "E", k);
  const double f = fidelity(reference::cpf_ideal(s, s, s, s), out);
  CHECK(std::abs(f - gate_metrics(k).f_cpf) <= tol::cross_check);
  CHECK(std::abs(out.norm_sq() - gate_metrics(k).eta_cpf) <= tol::cross_check);
}

TEST_CASE("ideal parity check on uniform ensembles") {
  const auto out = pcg(symmetric_ab(), "E_A", "E_B", ideal_coefficients());
  CHECK(out.even.outcome_label == "h");
  CHECK(out.odd.outcome_label == "v");
  CHECK(out.even.probability == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(out.odd.probability == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(out.even.collapsed.amplitude("SS") - s) < 1e-14);
  CHECK(std::abs(out.even.collapsed.amplitude("GG") + s) < 1e-14);
  CHECK(std::abs(out.odd.collapsed.amplitude("SG") - s) < 1e-14);
  CHECK(std::abs(out.odd.collapsed.amplitude("GS") + s) < 1e-14);
  CHECK_FALSE(out.even.collapsed.contains(kPcgAncilla));
  CHECK(out.even.collapsed.num_subsystems() == 2);
}

TEST_CASE("definite odd parity") {
  const QState gs = init_register({{"E_A", Kind::ensemble, Eigen::Vector2cd(1, 0)},
                                   {"E_B", Kind::ensemble, Eigen::Vector2cd(0, 1)}});
  const auto out = pcg(gs, "E_A", "E_B", ideal_coefficients());
  CHECK(out.odd.probability == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(out.even.probability == doctest::Approx(0.0));
}

TEST_CASE("parity check acts on chosen ensembles inside a larger register") {
  const QState x = init_register({{"E_A", Kind::ensemble, kPlus},
                                  {"p", Kind::polarization, Eigen::Vector2cd(0.6, 0.8)},
                                  {"E_B", Kind::ensemble, kPlus}});
  const auto out = pcg(x, "E_A", "E_B", ideal_coefficients());
  const QState want = tensor(reference::pcg_even_ideal(s, s, s, s),
                             init_register({{"p", Kind::polarization, Eigen::Vector2cd(0.6, 0.8)}}));
  CHECK(fidelity(want, out.even.collapsed) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(pcg(x, "E_A", "p", ideal_coefficients()), std::invalid_argument);
}

TEST_CASE("realistic parity check reaches 0.9944 at half a linewidth") {
  const auto k = at(2.0283, 0.0566, 0.5 * 0.0566);
  const auto out = pcg(symmetric_ab(), "E_A", "E_B", k);
  const double f = fidelity(reference::pcg_even_ideal(s, s, s, s), out.even.collapsed);
  CHECK(std::abs(f - gate_metrics(k).f_pcg) <= tol::cross_check);
  CHECK(f >= 0.9944 - tol::quoted_rounding);
}

TEST_CASE("metrics in the ideal limit") {
  const auto m = gate_metrics(ideal_coefficients());
  CHECK(m.f_cpf == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.eta_cpf == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.f_pcg == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.f_pcg_v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.eta_pcg == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reference metric values") {
  const double gamma = 0.0566;
  for (double sign : {1.0, -1.0}) {
    CHECK(std::abs(gate_metrics(at(4.0566, gamma, sign * 0.5 * gamma)).f_cpf - 0.9974) <=
          tol::quoted_rounding);
    const auto m = gate_metrics(at(4.0566, gamma, sign * gamma));
    CHECK(std::abs(m.f_cpf - 0.9906) <= tol::quoted_rounding);
    CHECK(std::abs(m.eta_cpf - 0.9991) <= tol::quoted_rounding);
    CHECK(std::abs(m.eta_pcg - 0.9983) <= tol::quoted_rounding);
  }
}

TEST_CASE("randomized closed-form agreement and parity bookkeeping") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> g(0.2, 10.0), gam(0.005, 0.5), dp(-0.5, 0.5);
  const QState even_ideal = reference::pcg_even_ideal(s, s, s, s);
  const QState odd_ideal = reference::pcg_odd_ideal(s, s, s, s);
  const QState cpf_target = reference::cpf_ideal(s, s, s, s);
  for (int i = 0; i < 1000; ++i) {
    const auto k = at(g(rng), gam(rng), dp(rng));
    const auto m = gate_metrics(k);
    const QState c = cpf(symmetric_pe(), "p", "E", k);
    CHECK(std::abs(fidelity(cpf_target, c) - m.f_cpf) <= tol::cross_check);
    CHECK(std::abs(c.norm_sq() - m.eta_cpf) <= tol::cross_check);

    const auto out = pcg(symmetric_ab(), "E_A", "E_B", k);
    CHECK(std::abs(fidelity(even_ideal, out.even.collapsed) - m.f_pcg) <= tol::cross_check);
    CHECK(std::abs(fidelity(odd_ideal, out.odd.collapsed) - 1.0) <= 1e-12);
    CHECK(std::abs(out.even.probability + out.odd.probability - m.eta_pcg) <= 1e-12);

    for (double v : {m.f_cpf, m.eta_cpf, m.f_pcg, m.f_pcg_v, m.eta_pcg}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("float metrics track double") {
  const auto k = at(4.0566, 0.0566, 0.0283);
  ReflectionCoefficients<float> kf = make_coefficients<float>(std::complex<float>(k.r),
                                                              std::complex<float>(k.r0));
  CHECK(std::abs(gate_metrics(kf).f_cpf - gate_metrics(k).f_cpf) < 1e-5);
}
