#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "qrep/cavity_io.hpp"
#include "qrep/tolerances.hpp"

using namespace qrep;

namespace {
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const CavityParamsd kFig{4.0566, 1.0, 0.0566, 0.0};
}  // namespace

TEST_CASE("zero coupling reduces to the empty cavity") {
  for (double dp : {-3.0, -0.2, 0.0, 0.4, 7.5}) {
    const auto c = reflection(CavityParamsd{0.0, 1.0, 0.3, 0.1}, dp);
    CHECK(c.r == c.r0);
    CHECK(c.n == cplx(0.0));
  }
}

TEST_CASE("resonant reflection is real and close to one") {
  const auto c = reflection(kFig, 0.0);
  const double g2 = kFig.g * kFig.g, kg4 = kFig.kappa * kFig.gamma / 4;
  CHECK(c.r.real() == doctest::Approx((g2 - kg4) / (g2 + kg4)).epsilon(1e-14));
  CHECK(c.r.real() == doctest::Approx(0.998282).epsilon(1e-6));
  CHECK(std::abs(c.r.imag()) < 1e-15);
}

TEST_CASE("empty cavity coefficient") {
  CHECK(reflection(kFig, 0.0).r0 == cplx(-1.0));
  CHECK(reflection(CavityParamsd{1.0, 1.0, 0.1, 0.0}, 0.0).r0 == cplx(-1.0));
  const cplx r0 = reflection(kFig, 0.5).r0;
  CHECK(std::abs(r0 - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("kappa other than one scales consistently") {
  const auto a = reflection(CavityParamsd{4.0566, 1.0, 0.0566, 0.02}, 0.03);
  const auto b = reflection(CavityParamsd{2 * 4.0566, 2.0, 2 * 0.0566, 0.04}, 0.06);
  CHECK(std::abs(a.r - b.r) < 1e-14);
  CHECK(std::abs(a.r0 - b.r0) < 1e-14);
  CHECK(std::abs(a.n - b.n) < 1e-14);
}

TEST_CASE("invalid parameters are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(reflection(CavityParamsd{1, 0, 0.1, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reflection(CavityParamsd{1, -1, 0.1, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reflection(CavityParamsd{-1, 1, 0.1, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reflection(CavityParamsd{1, 1, -0.1, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reflection(CavityParamsd{nan, 1, 0.1, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reflection(CavityParamsd{1, 1, 0.1, inf}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reflection(kFig, nan), std::invalid_argument);
  CHECK_NOTHROW(reflection(CavityParamsd{0, 1, 0, 0}, 0.0));
}

TEST_CASE("phase difference is pi on resonance under strong coupling") {
  const std::vector<double> grid{0.0};
  const auto pts = phase_profile(kFig, std::span<const double>(grid));
  REQUIRE(pts.size() == 1);
  CHECK(std::abs(pts[0].dtheta - kPi) < 2e-3);
  CHECK(pts[0].theta0 == doctest::Approx(kPi));
}

TEST_CASE("far-detuned photon sees no phase") {
  const std::vector<double> grid{100.0, -100.0};
  for (const auto& p : phase_profile(kFig, std::span<const double>(grid))) {
    CHECK(std::abs(p.theta0) < 0.011);
    CHECK(std::abs(p.theta) < 0.011);
    CHECK(p.dtheta < 1e-3);
  }
}

TEST_CASE("phase contrast falls off monotonically with detuning") {
  std::vector<double> grid;
  for (int i = 0; i <= 1000; ++i) grid.push_back(i / 1000.0);
  const auto pts = phase_profile(kFig, std::span<const double>(grid));
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].dtheta <= pts[i - 1].dtheta + 1e-15);
  for (const auto& p : pts) {
    CHECK(p.dtheta >= 0.0);
    CHECK(p.dtheta <= kPi);
    CHECK(p.theta0 > -kPi);
    CHECK(p.theta0 <= kPi);
  }
}

TEST_CASE("randomized conservation, unit empty-cavity modulus, conjugate symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> g(0.0, 12.0), gam(0.0, 3.0), d(-10.0, 10.0),
      det(-2.0, 2.0);
  for (int i = 0; i < 10000; ++i) {
    const CavityParamsd p{g(rng), 1.0, gam(rng), det(rng)};
    const double dp = d(rng);
    const auto c = reflection(p, dp);
    CHECK(std::abs(std::norm(c.r) + std::norm(c.n) - 1.0) <= tol::conservation);
    CHECK(std::abs(std::abs(c.r0) - 1.0) <= tol::conservation);

    CavityParamsd resonant = p;
    resonant.delta_cd = 0.0;
    const auto plus = reflection(resonant, dp);
    const auto minus = reflection(resonant, -dp);
    CHECK(std::abs(minus.r - std::conj(plus.r)) <= 1e-12);
    CHECK(std::abs(minus.r0 - std::conj(plus.r0)) <= 1e-12);
  }
}

TEST_CASE("strong-coupling limit") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> g(1.0, 20.0), u(0.0, 1.0), d(-1e-3, 1e-3);
  for (int i = 0; i < 2000; ++i) {
    const double gg = g(rng);
    const double gamma = u(rng) * 4 * gg * gg * 1e-4;  // kappa*gamma/4 <= g^2 * 1e-4
    const auto c = reflection(CavityParamsd{gg, 1.0, gamma, 0.0}, d(rng));
    CHECK(std::abs(c.r - 1.0) <= 5e-3);
    CHECK(std::abs(c.r0 + 1.0) <= 5e-3);
  }
}

TEST_CASE("float and long double instantiations agree with double") {
  const auto d = reflection(kFig, 0.0283);
  const auto f = reflection(CavityParams<float>{4.0566f, 1.0f, 0.0566f, 0.0f}, 0.0283f);
  const auto l = reflection(CavityParams<long double>{4.0566L, 1.0L, 0.0566L, 0.0L}, 0.0283L);
  CHECK(std::abs(std::complex<double>(f.r) - d.r) < 1e-5);
  CHECK(std::abs(std::complex<double>(l.r) - d.r) < 1e-14);
}
