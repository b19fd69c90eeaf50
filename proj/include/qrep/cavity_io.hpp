#pragma once

// Single-sided cavity input-output relations for a photon reflected off a
// cavity that contains an atomic ensemble.
//
// All rates are plain numbers; the figures and presets use kappa = 1 so every
// other rate is a ratio to the cavity decay rate.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

template <typename Real>
struct CavityParams {
  Real g = Real(0);         // ensemble-cavity coupling
  Real kappa = Real(1);     // cavity decay rate
  Real gamma = Real(0);     // spontaneous emission rate of the excited state
  Real delta_cd = Real(0);  // dipole minus cavity frequency
};

template <typename Real>
struct ReflectionCoefficients {
  std::complex<Real> r{1};    // ensemble in |S>, couples to the cavity
  std::complex<Real> r0{-1};  // ensemble in |G>, empty cavity
  std::complex<Real> n{0};    // leakage into the noise mode
  Real theta = Real(0);       // arg r in (-pi, pi]
  Real theta0 = Real(0);      // arg r0 in (-pi, pi]
  Real dtheta = Real(0);      // |theta0 - theta| folded into [0, pi]
};

using CavityParamsd = CavityParams<double>;
using ReflectionCoefficientsd = ReflectionCoefficients<double>;

namespace detail {

template <typename Real>
Real principal_arg(const std::complex<Real>& z) {
  const Real a = std::arg(z);
  return a <= -std::numbers::pi_v<Real> ? std::numbers::pi_v<Real> : a;
}

template <typename Real>
void require_finite(Real x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string("non-finite ") + what);
  }
}

}  // namespace detail

// Absolute phase difference wrapped into [0, pi].
template <typename Real>
Real folded_phase_difference(Real a, Real b) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  Real d = std::fmod(std::abs(a - b), 2 * pi);
  return d > pi ? 2 * pi - d : d;
}

template <typename Real>
void validate(const CavityParams<Real>& p) {
  detail::require_finite(p.g, "g");
  detail::require_finite(p.kappa, "kappa");
  detail::require_finite(p.gamma, "gamma");
  detail::require_finite(p.delta_cd, "delta_cd");
  if (!(p.kappa > 0)) throw std::invalid_argument("kappa must be positive");
  if (p.gamma < 0) throw std::invalid_argument("gamma must be non-negative");
  if (p.g < 0) throw std::invalid_argument("g must be non-negative");
}

// Builds a coefficient set from raw amplitudes, filling in the phases.
template <typename Real>
ReflectionCoefficients<Real> make_coefficients(std::complex<Real> r, std::complex<Real> r0,
                                               std::complex<Real> n = {}) {
  ReflectionCoefficients<Real> c;
  c.r = r;
  c.r0 = r0;
  c.n = n;
  c.theta = detail::principal_arg(r);
  c.theta0 = detail::principal_arg(r0);
  c.dtheta = folded_phase_difference(c.theta0, c.theta);
  return c;
}

// r = 1, r0 = -1: the lossless strong-coupling limit.
template <typename Real = double>
ReflectionCoefficients<Real> ideal_coefficients() {
  return make_coefficients<Real>(Real(1), Real(-1));
}

// Empty-cavity reflection r0(delta_p) = (delta_p - i kappa/2) / (delta_p + i kappa/2).
template <typename Real>
std::complex<Real> empty_cavity_reflection(Real kappa, Real delta_p) {
  const std::complex<Real> half_k(0, kappa / 2);
  return (delta_p - half_k) / (delta_p + half_k);
}

// Reflection and noise coefficients for a photon detuned by delta_p from the
// cavity. The photon-dipole detuning is delta_p - delta_cd.
template <typename Real>
ReflectionCoefficients<Real> reflection(const CavityParams<Real>& p, Real delta_p) {
  validate(p);
  detail::require_finite(delta_p, "delta_p");

  const std::complex<Real> r0 = empty_cavity_reflection(p.kappa, delta_p);
  if (p.g == 0) return make_coefficients(r0, r0);

  const std::complex<Real> half_k(0, p.kappa / 2);
  const std::complex<Real> dipole(delta_p - p.delta_cd, p.gamma / 2);
  const Real g2 = p.g * p.g;
  const std::complex<Real> den = (delta_p + half_k) * dipole - g2;
  const std::complex<Real> r = ((delta_p - half_k) * dipole - g2) / den;
  const std::complex<Real> n = std::complex<Real>(0, p.g * std::sqrt(p.kappa * p.gamma)) / den;
  return make_coefficients(r, r0, n);
}

template <typename Real>
struct PhasePoint {
  Real delta_p;
  Real theta0;
  Real theta;
  Real dtheta;
};

template <typename Real>
std::vector<PhasePoint<Real>> phase_profile(const CavityParams<Real>& p,
                                            std::span<const Real> grid) {
  std::vector<PhasePoint<Real>> out;
  out.reserve(grid.size());
  for (Real d : grid) {
    const auto c = reflection(p, d);
    out.push_back({d, c.theta0, c.theta, c.dtheta});
  }
  return out;
}

}  // namespace qrep
