#pragma once

// Numerical tolerances shared by the library, the acceptance suite and tests.
namespace qrep::tol {

// |r|^2 + |n|^2 = 1 and |r0| = 1.
inline constexpr double conservation = 1e-12;

// Squared-norm bookkeeping (normalization of prepared states, probability sums).
inline constexpr double normalization = 1e-12;

// Largest deviation from U^dagger U = I accepted for a gate matrix.
inline constexpr double unitarity = 1e-10;

// Amplitude that may leak into a branch the decoder expects to be empty.
inline constexpr double norm_leakage = 1e-10;

// Closed-form formula vs simulation, and simulation vs brute-force oracle.
inline constexpr double cross_check = 1e-10;

// Values quoted to four digits.
inline constexpr double quoted_rounding = 5e-4;

}  // namespace qrep::tol
