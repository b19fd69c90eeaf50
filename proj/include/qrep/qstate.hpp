#pragma once

// Dense state vectors over a labelled register of two-level subsystems.
//
// Basis ordering: subsystem 0 is the most significant bit of the amplitude
// index, and the first basis letter of every subsystem (h, u, l, G) is bit 0.
// States are immutable values; every operation returns a new state. Loss is
// carried as a squared norm below one and is never renormalized away except
// where an operation says so.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qrep/cavity_io.hpp"

namespace qrep {

using cplx = std::complex<double>;

enum class Kind { polarization, spatial, timebin, ensemble };

std::string_view to_string(Kind k);

// Basis letters for bit values 0 and 1.
std::array<char, 2> default_basis(Kind k);

struct Subsystem {
  std::string label;
  Kind kind = Kind::polarization;
  std::array<char, 2> basis = default_basis(Kind::polarization);

  Subsystem() = default;
  Subsystem(std::string label_, Kind kind_)
      : label(std::move(label_)), kind(kind_), basis(default_basis(kind_)) {}
  Subsystem(std::string label_, Kind kind_, std::array<char, 2> basis_)
      : label(std::move(label_)), kind(kind_), basis(basis_) {}

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

class QState {
 public:
  // Empty register holding the scalar 1.
  QState();
  QState(std::vector<Subsystem> subsystems, Eigen::VectorXcd amplitudes);

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  double norm_sq() const { return norm_sq_; }
  std::size_t num_subsystems() const { return subsystems_.size(); }

  bool contains(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;
  const Subsystem& subsystem(std::string_view label) const;

  // Bit position of a subsystem inside the amplitude index.
  std::size_t shift_of(std::size_t subsystem_index) const {
    return subsystems_.size() - 1 - subsystem_index;
  }

  // Amplitude of a basis state written as one letter per subsystem, e.g. "hG".
  cplx amplitude(std::string_view basis_letters) const;
  std::string basis_label(std::size_t index) const;

 private:
  std::vector<Subsystem> subsystems_;
  Eigen::VectorXcd amps_;
  double norm_sq_ = 1.0;
};

struct RegisterEntry {
  std::string label;
  Kind kind;
  Eigen::Vector2cd amplitudes;
};

enum class Basis { computational, hadamard };

enum class Pauli { I, X, Y, Z };

std::string_view to_string(Pauli p);

struct Correction {
  Pauli op = Pauli::I;
  std::string target;
  friend bool operator==(const Correction&, const Correction&) = default;
};

struct HeraldedOutcome {
  std::string outcome_label;
  double probability = 0.0;
  QState collapsed;
  std::vector<Correction> corrections;
};

// Single-qubit matrices in the (bit 0, bit 1) basis.
Eigen::Matrix2cd hadamard();
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_z();
// The real form |0><1| - |1><0| used for ensemble corrections.
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_matrix(Pauli p);

bool is_unitary(const Eigen::MatrixXcd& u, double tol);

QState init_register(std::span<const RegisterEntry> entries);
QState init_register(std::initializer_list<RegisterEntry> entries);

// Product of two registers; `b`'s subsystems follow `a`'s.
QState tensor(const QState& a, const QState& b);
QState append(const QState& state, const RegisterEntry& entry);

QState apply_1q(const QState& state, std::string_view target, const Eigen::Matrix2cd& u);

// Unitary on several subsystems; targets[0] is the most significant bit of
// the matrix index.
QState apply_gate(const QState& state, std::span<const std::string> targets,
                  const Eigen::MatrixXcd& u);
QState apply_gate(const QState& state, std::initializer_list<std::string> targets,
                  const Eigen::MatrixXcd& u);

// Cavity reflection of the photon's h component: multiplied by r0 when the
// ensemble is in |G>, by r when in |S>. The v component is untouched.
QState apply_reflection(const QState& state, std::string_view photon_pol,
                        std::string_view ensemble, const ReflectionCoefficientsd& coeffs);

// Projects `target` onto one bit value and drops it from the register. The
// result is not renormalized.
QState project_out(const QState& state, std::string_view target, int bit);

// Both outcomes, probabilities relative to state.norm_sq(), collapsed states
// renormalized. A zero-probability branch carries a zero vector.
std::array<HeraldedOutcome, 2> measure(const QState& state, std::string_view target,
                                       Basis basis = Basis::computational);

QState renormalized(const QState& state);

// Permutes the register into the given label order.
QState reorder(const QState& state, std::span<const std::string> labels);

// |<a|b>|^2 after normalizing both; b is reordered to match a.
double fidelity(const QState& a, const QState& b);

// <t| rho_sub |t> where rho_sub is the reduced state of `state` on the
// subsystems of `target` (normalized). Other subsystems are traced out.
double subsystem_fidelity(const QState& state, const QState& target);

// Debug text form: one "<basis letters> <re> <im>" line per amplitude.
std::string to_text(const QState& state);
QState from_text(std::string_view text);

}  // namespace qrep
