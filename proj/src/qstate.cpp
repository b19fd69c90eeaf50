#include "qrep/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qrep/tolerances.hpp"

namespace qrep {

namespace {

std::size_t dim(std::size_t n) { return std::size_t{1} << n; }

int bit_at(std::size_t index, std::size_t shift) { return static_cast<int>((index >> shift) & 1u); }

Kind kind_from_string(std::string_view s) {
  if (s == "polarization") return Kind::polarization;
  if (s == "spatial") return Kind::spatial;
  if (s == "timebin") return Kind::timebin;
  if (s == "ensemble") return Kind::ensemble;
  throw std::invalid_argument("unknown subsystem kind: " + std::string(s));
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::polarization: return "polarization";
    case Kind::spatial: return "spatial";
    case Kind::timebin: return "timebin";
    case Kind::ensemble: return "ensemble";
  }
  return "?";
}

std::array<char, 2> default_basis(Kind k) {
  switch (k) {
    case Kind::polarization: return {'h', 'v'};
    case Kind::spatial: return {'u', 'd'};
    case Kind::timebin: return {'l', 's'};
    case Kind::ensemble: return {'G', 'S'};
  }
  return {'0', '1'};
}

std::string_view to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

QState::QState() : amps_(Eigen::VectorXcd::Ones(1)) {}

QState::QState(std::vector<Subsystem> subsystems, Eigen::VectorXcd amplitudes)
    : subsystems_(std::move(subsystems)), amps_(std::move(amplitudes)) {
  if (subsystems_.size() >= 8 * sizeof(std::size_t) - 1) {
    throw std::invalid_argument("register too large");
  }
  if (static_cast<std::size_t>(amps_.size()) != dim(subsystems_.size())) {
    throw std::invalid_argument("amplitude vector length must be 2^(number of subsystems)");
  }
  std::unordered_set<std::string> seen;
  for (const auto& s : subsystems_) {
    if (!seen.insert(s.label).second) throw std::invalid_argument("duplicate label: " + s.label);
  }
  if (!amps_.allFinite()) throw std::invalid_argument("non-finite amplitude");
  norm_sq_ = amps_.squaredNorm();
  if (norm_sq_ > 1.0 + tol::normalization) {
    throw std::invalid_argument("state norm exceeds 1");
  }
}

bool QState::contains(std::string_view label) const {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t QState::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  throw std::invalid_argument("unknown subsystem: " + std::string(label));
}

const Subsystem& QState::subsystem(std::string_view label) const {
  return subsystems_[index_of(label)];
}

cplx QState::amplitude(std::string_view letters) const {
  if (letters.size() != subsystems_.size()) {
    throw std::invalid_argument("basis label length does not match register");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& b = subsystems_[i].basis;
    int bit;
    if (letters[i] == b[0]) {
      bit = 0;
    } else if (letters[i] == b[1]) {
      bit = 1;
    } else {
      throw std::invalid_argument("bad basis letter for " + subsystems_[i].label);
    }
    index = (index << 1) | static_cast<std::size_t>(bit);
  }
  return amps_(static_cast<Eigen::Index>(index));
}

std::string QState::basis_label(std::size_t index) const {
  std::string out(subsystems_.size(), '?');
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    out[i] = subsystems_[i].basis[bit_at(index, shift_of(i))];
  }
  return out;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, 1, -1, 0;
  return m;
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return Eigen::Matrix2cd::Identity();
    case Pauli::X: return pauli_x();
    case Pauli::Y: return pauli_y();
    case Pauli::Z: return pauli_z();
  }
  return Eigen::Matrix2cd::Identity();
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd err = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return err.cwiseAbs().maxCoeff() <= tol;
}

QState init_register(std::span<const RegisterEntry> entries) {
  QState out;
  for (const auto& e : entries) out = append(out, e);
  return out;
}

QState init_register(std::initializer_list<RegisterEntry> entries) {
  return init_register(std::span<const RegisterEntry>(entries.begin(), entries.size()));
}

QState tensor(const QState& a, const QState& b) {
  std::vector<Subsystem> subs = a.subsystems();
  subs.insert(subs.end(), b.subsystems().begin(), b.subsystems().end());
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  Eigen::VectorXcd amps(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    amps.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return QState(std::move(subs), std::move(amps));
}

QState append(const QState& state, const RegisterEntry& entry) {
  if (std::abs(entry.amplitudes.squaredNorm() - 1.0) > tol::normalization) {
    throw std::invalid_argument("initial amplitudes of " + entry.label + " are not normalized");
  }
  if (state.contains(entry.label)) throw std::invalid_argument("duplicate label: " + entry.label);
  return tensor(state, QState({Subsystem(entry.label, entry.kind)}, entry.amplitudes));
}

QState apply_gate(const QState& state, std::span<const std::string> targets,
                  const Eigen::MatrixXcd& u) {
  const std::size_t k = targets.size();
  if (k == 0) throw std::invalid_argument("gate needs at least one target");
  if (static_cast<std::size_t>(u.rows()) != dim(k) || u.cols() != u.rows()) {
    throw std::invalid_argument("gate matrix size does not match target count");
  }
  if (!is_unitary(u, tol::unitarity)) throw std::invalid_argument("gate matrix is not unitary");

  std::vector<std::size_t> shifts(k);
  std::size_t mask = 0;
  for (std::size_t t = 0; t < k; ++t) {
    shifts[t] = state.shift_of(state.index_of(targets[t]));
    if (mask & (std::size_t{1} << shifts[t])) throw std::invalid_argument("repeated gate target");
    mask |= std::size_t{1} << shifts[t];
  }

  // offsets[j]: global index bits for local index j
  std::vector<std::size_t> offsets(dim(k), 0);
  for (std::size_t j = 0; j < dim(k); ++j) {
    for (std::size_t t = 0; t < k; ++t) {
      if ((j >> (k - 1 - t)) & 1u) offsets[j] |= std::size_t{1} << shifts[t];
    }
  }

  const auto& in = state.amplitudes();
  Eigen::VectorXcd out = in;
  Eigen::VectorXcd local(static_cast<Eigen::Index>(dim(k)));
  for (std::size_t base = 0; base < static_cast<std::size_t>(in.size()); ++base) {
    if (base & mask) continue;
    for (std::size_t j = 0; j < dim(k); ++j) local(j) = in(base | offsets[j]);
    const Eigen::VectorXcd mixed = u * local;
    for (std::size_t j = 0; j < dim(k); ++j) out(base | offsets[j]) = mixed(j);
  }
  return QState(state.subsystems(), std::move(out));
}

QState apply_gate(const QState& state, std::initializer_list<std::string> targets,
                  const Eigen::MatrixXcd& u) {
  return apply_gate(state, std::span<const std::string>(targets.begin(), targets.size()), u);
}

QState apply_1q(const QState& state, std::string_view target, const Eigen::Matrix2cd& u) {
  const std::string t(target);
  return apply_gate(state, std::span<const std::string>(&t, 1), Eigen::MatrixXcd(u));
}

QState apply_reflection(const QState& state, std::string_view photon_pol,
                        std::string_view ensemble, const ReflectionCoefficientsd& coeffs) {
  const std::size_t pi = state.index_of(photon_pol);
  const std::size_t ei = state.index_of(ensemble);
  if (state.subsystems()[pi].kind != Kind::polarization) {
    throw std::invalid_argument(std::string(photon_pol) + " is not a polarization subsystem");
  }
  if (state.subsystems()[ei].kind != Kind::ensemble) {
    throw std::invalid_argument(std::string(ensemble) + " is not an ensemble subsystem");
  }
  if (std::abs(coeffs.r) > 1.0 + tol::conservation ||
      std::abs(coeffs.r0) > 1.0 + tol::conservation) {
    throw std::invalid_argument("reflection coefficient with modulus above 1");
  }
  const std::size_t ps = state.shift_of(pi);
  const std::size_t es = state.shift_of(ei);
  Eigen::VectorXcd out = state.amplitudes();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (bit_at(i, ps) == 0) out(i) *= bit_at(i, es) == 0 ? coeffs.r0 : coeffs.r;
  }
  return QState(state.subsystems(), std::move(out));
}

QState project_out(const QState& state, std::string_view target, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  const std::size_t ti = state.index_of(target);
  const std::size_t shift = state.shift_of(ti);
  std::vector<Subsystem> subs = state.subsystems();
  subs.erase(subs.begin() + static_cast<std::ptrdiff_t>(ti));

  const auto& in = state.amplitudes();
  Eigen::VectorXcd out(in.size() / 2);
  const std::size_t low_mask = (std::size_t{1} << shift) - 1;
  for (std::size_t j = 0; j < static_cast<std::size_t>(out.size()); ++j) {
    const std::size_t high = (j & ~low_mask) << 1;
    const std::size_t idx = high | (static_cast<std::size_t>(bit) << shift) | (j & low_mask);
    out(static_cast<Eigen::Index>(j)) = in(static_cast<Eigen::Index>(idx));
  }
  return QState(std::move(subs), std::move(out));
}

std::array<HeraldedOutcome, 2> measure(const QState& state, std::string_view target,
                                       Basis basis) {
  const double total = state.norm_sq();
  if (total <= 0.0) throw std::invalid_argument("cannot measure a zero-norm state");
  const auto& sub = state.subsystem(target);

  // Rotating the Hadamard basis onto the computational one and back again
  // leaves the collapsed states expressed in the original basis.
  const QState rotated = basis == Basis::hadamard ? apply_1q(state, target, hadamard()) : state;
  const std::size_t shift = rotated.shift_of(rotated.index_of(target));

  std::array<HeraldedOutcome, 2> out;
  for (int b = 0; b < 2; ++b) {
    Eigen::VectorXcd amps = rotated.amplitudes();
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      if (bit_at(i, shift) != b) amps(i) = 0;
    }
    const double p = amps.squaredNorm();
    if (p > 0) amps /= std::sqrt(p);
    QState collapsed(rotated.subsystems(), std::move(amps));
    if (basis == Basis::hadamard) collapsed = apply_1q(collapsed, target, hadamard());
    auto& o = out[b];
    o.outcome_label = basis == Basis::hadamard ? std::string(1, b == 0 ? '+' : '-')
                                               : std::string(1, sub.basis[b]);
    o.probability = p / total;
    o.collapsed = std::move(collapsed);
  }
  return out;
}

QState renormalized(const QState& state) {
  const double n = state.norm_sq();
  if (n <= 0.0) throw std::invalid_argument("cannot renormalize a zero-norm state");
  return QState(state.subsystems(), state.amplitudes() / std::sqrt(n));
}

QState reorder(const QState& state, std::span<const std::string> labels) {
  const std::size_t n = state.num_subsystems();
  if (labels.size() != n) throw std::invalid_argument("register mismatch");
  std::vector<std::size_t> src(n);  // new position -> old position
  std::vector<Subsystem> subs;
  subs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    src[i] = state.index_of(labels[i]);
    subs.push_back(state.subsystems()[src[i]]);
  }
  const auto& in = state.amplitudes();
  Eigen::VectorXcd out(in.size());
  for (std::size_t j = 0; j < static_cast<std::size_t>(in.size()); ++j) {
    std::size_t old = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((j >> (n - 1 - i)) & 1u) old |= std::size_t{1} << state.shift_of(src[i]);
    }
    out(static_cast<Eigen::Index>(j)) = in(static_cast<Eigen::Index>(old));
  }
  return QState(std::move(subs), std::move(out));
}

namespace {

std::vector<std::string> labels_of(const QState& s) {
  std::vector<std::string> out;
  for (const auto& sub : s.subsystems()) out.push_back(sub.label);
  return out;
}

}  // namespace

double fidelity(const QState& a, const QState& b) {
  if (a.num_subsystems() != b.num_subsystems()) throw std::invalid_argument("register mismatch");
  for (const auto& s : a.subsystems()) {
    if (!b.contains(s.label)) throw std::invalid_argument("register mismatch: " + s.label);
  }
  const auto labels = labels_of(a);
  const QState bb = reorder(b, labels);
  const double na = a.norm_sq();
  const double nb = bb.norm_sq();
  if (na <= 0 || nb <= 0) throw std::invalid_argument("fidelity of a zero-norm state");
  return std::norm(a.amplitudes().dot(bb.amplitudes())) / (na * nb);
}

double subsystem_fidelity(const QState& state, const QState& target) {
  std::vector<std::string> order = labels_of(target);
  for (const auto& s : target.subsystems()) {
    if (!state.contains(s.label)) throw std::invalid_argument("register mismatch: " + s.label);
  }
  for (const auto& s : state.subsystems()) {
    if (!target.contains(s.label)) order.push_back(s.label);
  }
  const QState st = reorder(state, order);
  const double ns = st.norm_sq();
  const double nt = target.norm_sq();
  if (ns <= 0 || nt <= 0) throw std::invalid_argument("fidelity of a zero-norm state");

  // Rows index the target subsystems, columns the traced-out rest.
  const Eigen::Index rest = st.amplitudes().size() / target.amplitudes().size();
  const Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(st.amplitudes().data(), target.amplitudes().size(), rest);
  const Eigen::RowVectorXcd overlaps = target.amplitudes().adjoint() * m;
  return overlaps.squaredNorm() / (ns * nt);
}

std::string to_text(const QState& state) {
  std::ostringstream os;
  os << "#";
  for (const auto& s : state.subsystems()) {
    os << ' ' << s.label << ':' << to_string(s.kind) << ':' << s.basis[0] << s.basis[1];
  }
  os << '\n';
  const auto& a = state.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    os << state.basis_label(static_cast<std::size_t>(i)) << ' ' << format_double(a(i).real())
       << ' ' << format_double(a(i).imag()) << '\n';
  }
  return os.str();
}

QState from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line.empty() || line[0] != '#') {
    throw std::invalid_argument("missing register header");
  }
  std::vector<Subsystem> subs;
  std::istringstream header(line.substr(1));
  std::string tok;
  while (header >> tok) {
    const auto c1 = tok.find(':');
    const auto c2 = tok.rfind(':');
    if (c1 == std::string::npos || c2 == c1 || tok.size() != c2 + 3) {
      throw std::invalid_argument("bad subsystem token: " + tok);
    }
    subs.emplace_back(tok.substr(0, c1), kind_from_string(tok.substr(c1 + 1, c2 - c1 - 1)),
                      std::array<char, 2>{tok[c2 + 1], tok[c2 + 2]});
  }
  QState shape(subs, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim(subs.size()))));
  Eigen::VectorXcd amps = shape.amplitudes();
  std::vector<bool> filled(static_cast<std::size_t>(amps.size()), false);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string letters;
    double re = 0, im = 0;
    if (!(ls >> letters >> re >> im)) throw std::invalid_argument("bad amplitude line: " + line);
    std::size_t index = 0;
    if (letters.size() != subs.size()) throw std::invalid_argument("bad basis label: " + letters);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const int bit = letters[i] == subs[i].basis[0]   ? 0
                      : letters[i] == subs[i].basis[1] ? 1
                                                       : -1;
      if (bit < 0) throw std::invalid_argument("bad basis label: " + letters);
      index = (index << 1) | static_cast<std::size_t>(bit);
    }
    amps(static_cast<Eigen::Index>(index)) = cplx(re, im);
    filled[index] = true;
  }
  if (!std::all_of(filled.begin(), filled.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("missing amplitude lines");
  }
  return QState(std::move(subs), std::move(amps));
}

}  // namespace qrep
