#include "qrep/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace qrep {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Click click_of(int bit) { return bit == 0 ? Click::h : Click::v; }

QState zero_like(const QState& s) {
  return QState(s.subsystems(), Eigen::VectorXcd::Zero(s.amplitudes().size()));
}

// Fixes the global phase so the first non-negligible amplitude is real positive.
QState canonical_phase(const QState& s) {
  const auto& a = s.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i)) > 1e-12) {
      const cplx phase = std::conj(a(i)) / std::abs(a(i));
      return QState(s.subsystems(), a * phase);
    }
  }
  return s;
}

struct SwapRegister {
  std::string remote1, middle1, middle2, remote2;
  QState joint;
};

SwapRegister combine(const QState& ab1, const QState& b2c) {
  auto check = [](const QState& s, const char* name) {
    if (s.num_subsystems() != 2 || s.subsystems()[0].kind != Kind::ensemble ||
        s.subsystems()[1].kind != Kind::ensemble) {
      throw std::invalid_argument(std::string(name) + " must be a two-ensemble register");
    }
    if (s.norm_sq() <= 0) throw std::invalid_argument(std::string(name) + " has zero norm");
  };
  check(ab1, "first pair");
  check(b2c, "second pair");
  for (const auto& s : ab1.subsystems()) {
    if (b2c.contains(s.label)) throw std::invalid_argument("register mismatch: shared label " + s.label);
  }
  return {ab1.subsystems()[0].label, ab1.subsystems()[1].label, b2c.subsystems()[0].label,
          b2c.subsystems()[1].label, tensor(renormalized(ab1), renormalized(b2c))};
}

QState apply_correction(const QState& s, std::string_view target, Pauli p) {
  if (s.norm_sq() <= 0) return s;
  return apply_1q(s, target, pauli_matrix(p));
}

// Drops the two middle ensembles by keeping the leading Schmidt vector of
// the remote pair.
std::pair<QState, double> retire_middle(const SwapRegister& reg, const QState& s) {
  const std::vector<std::string> order{reg.middle1, reg.middle2, reg.remote1, reg.remote2};
  const QState st = reorder(s, order);
  const QState remote_shape = project_out(project_out(st, reg.middle1, 0), reg.middle2, 0);
  if (st.norm_sq() <= 0) return {zero_like(remote_shape), 1.0};

  Eigen::Matrix4cd m;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) m(row, col) = st.amplitudes()(4 * row + col);
  }
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double weight = sv(0) * sv(0) / sv.squaredNorm();
  const Eigen::Vector4cd remote = svd.matrixV().col(0).conjugate();
  return {canonical_phase(QState(remote_shape.subsystems(), remote)), weight};
}

}  // namespace

std::string_view to_string(Click c) { return c == Click::h ? "h" : "v"; }

std::array<DistributionBranch, 4> distribute(const ReflectionCoefficientsd& coeffs_a,
                                             const ReflectionCoefficientsd& coeffs_b,
                                             const ChannelNoise& noise_a,
                                             const ChannelNoise& noise_b) {
  const std::string ea(kEnsembleA), eb(kEnsembleB);
  const Eigen::Vector2cd plus(kInvSqrt2, kInvSqrt2);

  QState x = distribute_pair(noise_a, noise_b);
  x = append(x, {ea, Kind::ensemble, plus});
  x = append(x, {eb, Kind::ensemble, plus});

  // Alice: H, CPF, H on photon a; Bob the same on photon b.
  x = apply_1q(x, "a", hadamard());
  x = cpf(x, "a", ea, coeffs_a);
  x = apply_1q(x, "a", hadamard());
  x = apply_1q(x, "b", hadamard());
  x = cpf(x, "b", eb, coeffs_b);
  x = apply_1q(x, "b", hadamard());

  const std::string pa = port_label("a"), pb = port_label("b");
  std::array<DistributionBranch, 4> out;
  for (int ab = 0; ab < 4; ++ab) {
    const int alice = ab >> 1, bob = ab & 1;
    const QState clicked = project_out(project_out(x, "a", alice), "b", bob);

    DistributionBranch& br = out[static_cast<std::size_t>(ab)];
    br.alice = click_of(alice);
    br.bob = click_of(bob);
    br.outcome.outcome_label = std::string(to_string(br.alice)) + std::string(to_string(br.bob));
    br.outcome.probability = clicked.norm_sq();

    // The ports factor out of the ensemble state; keep the heaviest one.
    QState best;
    double best_p = -1.0;
    for (int ports = 0; ports < 4; ++ports) {
      QState ens = project_out(project_out(clicked, pa, ports >> 1), pb, ports & 1);
      const double p = ens.norm_sq();
      br.port_probabilities[static_cast<std::size_t>(ports)] =
          clicked.norm_sq() > 0 ? p / clicked.norm_sq() : 0.0;
      if (p > best_p) {
        best_p = p;
        best = std::move(ens);
      }
    }
    QState ens = best.norm_sq() > 0 ? renormalized(best) : best;
    if (br.alice == Click::v) {
      ens = apply_correction(ens, ea, Pauli::X);
      br.outcome.corrections.push_back({Pauli::X, ea});
    }
    if (br.bob == Click::v) {
      ens = apply_correction(ens, eb, Pauli::X);
      br.outcome.corrections.push_back({Pauli::X, eb});
    }
    br.outcome.collapsed = std::move(ens);
  }
  return out;
}

Pauli table1_correction(Click p1, Click p2) {
  if (p1 == Click::v) return p2 == Click::h ? Pauli::I : Pauli::Z;
  return p2 == Click::v ? Pauli::Y : Pauli::X;
}

Pauli one_pcg_correction(Click p, int bit1, int bit2) {
  // Equal middle bits play the role of an even second parity check.
  return table1_correction(p, bit1 == bit2 ? Click::h : Click::v);
}

QState psi_plus(std::string_view first, std::string_view second) {
  return QState({Subsystem(std::string(first), Kind::ensemble),
                 Subsystem(std::string(second), Kind::ensemble)},
                Eigen::Vector4cd(0, kInvSqrt2, kInvSqrt2, 0));
}

QState swap_input_ab1() {
  return QState({Subsystem("E_A", Kind::ensemble), Subsystem("E_B1", Kind::ensemble)},
                Eigen::Vector4cd(0, kInvSqrt2, -kInvSqrt2, 0));
}

QState swap_input_b2c() { return psi_plus("E_B2", "E_C"); }

QState to_minus_convention(const QState& pair, std::string_view ensemble) {
  return apply_1q(pair, ensemble, pauli_z());
}

std::vector<SwapRecord> swap_two_pcg(const QState& state_ab1, const QState& state_b2c,
                                     const ReflectionCoefficientsd& coeffs) {
  const SwapRegister reg = combine(state_ab1, state_b2c);
  std::vector<SwapRecord> out;

  const ParityOutcome first = pcg(reg.joint, reg.middle1, reg.middle2, coeffs);
  for (const HeraldedOutcome* o1 : {&first.odd, &first.even}) {
    QState x = apply_1q(o1->collapsed, reg.middle1, hadamard());
    x = apply_1q(x, reg.middle2, hadamard());
    const ParityOutcome second = pcg(x, reg.middle1, reg.middle2, coeffs);
    for (const HeraldedOutcome* o2 : {&second.even, &second.odd}) {
      SwapRecord rec;
      rec.variant = SwapVariant::two_pcg;
      rec.p1 = o1 == &first.even ? Click::h : Click::v;
      rec.p2 = o2 == &second.even ? Click::h : Click::v;
      rec.correction = table1_correction(rec.p1, *rec.p2);
      rec.probability = o1->probability * o2->probability;
      auto [remote, weight] = retire_middle(reg, o2->collapsed);
      rec.final_state = apply_correction(remote, reg.remote1, rec.correction);
      rec.middle_weight = weight;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<SwapRecord> swap_one_pcg(const QState& state_ab1, const QState& state_b2c,
                                     const ReflectionCoefficientsd& coeffs) {
  const SwapRegister reg = combine(state_ab1, state_b2c);
  std::vector<SwapRecord> out;

  const ParityOutcome parity = pcg(reg.joint, reg.middle1, reg.middle2, coeffs);
  for (const HeraldedOutcome* o : {&parity.odd, &parity.even}) {
    QState x = o->collapsed;
    x = apply_1q(x, reg.middle1, hadamard());
    x = apply_1q(x, reg.middle2, hadamard());
    for (int bits = 0; bits < 4; ++bits) {
      const int b1 = bits >> 1, b2 = bits & 1;
      const QState remote = project_out(project_out(x, reg.middle1, b1), reg.middle2, b2);

      SwapRecord rec;
      rec.variant = SwapVariant::one_pcg;
      rec.p1 = o == &parity.even ? Click::h : Click::v;
      rec.middle_bits = std::array<int, 2>{b1, b2};
      rec.correction = one_pcg_correction(rec.p1, b1, b2);
      rec.probability = o->probability * remote.norm_sq();
      const QState normed = remote.norm_sq() > 0 ? renormalized(remote) : remote;
      rec.final_state = apply_correction(normed, reg.remote1, rec.correction);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

double swap_efficiency(const ReflectionCoefficientsd& coeffs, SwapVariant variant) {
  const auto records = variant == SwapVariant::one_pcg
                           ? swap_one_pcg(swap_input_ab1(), swap_input_b2c(), coeffs)
                           : swap_two_pcg(swap_input_ab1(), swap_input_b2c(), coeffs);
  double total = 0.0;
  for (const auto& r : records) total += r.probability;
  return total;
}

}  // namespace qrep
