#include "qrep/reference_states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qrep::reference {

namespace {

Subsystem pol(std::string label) { return {std::move(label), Kind::polarization}; }
Subsystem ens(std::string label) { return {std::move(label), Kind::ensemble}; }

const double kHalf = 0.5;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

QState make_state(std::vector<Subsystem> subsystems,
                  std::initializer_list<std::pair<std::string_view, cplx>> amplitudes) {
  const QState shape(subsystems,
                     Eigen::VectorXcd::Zero(Eigen::Index{1} << subsystems.size()));
  Eigen::VectorXcd amps = shape.amplitudes();
  for (const auto& [letters, value] : amplitudes) {
    if (letters.size() != subsystems.size()) throw std::invalid_argument("bad basis label");
    Eigen::Index index = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const auto& b = subsystems[i].basis;
      if (letters[i] != b[0] && letters[i] != b[1]) throw std::invalid_argument("bad basis label");
      index = (index << 1) | (letters[i] == b[1] ? 1 : 0);
    }
    amps(index) = value;
  }
  return QState(std::move(subsystems), std::move(amps));
}

QState cpf_ideal(cplx mu, cplx nu, cplx mu_e, cplx nu_e) {
  return make_state({pol("p"), ens("E")}, {{"hG", -mu * mu_e},
                                            {"hS", mu * nu_e},
                                            {"vG", nu * mu_e},
                                            {"vS", nu * nu_e}});
}

QState pcg_even_ideal(cplx mu_a, cplx nu_a, cplx mu_b, cplx nu_b) {
  return make_state({ens("E_A"), ens("E_B")}, {{"SS", nu_a * nu_b}, {"GG", -mu_a * mu_b}});
}

QState pcg_odd_ideal(cplx mu_a, cplx nu_a, cplx mu_b, cplx nu_b) {
  return make_state({ens("E_A"), ens("E_B")}, {{"SG", nu_a * mu_b}, {"GS", -mu_a * nu_b}});
}

QState phi_pe1() {
  // 1/2 [h_a (v_b S_A - h_b G_A) + v_a (h_b S_A - v_b G_A)] x (G_B + S_B)/sqrt2
  const double c = kHalf * kInvSqrt2;
  return make_state({pol("a"), pol("b"), ens("E_A"), ens("E_B")},
                    {{"hvSG", c}, {"hvSS", c}, {"hhGG", -c}, {"hhGS", -c},
                     {"vhSG", c}, {"vhSS", c}, {"vvGG", -c}, {"vvGS", -c}});
}

QState phi_pe2() {
  // (v_b S_A - h_b G_A)/sqrt2 x (G_B + S_B)/sqrt2
  return make_state({pol("b"), ens("E_A"), ens("E_B")},
                    {{"vSG", kHalf}, {"vSS", kHalf}, {"hGG", -kHalf}, {"hGS", -kHalf}});
}

QState phi_pe3() {
  // 1/2 [v_b (S_A S_B + G_A G_B) - h_b (G_A S_B + S_A G_B)]
  return make_state({pol("b"), ens("E_A"), ens("E_B")},
                    {{"vSS", kHalf}, {"vGG", kHalf}, {"hGS", -kHalf}, {"hSG", -kHalf}});
}

QState psi_e() {
  // (G_B1 S_B2 S_A G_C + S_B1 G_B2 G_A S_C)/sqrt2, register A, B1, B2, C
  return make_state({ens("E_A"), ens("E_B1"), ens("E_B2"), ens("E_C")},
                    {{"SGSG", kInvSqrt2}, {"GSGS", kInvSqrt2}});
}

QState psi_e_prime() {
  // 1/2 (G_B1 G_B2 + S_B1 S_B2)(S_A G_C + G_A S_C)
  return make_state({ens("E_A"), ens("E_B1"), ens("E_B2"), ens("E_C")},
                    {{"SGGG", kHalf}, {"SSSG", kHalf}, {"GGGS", kHalf}, {"GSSS", kHalf}});
}

}  // namespace qrep::reference
