#pragma once

// Ideal (r = 1, r0 = -1) states written out amplitude by amplitude. They are
// built from basis letters only, never by running the gates, so they can serve
// as independent expectations.

#include <initializer_list>
#include <string_view>
#include <utility>
#include <vector>

#include "qrep/qstate.hpp"

namespace qrep::reference {

// Zero state on `subsystems` with the listed basis amplitudes filled in.
QState make_state(std::vector<Subsystem> subsystems,
                  std::initializer_list<std::pair<std::string_view, cplx>> amplitudes);

// CPF on (mu|h> + nu|v>)_p (mu_e|G> + nu_e|S>)_E. Register: p, E.
QState cpf_ideal(cplx mu, cplx nu, cplx mu_e, cplx nu_e);

// Parity branches on (mu_a|G> + nu_a|S>)(mu_b|G> + nu_b|S>). Register: E_A, E_B.
QState pcg_even_ideal(cplx mu_a, cplx nu_a, cplx mu_b, cplx nu_b);
QState pcg_odd_ideal(cplx mu_a, cplx nu_a, cplx mu_b, cplx nu_b);

// Distribution stages. Registers: PE1 a, b, E_A, E_B; PE2 and PE3 b, E_A, E_B.
QState phi_pe1();
QState phi_pe2();
QState phi_pe3();

// Swap stages on E_A, E_B1, E_B2, E_C: the GHZ state after an odd first parity
// check, and the product state after an even second check.
QState psi_e();
QState psi_e_prime();

}  // namespace qrep::reference
