#ifndef DMF_DEFORMATIONS_HPP
#define DMF_DEFORMATIONS_HPP

#include "dmf/forms.hpp"

namespace dmf {

// Power series d with constant term 1 solving d = (t - theta^q) Delta tau^2 d + g tau d.
USeries solve_d2(const BaseForms& b, Exp order);
// d - (t - theta^q) Delta tau^2 d - g tau d.
USeries eq32_residual(const BaseForms& b, const USeries& d);

// psi^* = d_2 / u + Delta tau^2(d_2) / u^q.
USeries psi_star(const BaseForms& b, const USeries& d2);
// psi^* = d_2 / u + (d_2 - g tau d_2) / ((t - theta^q) u^q).
USeries psi_star_alt(const BaseForms& b, const USeries& d2);

// Y = Delta tau^2 Y / (t - theta^(q^2)) + g tau Y / (t - theta^q) + psi^*, with
// Y(0) = 0 for q > 2 and Y(0) = t + theta for q = 2.
USeries solve_d3_star(const BaseForms& b, const USeries& psi, Exp order);
USeries d3_residual(const BaseForms& b, const USeries& d3, const USeries& psi);

// E(z, t) = -h tau d_2 and sum_c chi_t(c) u_c.
USeries deform_e_product(const BaseForms& b, const USeries& d2);
USeries deform_e_lattice(const Field* f, Exp order);

// Right-hand side of the g_k^* identity in terms of h, d_2, d_3^*.
USeries thm29_rhs(const BaseForms& b, const USeries& d2, const USeries& d3, int k);
// -1/h in terms of d_2, d_3^* (the k = 0 identity rearranged).
USeries thm29_k0_rhs(const BaseForms& b, const USeries& d2, const USeries& d3);

// d_2 (1 + sum_i (t - theta^(q^k))...(t - theta^(q^(i+1))) u^(q^k - q^i)) + L_k^* u^(q^k + q - 2),
// certified below q^k + 2q - 2. Rejects q = 2 and k < 1.
USeries cor6_formula(const BaseForms& b, const USeries& d2, int k);
// Same with the printed correction -(t - theta) u^(q^k + q - 2), for comparison.
USeries cor6_formula_printed(const BaseForms& b, const USeries& d2, int k);

struct DeformCatalog {
  BaseForms base;
  Exp order = 0;
  USeries d2, d2tau, psistar, d3star, e_deform;
  bool d2_integral = false;
  bool d3star_integral = false;
};

// Every object certified to at least the given order.
DeformCatalog build_deformations(const Field* f, Exp order);

// Nonzero coefficients all sit at exponents congruent to m mod q - 1.
bool has_type(const USeries& s, std::int64_t m);

}  // namespace dmf

#endif
