#ifndef DMF_CARLITZ_HPP
#define DMF_CARLITZ_HPP

#include <vector>

#include "dmf/useries.hpp"

namespace dmf {

// F_q-linear polynomial sum_i c[i] X^(q^i) with theta-only coefficients.
struct AddPoly {
  const Field* f = nullptr;
  std::vector<BiPoly> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  friend AddPoly operator+(const AddPoly& a, const AddPoly& b);
  friend bool operator==(const AddPoly& a, const AddPoly& b) { return a.c == b.c; }
};

// (a o b)(X) = a(b(X)).
AddPoly compose(const AddPoly& a, const AddPoly& b);

// rho_a for a in F_q[theta], given low-to-high or as a theta-only BiPoly.
AddPoly carlitz_action(const Field* f, const std::vector<Fq>& a);
AddPoly carlitz_action(const BiPoly& a);

// u^(q^d) rho_a(1/u) for deg a = d, an exact polynomial in u.
USeries reciprocal_poly(const AddPoly& rho);

// u_a = u(az) for nonzero a; u_(lambda a) = lambda^-1 u_a.
USeries u_sub_a(const Field* f, const std::vector<Fq>& a, Exp order);
// 1/u_a = lambda u^(-q^d) rho~_(a/lambda)(u), an exact Laurent polynomial.
USeries u_sub_a_inverse(const Field* f, const std::vector<Fq>& a);
// P(u_a) to the given order for an exact polynomial P, evaluated as
// tau^K(u_a) * sum_j c_j (1/u_a)^(q^K - j) with q^K >= deg P.
USeries poly_at_ua(const USeries& p, const std::vector<Fq>& a, Exp order);
// f_a = u^(-q^deg a) u_a, a power series with constant term 1.
USeries f_sub_a(const Field* f, const std::vector<Fq>& a, Exp order);

// sum_n zeta^(q^n) / d_n, in the series variable, below the given order.
USeries carlitz_exponential(const Field* f, Exp order);

// P(s) for P with nonnegative exponents and s of positive valuation.
USeries compose(const USeries& p, const USeries& s);

// Goss polynomial G_alpha from the memoized recursion.
USeries goss_polynomial(const Field* f, int alpha);
// G_1..G_alpha_max read off the generating identity; index 0 is unused.
std::vector<USeries> goss_generating(const Field* f, int alpha_max);

}  // namespace dmf

#endif
