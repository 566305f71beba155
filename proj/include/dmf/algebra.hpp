#ifndef DMF_ALGEBRA_HPP
#define DMF_ALGEBRA_HPP

#include <array>
#include <vector>

#include "dmf/bipoly.hpp"
#include "dmf/coeff.hpp"
#include "dmf/field.hpp"

namespace dmf {

// [i] = theta^(q^i) - theta, for i >= 1.
BiPoly bracket(const Field* f, int i);
// d_0 = 1, d_i = [i] d_(i-1)^q.
BiPoly dfact(const Field* f, int i);
// (theta - theta^q)(theta - theta^(q^2)) ... (theta - theta^(q^i)); 1 for i = 0.
BiPoly lfact(const Field* f, int i);
// [1][2]...[k]; 1 for k = 0.
BiPoly bracket_product(const Field* f, int k);
// t - theta^(q^k).
BiPoly t_minus_theta_qk(const Field* f, int k);
// (t - theta^(q^k)) ... (t - theta); L_(-1)^* = 1.
BiPoly lstar(const Field* f, int k);
// (t - theta^(q^k)) (t - theta^(q^(k-1))) ... (t - theta^(q^(i+1))); 1 when i >= k.
BiPoly t_chain(const Field* f, int k, int i);

// Monic polynomials of degree d as low-to-high coefficient vectors (leading
// 1 included), ordered lexicographically from the top coefficient down.
std::vector<std::vector<Fq>> enumerate_monic(const Field* f, int d);
// a(theta) and chi_t(a) = a(t).
BiPoly theta_poly(const Field* f, const std::vector<Fq>& coeffs);
BiPoly t_poly(const Field* f, const std::vector<Fq>& coeffs);

using Mat2 = std::array<std::array<BiPoly, 2>, 2>;

struct RhoMatrix {
  int l = 0;
  std::vector<std::vector<BiPoly>> m;  // rows by Y-exponent, columns by basis index
};

// Matrix of the l-th symmetric power of chi_t(gamma) on X^(l-r) Y^r.
RhoMatrix rho_symmetric(const Mat2& gamma, int l);
RhoMatrix matmul(const RhoMatrix& a, const RhoMatrix& b);
BiPoly determinant(const std::vector<std::vector<BiPoly>>& m);

}  // namespace dmf

#endif
