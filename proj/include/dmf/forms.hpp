#ifndef DMF_FORMS_HPP
#define DMF_FORMS_HPP

#include <functional>
#include <vector>

#include "dmf/useries.hpp"

namespace dmf {

struct BaseForms {
  const Field* f = nullptr;
  Exp order = 0;
  USeries g, g2, delta, h;
};

// g, g_2 from lattice sums of Goss polynomials, then Delta and h.
BaseForms bootstrap_base_forms(const Field* f, Exp order);

// sum over monic a with q^deg(a) * val(P) < order of w(a) P(u_a).
USeries lattice_sum(const Field* f, const USeries& poly, Exp order,
                    const std::function<CoeffElem(const std::vector<Fq>&)>& weight);

// 1 + (-1)^k [k]...[1] sum_a G_(q^k - 1)(u_a).
USeries eisenstein_gk(const Field* f, int k, Exp order);

// E_k = sum_a a u_a^(q^k); E = E_0.
USeries big_e_series(const Field* f, Exp order, int k);

// g_0..g_kmax and m_0..m_kmax from their recursions.
std::vector<USeries> ortho_family(const BaseForms& b, int kmax);
std::vector<USeries> para_family(const BaseForms& b, int kmax);

enum class StarRoute { A, B };
// g_0^*..g_kmax^* at the base order.
std::vector<USeries> gkstar_family(const BaseForms& b, int kmax, StarRoute route);

// x_0 = -E, x_1 = -E g - h and the weight recursion.
std::vector<USeries> x_family(const BaseForms& b, const USeries& e, int kmax);

enum class ExtremalRoute { XK, D1, Lattice };
// E_0..E_kmax. The D1 route uses E_k = (-1)^(k+1) D_1 g_k / ([1]...[k]) for
// k >= 1 (see d1_route_printed) and E_0 = E.
std::vector<USeries> extremal_family(const BaseForms& b, int kmax, ExtremalRoute route);
// (-1)^k D_1 g_k / ([1]...[k]) with the printed sign, for comparison.
USeries d1_route_printed(const BaseForms& b, int k);

}  // namespace dmf

#endif
