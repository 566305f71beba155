#include "dmf/deformations.hpp"

#include "dmf/algebra.hpp"
#include "dmf/carlitz.hpp"
#include "dmf/error.hpp"

namespace dmf {

namespace {

CoeffElem K(const BiPoly& p) { return CoeffElem(p); }

CoeffElem inv(const BiPoly& p) { return CoeffElem::fraction(BiPoly::constant(p.field(), 1), p); }

// Iterates y <- step(y) from a series certified below 1; each pass
// multiplies the certified order by q.
template <class Step>
USeries contract(USeries y, Exp order, Step step) {
  while (y.order() < order) {
    Exp before = y.order();
    y = step(y).truncated(order);
    if (y.order() <= before) throw PrecisionError("base forms too short for the requested order");
  }
  return y;
}

}  // namespace

bool has_type(const USeries& s, std::int64_t m) {
  std::int64_t r = s.field()->q() - 1;
  for (const auto& t : s.terms())
    if (((t.first - m) % r + r) % r != 0) return false;
  return true;
}

USeries solve_d2(const BaseForms& b, Exp order) {
  CoeffElem c = K(t_minus_theta_qk(b.f, 1));
  auto step = [&](const USeries& y) { return c * (b.delta * y.tau(2)) + b.g * y.tau(1); };
  USeries d = contract(USeries::one(b.f, 1), order, step);
  if (!d.coeff(0).is_one()) throw DomainError("internal inconsistency: d_2 constant term");
  return d;
}

USeries eq32_residual(const BaseForms& b, const USeries& d) {
  return d - K(t_minus_theta_qk(b.f, 1)) * (b.delta * d.tau(2)) - b.g * d.tau(1);
}

USeries psi_star(const BaseForms& b, const USeries& d2) {
  int q = b.f->q();
  return d2.shifted(-1) + (b.delta * d2.tau(2)).shifted(-q);
}

USeries psi_star_alt(const BaseForms& b, const USeries& d2) {
  int q = b.f->q();
  return d2.shifted(-1) + inv(t_minus_theta_qk(b.f, 1)) * (d2 - b.g * d2.tau(1)).shifted(-q);
}

USeries solve_d3_star(const BaseForms& b, const USeries& psi, Exp order) {
  const Field* f = b.f;
  CoeffElem c2 = inv(t_minus_theta_qk(f, 2)), c1 = inv(t_minus_theta_qk(f, 1));
  auto step = [&](const USeries& y) { return c2 * (b.delta * y.tau(2)) + c1 * (b.g * y.tau(1)) + psi; };
  CoeffElem c0 = f->q() == 2 ? K(BiPoly::t(f) + BiPoly::theta(f)) : CoeffElem(f);
  USeries start = USeries::constant(c0, 1);
  // the constant term must reproduce itself under the twisted equation
  if (step(start).coeff(0) != c0) throw DomainError("internal inconsistency: d_3^* constant term");
  return contract(start, order, step);
}

USeries d3_residual(const BaseForms& b, const USeries& d3, const USeries& psi) {
  const Field* f = b.f;
  return d3 - inv(t_minus_theta_qk(f, 2)) * (b.delta * d3.tau(2)) - inv(t_minus_theta_qk(f, 1)) * (b.g * d3.tau(1)) - psi;
}

USeries deform_e_product(const BaseForms& b, const USeries& d2) { return -(b.h * d2.tau(1)); }

USeries deform_e_lattice(const Field* f, Exp order) {
  return lattice_sum(f, USeries::u(f), order, [f](const std::vector<Fq>& a) { return CoeffElem(t_poly(f, a)); });
}

USeries thm29_rhs(const BaseForms& b, const USeries& d2, const USeries& d3, int k) {
  const Field* f = b.f;
  int q = f->q();
  std::vector<USeries::TermT> lt{{-qpow(q, k), CoeffElem::constant(f, 1)}};
  for (int i = 0; i < k; ++i) lt.emplace_back(-qpow(q, i), K(t_chain(f, k, i)));
  USeries laurent = USeries::from_terms(f, std::move(lt), kExact);
  USeries t2 = d2.tau(k + 1);
  USeries inner = K(t_chain(f, k, 0)) * (t2 * d3) - d2 * (t2 * laurent + inv(t_minus_theta_qk(f, k + 1)) * d3.tau(k + 1));
  return b.h.tau(k) * inner;
}

USeries thm29_k0_rhs(const BaseForms& b, const USeries& d2, const USeries& d3) {
  const Field* f = b.f;
  USeries t2 = d2.tau(1);
  return (d2 * t2).shifted(-1) + inv(t_minus_theta_qk(f, 1)) * (d3.tau(1) * d2) - d3 * t2;
}

namespace {

USeries cor6_impl(const BaseForms& b, const USeries& d2, int k, const CoeffElem& corr) {
  const Field* f = b.f;
  int q = f->q();
  if (q == 2) throw DomainError("the truncation formula needs q != 2");
  if (k < 1) throw DomainError("the truncation formula needs k >= 1");
  Exp qk = qpow(q, k);
  std::vector<USeries::TermT> st{{0, CoeffElem::constant(f, 1)}};
  for (int i = 0; i < k; ++i) st.emplace_back(qk - qpow(q, i), K(t_chain(f, k, i)));
  USeries s = USeries::from_terms(f, std::move(st), kExact);
  Exp n = qk + 2 * q - 2;
  USeries r = d2 * s + USeries::monomial(f, qk + q - 2, corr);
  if (r.order() < n) throw PrecisionError("d_2 too short for the truncation formula");
  return r.truncated(n);
}

}  // namespace

USeries cor6_formula(const BaseForms& b, const USeries& d2, int k) {
  return cor6_impl(b, d2, k, K(lstar(b.f, k)));
}

USeries cor6_formula_printed(const BaseForms& b, const USeries& d2, int k) {
  return cor6_impl(b, d2, k, -K(t_minus_theta_qk(b.f, 0)));
}

DeformCatalog build_deformations(const Field* f, Exp order) {
  int q = f->q();
  DeformCatalog c;
  c.order = order;
  c.base = bootstrap_base_forms(f, std::max<Exp>(order + q + 1, static_cast<Exp>(q) * q));
  c.d2 = solve_d2(c.base, order + 1);
  c.d2tau = c.d2.tau(1);
  c.psistar = psi_star(c.base, c.d2).truncated(order);
  c.d3star = solve_d3_star(c.base, c.psistar, order);
  c.e_deform = deform_e_product(c.base, c.d2).truncated(order);
  c.d2 = c.d2.truncated(order);
  c.d2tau = c.d2tau.truncated(order);
  c.d2_integral = c.d2.is_integral();
  c.d3star_integral = c.d3star.is_integral();
  if (c.psistar.order() < order || c.d3star.order() < order || c.e_deform.order() < order)
    throw PrecisionError("deformation catalog lost precision");
  return c;
}

}  // namespace dmf
