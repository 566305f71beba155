#include "dmf/forms.hpp"

#include <map>

#include "dmf/algebra.hpp"
#include "dmf/carlitz.hpp"
#include "dmf/error.hpp"

namespace dmf {

namespace {

CoeffElem poly_coeff(const BiPoly& p) { return CoeffElem(p); }

CoeffElem one_weight(const Field* f) { return CoeffElem::constant(f, 1); }

USeries tagged_one(const Field* f, Exp order) { return USeries::one(f, order).with_tags(0, 0); }

CoeffElem sign(const Field* f, int k) { return CoeffElem::from_int(f, k % 2 == 0 ? 1 : -1); }

}  // namespace

USeries lattice_sum(const Field* f, const USeries& poly, Exp order,
                    const std::function<CoeffElem(const std::vector<Fq>&)>& weight) {
  USeries acc(f, order);
  if (poly.is_zero()) return acc;
  Exp v = poly.valuation();
  for (int d = 0; sat_mul(qpow(f->q(), d), v) < order; ++d)
    for (const auto& a : enumerate_monic(f, d)) {
      CoeffElem w = weight(a);
      if (w.is_zero()) continue;
      acc += w * poly_at_ua(poly, a, order);
    }
  return acc;
}

BaseForms bootstrap_base_forms(const Field* f, Exp order) {
  int q = f->q();
  if (order < static_cast<Exp>(q) * q) throw PrecisionError("bootstrap needs order >= q^2");
  Exp w = order + q - 2;  // h = root of -Delta loses q - 2
  auto all = [f](const std::vector<Fq>&) { return one_weight(f); };
  BaseForms b;
  b.f = f;
  b.order = order;
  USeries s1 = lattice_sum(f, goss_polynomial(f, q - 1), w, all);
  b.g = (USeries::one(f) - poly_coeff(bracket(f, 1)) * s1).with_tags(q - 1, 0);
  USeries s2 = lattice_sum(f, goss_polynomial(f, q * q - 1), w, all);
  b.g2 = (USeries::one(f) + poly_coeff(bracket(f, 2) * bracket(f, 1)) * s2).with_tags(q * q - 1, 0);
  b.delta = CoeffElem::fraction(BiPoly::constant(f, 1), bracket(f, 1)) * (b.g * b.g.tau(1) - b.g2);
  b.h = -root_q_minus_1(-b.delta, 1, CoeffElem::constant(f, 1));
  b.g = b.g.truncated(order);
  b.g2 = b.g2.truncated(order);
  b.delta = b.delta.truncated(order);
  b.h = b.h.truncated(order);
  if (b.h.order() < order) throw PrecisionError("bootstrap lost precision");
  return b;
}

USeries eisenstein_gk(const Field* f, int k, Exp order) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (k == 0) return tagged_one(f, order);
  Exp alpha = qpow(f->q(), k) - 1;
  USeries s = lattice_sum(f, goss_polynomial(f, static_cast<int>(alpha)), order,
                          [f](const std::vector<Fq>&) { return one_weight(f); });
  return (USeries::one(f) + (sign(f, k) * poly_coeff(bracket_product(f, k))) * s).with_tags(alpha, 0);
}

USeries big_e_series(const Field* f, Exp order, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  USeries mono = USeries::monomial(f, qpow(f->q(), k), CoeffElem::constant(f, 1));
  USeries e = lattice_sum(f, mono, order, [f](const std::vector<Fq>& a) { return CoeffElem(theta_poly(f, a)); });
  return e.with_tags(qpow(f->q(), k) + 1, 1);
}

std::vector<USeries> ortho_family(const BaseForms& b, int kmax) {
  std::vector<USeries> g{tagged_one(b.f, b.order)};
  if (kmax >= 1) g.push_back(b.g);
  for (int k = 2; k <= kmax; ++k)
    g.push_back(g[k - 1] * b.g.tau(k - 1) - poly_coeff(bracket(b.f, k - 1)) * (g[k - 2] * b.delta.tau(k - 2)));
  return g;
}

std::vector<USeries> para_family(const BaseForms& b, int kmax) {
  std::vector<USeries> m{tagged_one(b.f, b.order)};
  if (kmax >= 1) m.push_back(b.g);
  for (int k = 2; k <= kmax; ++k)
    m.push_back(b.g * m[k - 1].tau(1) + poly_coeff(bracket(b.f, k - 1).twist(1)) * (b.delta * m[k - 2].tau(2)));
  return m;
}

std::vector<USeries> gkstar_family(const BaseForms& b, int kmax, StarRoute route) {
  const Field* f = b.f;
  std::vector<USeries> out;
  if (route == StarRoute::B) {
    out.push_back(tagged_one(f, b.order));
    if (kmax >= 1) out.push_back(b.g);
    for (int k = 2; k <= kmax; ++k)
      out.push_back(b.g.tau(k - 1) * out[k - 1] +
                    poly_coeff(t_minus_theta_qk(f, k - 1)) * (b.delta.tau(k - 2) * out[k - 2]));
    return out;
  }
  // Route A only needs g_(k-i)^* to order ceil(N / q^i).
  int q = f->q();
  std::map<std::pair<int, Exp>, USeries> memo;
  std::function<USeries(int, Exp)> rec = [&](int k, Exp n) -> USeries {
    auto key = std::make_pair(k, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    USeries r;
    if (k == 0)
      r = tagged_one(f, n);
    else if (k == 1)
      r = b.g.truncated(n);
    else
      r = b.g.truncated(n) * rec(k - 1, (n + q - 1) / q).tau(1) +
          poly_coeff(t_minus_theta_qk(f, 1)) * (b.delta.truncated(n) * rec(k - 2, (n + q * q - 1) / (q * q)).tau(2));
    r = r.truncated(n);
    memo.emplace(key, r);
    return r;
  };
  for (int k = 0; k <= kmax; ++k) out.push_back(rec(k, b.order));
  return out;
}

std::vector<USeries> x_family(const BaseForms& b, const USeries& e, int kmax) {
  std::vector<USeries> x{-e.truncated(b.order)};
  if (kmax >= 1) x.push_back(-(e * b.g) - b.h);
  for (int k = 2; k <= kmax; ++k)
    x.push_back(x[k - 1] * b.g.tau(k - 1) - poly_coeff(bracket(b.f, k - 1)) * (x[k - 2] * b.delta.tau(k - 2)));
  for (auto& s : x) s = s.truncated(b.order);
  return x;
}

USeries d1_route_printed(const BaseForms& b, int k) {
  if (k < 1) throw DomainError("the D_1 route needs k >= 1");
  USeries gk = ortho_family(b, k)[k];
  CoeffElem scale = sign(b.f, k) * CoeffElem::fraction(BiPoly::constant(b.f, 1), bracket_product(b.f, k));
  return (scale * gk.d1()).truncated(b.order);
}

std::vector<USeries> extremal_family(const BaseForms& b, int kmax, ExtremalRoute route) {
  const Field* f = b.f;
  std::vector<USeries> out;
  switch (route) {
    case ExtremalRoute::Lattice:
      for (int k = 0; k <= kmax; ++k) out.push_back(big_e_series(f, b.order, k));
      break;
    case ExtremalRoute::XK: {
      auto x = x_family(b, big_e_series(f, b.order, 0), kmax);
      for (int k = 0; k <= kmax; ++k)
        out.push_back(sign(f, k + 1) * CoeffElem::fraction(BiPoly::constant(f, 1), bracket_product(f, k)) * x[k]);
      break;
    }
    case ExtremalRoute::D1: {
      auto g = ortho_family(b, kmax);
      out.push_back(big_e_series(f, b.order, 0));
      for (int k = 1; k <= kmax; ++k) {
        CoeffElem scale = sign(f, k + 1) * CoeffElem::fraction(BiPoly::constant(f, 1), bracket_product(f, k));
        out.push_back((scale * g[k].d1()).truncated(b.order));
      }
      break;
    }
  }
  return out;
}

}  // namespace dmf
