#include "dmf/carlitz.hpp"

#include <map>
#include <mutex>

#include "dmf/algebra.hpp"
#include "dmf/error.hpp"

namespace dmf {

AddPoly operator+(const AddPoly& a, const AddPoly& b) {
  AddPoly r{join_fields(a.f, b.f), {}};
  r.c.assign(std::max(a.c.size(), b.c.size()), BiPoly(r.f));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
  return r;
}

AddPoly compose(const AddPoly& a, const AddPoly& b) {
  AddPoly r{join_fields(a.f, b.f), {}};
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, BiPoly(r.f));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j].twist(static_cast<int>(i));
  }
  while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
  return r;
}

AddPoly carlitz_action(const Field* f, const std::vector<Fq>& a) {
  AddPoly rho_theta{f, {BiPoly::theta(f), BiPoly::constant(f, 1)}};
  AddPoly power{f, {BiPoly::constant(f, 1)}};
  AddPoly r{f, {}};
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j > 0) power = compose(rho_theta, power);
    if (a[j] == 0) continue;
    AddPoly term{f, {}};
    for (const auto& x : power.c) term.c.push_back(x.scaled(a[j]));
    r = r + term;
  }
  return r;
}

AddPoly carlitz_action(const BiPoly& a) {
  if (!a.theta_only()) throw DomainError("carlitz_action needs an element of F_q[theta]");
  std::vector<Fq> c(static_cast<std::size_t>(a.deg_theta() + 1), 0);
  for (const auto& t : a.terms()) c[th_exp(t.m)] = t.c;
  return carlitz_action(a.field(), c);
}

USeries reciprocal_poly(const AddPoly& rho) {
  const Field* f = rho.f;
  int d = rho.degree();
  if (d < 0) throw DomainError("reciprocal of the zero polynomial");
  Exp top = qpow(f->q(), d);
  std::vector<USeries::TermT> terms;
  for (int i = 0; i <= d; ++i) terms.emplace_back(top - qpow(f->q(), i), CoeffElem(rho.c[i]));
  return USeries::from_terms(f, std::move(terms), kExact);
}

namespace {

struct Monic {
  std::vector<Fq> coeffs;
  Fq lambda;
};

Monic to_monic(const Field* f, const std::vector<Fq>& a) {
  std::vector<Fq> c = a;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw DomainError("u_a needs a nonzero a");
  Fq lam = c.back();
  Fq inv = f->inv(lam);
  for (auto& x : c) x = f->mul(x, inv);
  return {c, lam};
}

}  // namespace

USeries f_sub_a(const Field* f, const std::vector<Fq>& a, Exp order) {
  Monic m = to_monic(f, a);
  if (order <= 0) return USeries(f, order);
  return reciprocal_poly(carlitz_action(f, m.coeffs)).inverse(order);
}

USeries u_sub_a(const Field* f, const std::vector<Fq>& a, Exp order) {
  Monic m = to_monic(f, a);
  Exp top = qpow(f->q(), static_cast<int>(m.coeffs.size()) - 1);
  if (top >= order) return USeries(f, order);
  USeries fa = reciprocal_poly(carlitz_action(f, m.coeffs)).inverse(order - top);
  return (CoeffElem::constant(f, f->inv(m.lambda)) * fa).shifted(top);
}

USeries u_sub_a_inverse(const Field* f, const std::vector<Fq>& a) {
  Monic m = to_monic(f, a);
  Exp top = qpow(f->q(), static_cast<int>(m.coeffs.size()) - 1);
  return (CoeffElem::constant(f, m.lambda) * reciprocal_poly(carlitz_action(f, m.coeffs))).shifted(-top);
}

USeries poly_at_ua(const USeries& p, const std::vector<Fq>& a, Exp order) {
  const Field* f = p.field();
  if (!p.exact()) throw DomainError("poly_at_ua needs an exact polynomial");
  if (p.is_zero()) return USeries(f, order);
  if (p.valuation() < 0) throw DomainError("poly_at_ua needs nonnegative exponents");
  Monic m = to_monic(f, a);
  int d = static_cast<int>(m.coeffs.size()) - 1;
  int q = f->q();
  Exp qd = qpow(q, d);
  if (sat_mul(qd, p.valuation()) >= order) return USeries(f, order);
  Exp deg = p.terms().back().first;
  int k = 0;
  while (qpow(q, k) < deg) ++k;
  Exp qk = qpow(q, k);
  USeries y = u_sub_a_inverse(f, a);
  // sum_j c_j y^(qk - j), walking j downward so powers of y grow
  USeries acc(f);
  USeries pw = USeries::one(f);
  Exp have = 0;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Exp n = qk - it->first;
    while (have < n) {
      pw = pw * y;
      ++have;
    }
    acc += it->second * pw;
  }
  if (acc.is_zero()) return USeries(f, order);
  Exp need = (order - acc.valuation() + qk - 1) / qk;
  USeries ua = u_sub_a(f, a, std::max<Exp>(need, 1)).tau(k);
  return (ua * acc).truncated(order);
}

USeries carlitz_exponential(const Field* f, Exp order) {
  std::vector<USeries::TermT> terms;
  for (int n = 0; qpow(f->q(), n) < order; ++n)
    terms.emplace_back(qpow(f->q(), n), CoeffElem::fraction(BiPoly::constant(f, 1), dfact(f, n)));
  return USeries::from_terms(f, std::move(terms), order);
}

USeries compose(const USeries& p, const USeries& s) {
  const Field* f = join_fields(p.field(), s.field());
  if (!p.is_zero() && p.valuation() < 0) throw DomainError("compose needs a power series");
  if (s.is_zero() || s.valuation() < 1) throw DomainError("compose needs an inner series of positive valuation");
  Exp v = s.valuation();
  Exp bound = p.exact() ? kExact : sat_mul(p.order(), v);
  USeries acc(f, bound);
  USeries pw = USeries::one(f);
  Exp have = 0;
  for (const auto& [j, c] : p.terms()) {
    if (sat_mul(j, v) >= acc.order()) break;
    while (have < j) {
      pw = pw * s;
      ++have;
    }
    acc += c * pw;
  }
  return acc.truncated(bound);
}

namespace {

struct GossCache {
  std::mutex mu;
  std::map<const Field*, std::vector<USeries>> table;
};

GossCache& goss_cache() {
  static GossCache c;
  return c;
}

}  // namespace

USeries goss_polynomial(const Field* f, int alpha) {
  if (alpha < 1) throw DomainError("Goss polynomial needs alpha >= 1");
  GossCache& cache = goss_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& g = cache.table[f];
  if (g.empty()) {
    g.push_back(USeries(f));
    g.push_back(USeries::u(f));
  }
  int q = f->q();
  while (static_cast<int>(g.size()) <= alpha) {
    int a = static_cast<int>(g.size());
    USeries s = g[a - 1];
    for (int i = 1; qpow(q, i) < a; ++i)
      s += CoeffElem::fraction(BiPoly::constant(f, 1), dfact(f, i)) * g[a - qpow(q, i)];
    g.push_back(s.shifted(1));
  }
  return g[alpha];
}

std::vector<USeries> goss_generating(const Field* f, int alpha_max) {
  if (alpha_max < 1) throw DomainError("Goss polynomial needs alpha >= 1");
  Exp n = alpha_max;  // X-exponents below alpha_max are needed
  USeries ehat = carlitz_exponential(f, n);
  std::vector<std::vector<USeries::TermT>> terms(alpha_max + 1);
  USeries pw = USeries::one(f, n);
  for (Exp j = 0; j < n; ++j) {
    for (const auto& [e, c] : pw.terms()) terms[e + 1].emplace_back(j + 1, c);
    pw = (pw * ehat).truncated(n);
  }
  std::vector<USeries> out(alpha_max + 1, USeries(f));
  for (int a = 1; a <= alpha_max; ++a) out[a] = USeries::from_terms(f, std::move(terms[a]), kExact);
  return out;
}

}  // namespace dmf
