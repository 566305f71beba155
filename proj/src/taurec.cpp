#include "dmf/taurec.hpp"

#include <algorithm>

#include "dmf/algebra.hpp"

namespace dmf {

namespace {

CoeffElem K(const BiPoly& p) { return CoeffElem(p); }

// (t - theta)^n for any integer n.
CoeffElem t_minus_theta_pow(const Field* f, int n) {
  BiPoly base = t_minus_theta_qk(f, 0).pow(std::abs(n));
  return n >= 0 ? K(base) : CoeffElem::fraction(BiPoly::constant(f, 1), base);
}

CoeffElem binom_mod(const Field* f, int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return CoeffElem::from_int(f, r);
}

USeries series_const(const Field* f, const CoeffElem& c) { return USeries::constant(c); }

}  // namespace

SymSeries::SymSeries(const USeries& c) : f_(c.field()) { add_term({0, 0}, c); }

SymSeries SymSeries::term(const USeries& c, int fdeg, int sdeg) {
  if (fdeg < 0) throw DomainError("F is not invertible");
  SymSeries r(c.field());
  r.add_term({fdeg, sdeg}, c);
  return r;
}

SymSeries SymSeries::F(const Field* f) { return term(USeries::one(f), 1, 0); }

SymSeries SymSeries::S(const Field* f, int power) { return term(USeries::one(f), 0, power); }

void SymSeries::add_term(const Key& k, const USeries& c) {
  auto it = terms_.find(k);
  USeries v = it == terms_.end() ? c : it->second + c;
  // exact zeros carry no information
  if (v.is_zero() && v.exact()) {
    if (it != terms_.end()) terms_.erase(it);
    return;
  }
  terms_[k] = v;
}

bool SymSeries::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool SymSeries::is_pure() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first == Key{0, 0} || kv.second.is_zero(); });
}

USeries SymSeries::component(int fdeg, int sdeg) const {
  auto it = terms_.find({fdeg, sdeg});
  return it == terms_.end() ? USeries(f_) : it->second;
}

USeries SymSeries::collapse() const {
  if (!is_pure()) throw DomainError("symbolic expression still involves F or S");
  return component(0, 0).truncated(min_order());
}

int SymSeries::f_degree() const {
  int d = 0;
  for (const auto& kv : terms_)
    if (!kv.second.is_zero()) d = std::max(d, kv.first.first);
  return d;
}

Exp SymSeries::min_order() const {
  Exp n = kExact;
  for (const auto& kv : terms_) n = std::min(n, kv.second.order());
  return n;
}

SymSeries SymSeries::operator-() const {
  SymSeries r(f_);
  for (const auto& kv : terms_) r.terms_[kv.first] = -kv.second;
  return r;
}

SymSeries operator+(const SymSeries& a, const SymSeries& b) {
  SymSeries r = a;
  if (!r.f_) r.f_ = b.f_;
  for (const auto& kv : b.terms_) r.add_term(kv.first, kv.second);
  return r;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  SymSeries r(a.f_ ? a.f_ : b.f_);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      r.add_term({x.first.first + y.first.first, x.first.second + y.first.second}, x.second * y.second);
  return r;
}

SymSeries operator*(const CoeffElem& c, const SymSeries& a) {
  SymSeries r(a.f_);
  for (const auto& kv : a.terms_) r.add_term(kv.first, c * kv.second);
  return r;
}

// c F^i S^j -> tau(c) sum_m C(i,m) F^(i-m) ((t - theta) u S)^(-m) (t - theta)^j S^j.
SymSeries SymSeries::tau_once() const {
  SymSeries r(f_);
  for (const auto& kv : terms_) {
    auto [i, j] = kv.first;
    USeries tc = kv.second.tau(1);
    for (int m = 0; m <= i; ++m) {
      CoeffElem k = binom_mod(f_, i, m);
      if (k.is_zero()) continue;
      r.add_term({i - m, j - m}, (k * t_minus_theta_pow(f_, j - m)) * tc.shifted(-m));
    }
  }
  return r;
}

// tau^-1 F = F - u^(-1/q) S^-1 and tau^-1 S = S / (t - theta^(1/q)); the
// fractional powers of u are absorbed by grouping before untwisting.
SymSeries SymSeries::tau_inverse_once() const {
  std::map<Key, USeries> pre;
  for (const auto& kv : terms_) {
    auto [i, j] = kv.first;
    for (int m = 0; m <= i; ++m) {
      CoeffElem k = binom_mod(f_, i, m);
      if (k.is_zero()) continue;
      if (m % 2) k = -k;
      USeries piece = (k * t_minus_theta_pow(f_, -j)) * kv.second.shifted(-m);
      Key key{i - m, j - m};
      auto it = pre.find(key);
      if (it == pre.end())
        pre.emplace(key, piece);
      else
        it->second += piece;
    }
  }
  SymSeries r(f_);
  for (const auto& kv : pre) r.add_term(kv.first, kv.second.tau(-1));
  return r;
}

SymSeries SymSeries::tau(int k) const {
  SymSeries r = *this;
  for (int i = 0; i < k; ++i) r = r.tau_once();
  for (int i = 0; i > k; --i) r = r.tau_inverse_once();
  return r;
}

SymSeries SymSeries::inverse(Exp cap) const {
  const std::pair<const Key, USeries>* unit = nullptr;
  for (const auto& kv : terms_) {
    if (kv.second.is_zero()) continue;
    if (unit || kv.first.first != 0) throw DomainError("not a unit of the symbolic ring");
    unit = &kv;
  }
  if (!unit) throw PrecisionError("division by an element indistinguishable from 0");
  return term(unit->second.inverse(cap), 0, -unit->first.second);
}

SkewOperator<USeries> l1_operator(const BaseForms& b) {
  const Field* f = b.f;
  return {{series_const(f, CoeffElem::from_int(f, -1)), b.g, K(t_minus_theta_qk(f, 1)) * b.delta}};
}

SkewOperator<USeries> l1_operator_printed(const BaseForms& b) {
  const Field* f = b.f;
  return {{series_const(f, CoeffElem::from_int(f, -1)), -b.g, K(t_minus_theta_qk(f, 1)) * b.delta}};
}

namespace {

SkewOperator<USeries> l2_impl(const BaseForms& b, Exp cap, bool printed) {
  const Field* f = b.f;
  int q = f->q();
  CoeffElem tq = K(t_minus_theta_qk(f, 1)), tq2 = K(t_minus_theta_qk(f, 2));
  USeries a = b.g.pow(1 + q) + tq * b.delta;
  USeries g1q = b.g.pow(1 - q, cap);
  SkewOperator<USeries> op;
  op.a.push_back(series_const(f, CoeffElem::from_int(f, -1)));
  op.a.push_back(g1q * a);
  op.a.push_back(tq * (a * b.delta));
  if (printed) {
    op.a[1] = -op.a[1];
    op.a[2] = -op.a[2];
  }
  op.a.push_back((-tq * (tq2 * tq2)) * (g1q * b.delta.pow(1 + 2 * q)));
  return op;
}

}  // namespace

SkewOperator<USeries> l2_operator(const BaseForms& b, Exp cap) { return l2_impl(b, cap, false); }

SkewOperator<USeries> l2_operator_printed(const BaseForms& b, Exp cap) { return l2_impl(b, cap, true); }

SkewOperator<USeries> lad_operator(const BaseForms& b) {
  const Field* f = b.f;
  return {{K(t_minus_theta_qk(f, 1)) * b.delta, b.g.tau(1), series_const(f, CoeffElem::from_int(f, -1))}};
}

SymSeries d1_symbolic(const DeformCatalog& c) {
  const Field* f = c.base.f;
  return SymSeries(c.d2) * SymSeries::F(f) + SymSeries::term(t_minus_theta_pow(f, -1) * c.d3star, 0, -1);
}

std::vector<SymSeries> thm3_row(const DeformCatalog& c) {
  const Field* f = c.base.f;
  SymSeries e = SymSeries::term(t_minus_theta_pow(f, 1) * c.base.h, 0, 1);
  return {e * SymSeries(c.d2.tau(1)), -(e * d1_symbolic(c).tau(1))};
}

std::vector<SymSeries> thm3_row_printed(const DeformCatalog& c) {
  auto r = thm3_row(c);
  return {-r[0], -r[1]};
}

std::vector<SymSeries> thm3_column(const DeformCatalog& c) { return {d1_symbolic(c), SymSeries(c.d2)}; }

}  // namespace dmf
