#include "dmf/useries.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "dmf/error.hpp"

namespace dmf {

Exp sat_add(Exp a, Exp b) {
  if (a >= kExact || b >= kExact) return kExact;
  Exp r = a + b;
  return r >= kExact ? kExact : r;
}

Exp sat_mul(Exp a, Exp b) {
  if (a >= kExact) return b > 0 ? kExact : (b == 0 ? 0 : -kExact);
  if (b >= kExact) return sat_mul(b, a);
  __int128 r = static_cast<__int128>(a) * b;
  if (r >= kExact) return kExact;
  if (r <= -kExact) return -kExact;
  return static_cast<Exp>(r);
}

Exp qpow(int q, int k) {
  Exp r = 1;
  for (int i = 0; i < k; ++i) r = sat_mul(r, q);
  return r;
}

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Exp ceil_div(Exp a, Exp b) {
  Exp d = a / b;
  return (a % b != 0 && a > 0) ? d + 1 : d;
}

Exp checked_scale(Exp e, Exp q) {
  Exp r = sat_mul(e, q);
  if (r >= kExact || r <= -kExact) throw DomainError("exponent overflow");
  return r;
}

std::optional<Tags> join_tags(const std::optional<Tags>& a, const std::optional<Tags>& b, int q) {
  if (!a || !b) return std::nullopt;
  return Tags{a->weight + b->weight, mod_pos(a->type + b->type, q - 1)};
}

// Sum of products, with polynomial pairs folded into one pass.
CoeffElem dot(const Field* f, const std::vector<std::pair<const CoeffElem*, const CoeffElem*>>& pairs) {
  std::vector<std::pair<const BiPoly*, const BiPoly*>> poly;
  CoeffElem rest(f);
  for (const auto& [x, y] : pairs) {
    if (x->is_integral() && y->is_integral())
      poly.emplace_back(&x->num(), &y->num());
    else
      rest += (*x) * (*y);
  }
  if (poly.empty()) return rest;
  CoeffElem s(sum_of_products(f, poly));
  return rest.is_zero() ? s : s + rest;
}

}  // namespace

USeries USeries::monomial(const Field* f, Exp e, CoeffElem c, Exp order) {
  USeries r(f, order);
  if (!c.is_zero() && e < order) r.terms_.emplace_back(e, std::move(c));
  return r;
}

USeries USeries::constant(CoeffElem c, Exp order) {
  const Field* f = c.field();
  return monomial(f, 0, std::move(c), order);
}

USeries USeries::from_terms(const Field* f, std::vector<TermT> terms, Exp order) {
  USeries r(f, order);
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void USeries::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const TermT& a, const TermT& b) { return a.first < b.first; });
  std::vector<TermT> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (t.first >= order_) break;
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (out.back().second.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

CoeffElem USeries::coeff(Exp i) const {
  if (i >= order_) throw PrecisionError("coefficient of u^" + std::to_string(i) + " beyond order " + std::to_string(order_));
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const TermT& t, Exp e) { return t.first < e; });
  if (it != terms_.end() && it->first == i) return it->second;
  return CoeffElem(f_);
}

const CoeffElem& USeries::lead() const {
  if (terms_.empty()) throw PrecisionError("series indistinguishable from 0");
  return terms_.front().second;
}

bool USeries::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const TermT& t) { return t.second.is_integral(); });
}

bool USeries::theta_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const TermT& t) { return t.second.theta_only(); });
}

USeries USeries::with_tags(std::int64_t weight, std::int64_t type) const {
  std::int64_t m = f_->q() - 1;
  std::int64_t ty = mod_pos(type, m);
  for (const auto& t : terms_)
    if (mod_pos(t.first, m) != ty)
      throw DomainError("term u^" + std::to_string(t.first) + " violates type " + std::to_string(ty));
  USeries r = *this;
  r.tags_ = Tags{weight, ty};
  return r;
}

USeries USeries::without_tags() const {
  USeries r = *this;
  r.tags_.reset();
  return r;
}

USeries USeries::truncated(Exp n) const {
  if (n >= order_) return *this;
  USeries r = *this;
  r.order_ = n;
  while (!r.terms_.empty() && r.terms_.back().first >= n) r.terms_.pop_back();
  return r;
}

USeries USeries::exact_part() const {
  USeries r = *this;
  r.order_ = kExact;
  return r;
}

USeries USeries::operator-() const {
  USeries r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

USeries operator+(const USeries& a, const USeries& b) {
  const Field* f = join_fields(a.f_, b.f_);
  USeries r(f, std::min(a.order_, b.order_));
  std::size_t i = 0, j = 0;
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  while (i < x.size() || j < y.size()) {
    Exp e;
    CoeffElem c;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      e = x[i].first;
      c = x[i++].second;
    } else if (i == x.size() || y[j].first < x[i].first) {
      e = y[j].first;
      c = y[j++].second;
    } else {
      e = x[i].first;
      c = x[i++].second + y[j++].second;
    }
    if (e >= r.order_) break;
    if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
  }
  if (a.tags_ && b.tags_ && *a.tags_ == *b.tags_) r.tags_ = a.tags_;
  return r;
}

USeries operator*(const USeries& a, const USeries& b) {
  const Field* f = join_fields(a.f_, b.f_);
  USeries r(f, std::min(sat_add(a.order_, b.valuation()), sat_add(b.order_, a.valuation())));
  struct Cell {
    Exp e;
    std::uint32_t i, j;
  };
  std::vector<Cell> cells;
  for (std::uint32_t i = 0; i < a.terms_.size(); ++i) {
    Exp ea = a.terms_[i].first;
    for (std::uint32_t j = 0; j < b.terms_.size(); ++j) {
      Exp e = ea + b.terms_[j].first;
      if (e >= r.order_) break;
      cells.push_back({e, i, j});
    }
  }
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.e < y.e; });
  std::vector<std::pair<const CoeffElem*, const CoeffElem*>> pairs;
  for (std::size_t s = 0; s < cells.size();) {
    std::size_t t = s;
    pairs.clear();
    while (t < cells.size() && cells[t].e == cells[s].e) {
      pairs.emplace_back(&a.terms_[cells[t].i].second, &b.terms_[cells[t].j].second);
      ++t;
    }
    CoeffElem c = pairs.size() == 1 ? (*pairs[0].first) * (*pairs[0].second) : dot(f, pairs);
    if (!c.is_zero()) r.terms_.emplace_back(cells[s].e, std::move(c));
    s = t;
  }
  r.tags_ = join_tags(a.tags_, b.tags_, f->q());
  return r;
}

USeries operator*(const CoeffElem& c, const USeries& a) {
  USeries r(join_fields(c.field(), a.f_), a.order_);
  if (c.is_zero()) return r;
  for (const auto& t : a.terms_) r.terms_.emplace_back(t.first, c * t.second);
  r.tags_ = a.tags_;
  return r;
}

USeries USeries::shifted(Exp s) const {
  USeries r(f_, sat_add(order_, s));
  for (const auto& t : terms_) r.terms_.emplace_back(t.first + s, t.second);
  return r;
}

USeries USeries::inverse(Exp cap) const {
  if (terms_.empty()) throw PrecisionError("division by a series indistinguishable from 0");
  Exp v = terms_.front().first;
  const CoeffElem& c = terms_.front().second;
  CoeffElem cinv = c.inverse();
  std::optional<Tags> tg;
  if (tags_) tg = Tags{-tags_->weight, mod_pos(-tags_->type, f_->q() - 1)};
  if (exact() && terms_.size() == 1) {
    USeries r = monomial(f_, -v, cinv, cap);
    r.tags_ = tg;
    return r;
  }
  Exp n_res = exact() ? cap : std::min(sat_add(order_, -2 * v), cap);
  if (n_res >= kExact) throw PrecisionError("inverse of an exact series needs an explicit order");
  Exp m = n_res + v;  // relative length
  USeries r(f_, n_res);
  r.tags_ = tg;
  if (m <= 0) return r;
  std::vector<std::pair<Exp, const CoeffElem*>> rel;
  for (std::size_t i = 1; i < terms_.size(); ++i) rel.emplace_back(terms_[i].first - v, &terms_[i].second);
  std::vector<CoeffElem> b(static_cast<std::size_t>(m), CoeffElem(f_));
  std::vector<char> nz(static_cast<std::size_t>(m), 0);
  b[0] = cinv;
  nz[0] = 1;
  std::vector<std::pair<const CoeffElem*, const CoeffElem*>> pairs;
  CoeffElem mcinv = -cinv;
  for (Exp n = 1; n < m; ++n) {
    pairs.clear();
    for (const auto& [k, ak] : rel) {
      if (k > n) break;
      if (nz[n - k]) pairs.emplace_back(ak, &b[n - k]);
    }
    if (pairs.empty()) continue;
    CoeffElem s = dot(f_, pairs);
    if (s.is_zero()) continue;
    b[n] = mcinv * s;
    nz[n] = 1;
  }
  for (Exp n = 0; n < m; ++n)
    if (nz[n]) r.terms_.emplace_back(n - v, std::move(b[n]));
  return r;
}

USeries USeries::pow(std::int64_t n, Exp cap) const {
  if (n < 0) return inverse(cap).pow(-n, cap);
  if (n == 0) {
    USeries r = one(f_, cap);
    if (tags_) r.tags_ = Tags{0, 0};
    return r;
  }
  int p = f_->p();
  int s = 0;
  while (n % p == 0) {
    n /= p;
    ++s;
  }
  USeries base = *this, acc;
  bool have = false;
  while (n > 0) {
    if (n & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  for (int i = 0; i < s; ++i) acc = acc.frobenius_power();
  return acc.truncated(cap);
}

USeries USeries::frobenius_power() const {
  int p = f_->p();
  USeries r(f_, sat_mul(order_, p));
  for (const auto& t : terms_) r.terms_.emplace_back(checked_scale(t.first, p), t.second.pow(p));
  if (tags_) r.tags_ = Tags{tags_->weight * p, mod_pos(tags_->type * p, f_->q() - 1)};
  return r;
}

USeries USeries::tau(int k) const {
  if (k == 0) return *this;
  int q = f_->q();
  if (k > 0) {
    Exp qk = qpow(q, k);
    USeries r(f_, sat_mul(order_, qk));
    for (const auto& t : terms_) r.terms_.emplace_back(checked_scale(t.first, qk), t.second.twist(k));
    if (tags_) r.tags_ = Tags{tags_->weight * qk, tags_->type};
    return r;
  }
  Exp qk = qpow(q, -k);
  for (const auto& t : terms_)
    if (t.first % qk != 0) throw NotInImageError();
  USeries r(f_, order_ >= kExact ? kExact : ceil_div(order_, qk));
  for (const auto& t : terms_) r.terms_.emplace_back(t.first / qk, t.second.twist(k));
  if (tags_ && tags_->weight % qk == 0) r.tags_ = Tags{tags_->weight / qk, tags_->type};
  return r;
}

USeries USeries::d1() const {
  USeries r(f_, sat_add(order_, 1));
  for (const auto& t : terms_) {
    Fq c = f_->from_int(t.first);
    if (c != 0) r.terms_.emplace_back(t.first + 1, t.second.scaled(c));
  }
  if (tags_) r.tags_ = Tags{tags_->weight + 2, mod_pos(tags_->type + 1, f_->q() - 1)};
  return r;
}

USeries USeries::map_coeffs(const std::function<CoeffElem(const CoeffElem&)>& fn) const {
  USeries r(f_, order_);
  for (const auto& t : terms_) {
    CoeffElem c = fn(t.second);
    if (!c.is_zero()) r.terms_.emplace_back(t.first, std::move(c));
  }
  r.tags_ = tags_;
  return r;
}

USeries USeries::subst_t_theta_power(std::uint64_t m) const {
  return map_coeffs([m](const CoeffElem& c) { return c.subst_t_theta_power(m); });
}

USeries USeries::subst_t_const(Fq c) const {
  return map_coeffs([c](const CoeffElem& x) { return x.subst_t_const(c); });
}

std::string USeries::to_json() const {
  nlohmann::ordered_json j;
  if (terms_.empty() && exact())
    j["valuation"] = nullptr;
  else
    j["valuation"] = valuation();
  if (exact())
    j["order"] = nullptr;
  else
    j["order"] = order_;
  if (tags_) {
    j["weight"] = tags_->weight;
    j["type"] = tags_->type;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& t : terms_) {
    nlohmann::ordered_json e;
    e["u"] = t.first;
    e["coeff"] = t.second.str();
    arr.push_back(std::move(e));
  }
  j["terms"] = std::move(arr);
  return j.dump(2);
}

std::string USeries::to_csv() const {
  std::ostringstream os;
  os << "u_exponent,coefficient\n";
  for (const auto& t : terms_) os << t.first << ',' << t.second.str() << '\n';
  return os.str();
}

USeries USeries::from_json(const Field* f, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Exp order = j.at("order").is_null() ? kExact : j.at("order").get<Exp>();
  std::vector<TermT> terms;
  for (const auto& e : j.at("terms")) terms.emplace_back(e.at("u").get<Exp>(), CoeffElem::parse(f, e.at("coeff").get<std::string>()));
  USeries r = from_terms(f, std::move(terms), order);
  if (j.contains("weight")) r = r.with_tags(j["weight"].get<std::int64_t>(), j["type"].get<std::int64_t>());
  return r;
}

std::optional<Exp> first_difference(const USeries& a, const USeries& b) {
  Exp n = std::min(a.order(), b.order());
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    Exp ex = i < x.size() ? x[i].first : kExact;
    Exp ey = j < y.size() ? y[j].first : kExact;
    Exp e = std::min(ex, ey);
    if (e >= n) return std::nullopt;
    if (ex != ey || x[i].second != y[j].second) return e;
    ++i;
    ++j;
  }
  return std::nullopt;
}

bool agree(const USeries& a, const USeries& b) { return !first_difference(a, b).has_value(); }

USeries div(const USeries& a, const USeries& b, Exp cap) { return (a * b.inverse(cap)).truncated(cap); }

USeries root_q_minus_1(const USeries& f, Exp e, const CoeffElem& c, Exp cap) {
  const Field* fld = f.field();
  int q = fld->q();
  if (f.is_zero()) throw PrecisionError("root of a series indistinguishable from 0");
  Exp v = f.valuation();
  if (v % (q - 1) != 0) throw DomainError("valuation not divisible by q-1");
  if (v != (q - 1) * e) throw DomainError("valuation does not match the prescribed leading exponent");
  CoeffElem lc = c.pow(q - 1);
  if (f.lead() != lc) throw DomainError("leading coefficient not a (q-1)-th power of the prescribed one");
  std::optional<Tags> tg;
  // weight/(q-1) only when it divides
  if (f.tags() && f.tags()->weight % (q - 1) == 0) tg = Tags{f.tags()->weight / (q - 1), ((e % (q - 1)) + (q - 1)) % (q - 1)};
  // normalized F = f / (c^(q-1) u^v) = 1 + w, relative precision m
  USeries big_f = (lc.inverse() * f.without_tags()).shifted(-v);
  Exp m = f.exact() ? sat_add(cap, -e) : std::min(big_f.order(), sat_add(cap, -e));
  USeries y;
  if (big_f.terms().size() == 1 && big_f.exact()) {
    y = USeries::one(fld);
    if (cap < kExact) y = y.truncated(m);
  } else {
    if (m >= kExact) throw PrecisionError("root of an exact series needs an explicit order");
    CoeffElem qm1 = CoeffElem::from_int(fld, q - 1);
    y = USeries::one(fld);
    Exp prec = 1;
    while (prec < m) {
      prec = std::min(2 * prec, m);
      USeries fp = big_f.exact_part().truncated(prec);
      USeries yy = y.exact_part();
      USeries err = yy.pow(q - 1).truncated(prec) - fp;
      USeries deriv = (qm1 * yy.pow(q - 2)).truncated(prec);
      y = (yy - err * deriv.inverse(prec)).truncated(prec);
    }
    y = y.truncated(m);
  }
  USeries r = (c * y).shifted(e);
  if (tg) r = r.with_tags(tg->weight, tg->type);
  return r;
}

USeries truncate_block(const USeries& f, int n) {
  if (!f.is_zero() && f.valuation() < 0) throw DomainError("block truncation needs nonnegative valuation");
  Exp bound = n < 0 ? 1 : qpow(f.field()->q(), n);
  if (f.order() < bound) throw PrecisionError("insufficient precision for block truncation");
  return f.truncated(bound).exact_part().without_tags();
}

}  // namespace dmf
