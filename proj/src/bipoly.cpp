#include "dmf/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "dmf/error.hpp"

namespace dmf {

const Field* join_fields(const Field* a, const Field* b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b) throw DomainError("mixing polynomials over different fields");
  return a;
}

namespace {

using Pairs = std::vector<std::pair<const BiPoly*, const BiPoly*>>;

// Accumulates products sum_k a_k * b_k. Chooses a dense buffer when the
// exponent box is small relative to the number of products.
BiPoly accumulate(const Field* f, const Pairs& pairs) {
  std::size_t nprod = 0;
  std::uint64_t tmin = UINT64_MAX, tmax = 0, jmin = UINT64_MAX, jmax = 0;
  for (auto& [a, b] : pairs) {
    if (a->is_zero() || b->is_zero()) continue;
    nprod += a->size() * b->size();
    std::uint64_t at0 = t_exp(a->terms().front().m), at1 = t_exp(a->terms().back().m);
    std::uint64_t bt0 = t_exp(b->terms().front().m), bt1 = t_exp(b->terms().back().m);
    std::uint64_t aj0 = UINT64_MAX, aj1 = 0, bj0 = UINT64_MAX, bj1 = 0;
    for (auto& x : a->terms()) aj0 = std::min(aj0, th_exp(x.m)), aj1 = std::max(aj1, th_exp(x.m));
    for (auto& x : b->terms()) bj0 = std::min(bj0, th_exp(x.m)), bj1 = std::max(bj1, th_exp(x.m));
    tmin = std::min(tmin, at0 + bt0);
    tmax = std::max(tmax, at1 + bt1);
    jmin = std::min(jmin, aj0 + bj0);
    jmax = std::max(jmax, aj1 + bj1);
  }
  if (nprod == 0) return BiPoly(f);
  if (tmax > kMaxTExp || jmax > kThetaMask) throw DomainError("polynomial exponent overflow");
  const bool prime = f->e() == 1;
  const std::uint64_t p = f->p();
  std::uint64_t wt = tmax - tmin + 1, wj = jmax - jmin + 1;
  std::vector<Term> out;
  if (wt <= (std::uint64_t(1) << 26) / wj && wt * wj <= 4 * nprod + 256) {
    std::size_t cells = wt * wj;
    if (prime) {
      std::vector<std::uint64_t> acc(cells, 0);
      for (auto& [a, b] : pairs)
        for (auto& x : a->terms())
          for (auto& y : b->terms()) {
            std::uint64_t ti = t_exp(x.m) + t_exp(y.m) - tmin, tj = th_exp(x.m) + th_exp(y.m) - jmin;
            acc[ti * wj + tj] += std::uint64_t(x.c) * y.c;
          }
      for (std::size_t k = 0; k < cells; ++k) {
        Fq c = static_cast<Fq>(acc[k] % p);
        if (c) out.push_back({mono(k / wj + tmin, k % wj + jmin), c});
      }
    } else {
      std::vector<Fq> acc(cells, 0);
      for (auto& [a, b] : pairs)
        for (auto& x : a->terms())
          for (auto& y : b->terms()) {
            std::uint64_t ti = t_exp(x.m) + t_exp(y.m) - tmin, tj = th_exp(x.m) + th_exp(y.m) - jmin;
            Fq& r = acc[ti * wj + tj];
            r = f->add(r, f->mul(x.c, y.c));
          }
      for (std::size_t k = 0; k < cells; ++k)
        if (acc[k]) out.push_back({mono(k / wj + tmin, k % wj + jmin), acc[k]});
    }
    return BiPoly::from_terms(f, std::move(out));
  }
  std::vector<std::pair<Mono, std::uint32_t>> raw;
  raw.reserve(nprod);
  for (auto& [a, b] : pairs)
    for (auto& x : a->terms())
      for (auto& y : b->terms())
        raw.push_back({x.m + y.m, prime ? std::uint32_t(x.c) * y.c : std::uint32_t(f->mul(x.c, y.c))});
  std::sort(raw.begin(), raw.end(), [](auto& l, auto& r) { return l.first < r.first; });
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    if (prime) {
      std::uint64_t s = 0;
      for (; j < raw.size() && raw[j].first == raw[i].first; ++j) s += raw[j].second;
      Fq c = static_cast<Fq>(s % p);
      if (c) out.push_back({raw[i].first, c});
    } else {
      Fq s = 0;
      for (; j < raw.size() && raw[j].first == raw[i].first; ++j) s = f->add(s, static_cast<Fq>(raw[j].second));
      if (s) out.push_back({raw[i].first, s});
    }
    i = j;
  }
  BiPoly r(f);
  r = BiPoly::from_terms(f, std::move(out));
  return r;
}

// Dense univariate polynomials in theta, used inside gcd.
using UPoly = std::vector<Fq>;

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly to_upoly(const BiPoly& a) {
  UPoly r;
  if (a.is_zero()) return r;
  r.assign(a.deg_theta() + 1, 0);
  for (auto& x : a.terms()) r[th_exp(x.m)] = x.c;
  return r;
}

BiPoly from_upoly(const Field* f, const UPoly& a, std::uint64_t ti = 0) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) t.push_back({mono(ti, i), a[i]});
  return BiPoly::from_terms(f, std::move(t));
}

UPoly umul(const Field* f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) r[i + j] = f->add(r[i + j], f->mul(a[i], b[j]));
  }
  utrim(r);
  return r;
}

UPoly usub(const Field* f, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f->sub(a[i], b[i]);
  utrim(a);
  return a;
}

// Remainder of a by b, quotient optionally.
UPoly umod(const Field* f, UPoly a, const UPoly& b, UPoly* quo = nullptr) {
  std::size_t db = b.size() - 1;
  Fq inv = f->inv(b.back());
  if (quo) quo->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    Fq c = f->mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    if (quo) (*quo)[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f->sub(a[shift + i], f->mul(c, b[i]));
    utrim(a);
  }
  return a;
}

void umonic(const Field* f, UPoly& a) {
  if (a.empty()) return;
  Fq inv = f->inv(a.back());
  for (auto& c : a) c = f->mul(c, inv);
}

UPoly ugcd(const Field* f, UPoly a, UPoly b) {
  while (!b.empty()) {
    a = umod(f, std::move(a), b);
    std::swap(a, b);
  }
  umonic(f, a);
  return a;
}

UPoly udivexact(const Field* f, const UPoly& a, const UPoly& b) {
  UPoly q;
  umod(f, a, b, &q);
  utrim(q);
  return q;
}

using RPoly = std::vector<UPoly>;  // indexed by t-exponent

RPoly to_rpoly(const BiPoly& a) {
  RPoly r(a.deg_t() + 1);
  for (auto& x : a.terms()) {
    auto& u = r[t_exp(x.m)];
    std::uint64_t j = th_exp(x.m);
    if (u.size() <= j) u.resize(j + 1, 0);
    u[j] = x.c;
  }
  return r;
}

BiPoly from_rpoly(const Field* f, const RPoly& r) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j)
      if (r[i][j]) t.push_back({mono(i, j), r[i][j]});
  return BiPoly::from_terms(f, std::move(t));
}

void rtrim(RPoly& r) {
  while (!r.empty() && r.back().empty()) r.pop_back();
}

UPoly rcontent(const Field* f, const RPoly& r) {
  UPoly g;
  for (auto& c : r) {
    if (c.empty()) continue;
    g = g.empty() ? c : ugcd(f, g, c);
    if (g.size() == 1) break;
  }
  umonic(f, g);
  return g;
}

RPoly rprimitive(const Field* f, RPoly r) {
  UPoly c = rcontent(f, r);
  if (c.size() <= 1) return r;
  for (auto& x : r)
    if (!x.empty()) x = udivexact(f, x, c);
  return r;
}

RPoly rprem(const Field* f, RPoly a, const RPoly& b) {
  const UPoly& l = b.back();
  std::size_t db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    UPoly s = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = umul(f, x, l);
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = usub(f, a[shift + i], umul(f, s, b[i]));
    rtrim(a);
  }
  return a;
}

}  // namespace

BiPoly BiPoly::constant(const Field* f, Fq c) {
  BiPoly r(f);
  if (c) r.terms_.push_back({0, c});
  return r;
}

BiPoly BiPoly::monomial(const Field* f, std::uint64_t ti, std::uint64_t tj, Fq c) {
  if (ti > kMaxTExp || tj > kThetaMask) throw DomainError("polynomial exponent overflow");
  BiPoly r(f);
  if (c) r.terms_.push_back({mono(ti, tj), c});
  return r;
}

BiPoly BiPoly::from_theta_coeffs(const Field* f, const std::vector<Fq>& c) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) t.push_back({mono(0, i), c[i]});
  return from_terms(f, std::move(t));
}

BiPoly BiPoly::from_terms(const Field* f, std::vector<Term> terms) {
  BiPoly r(f);
  bool sorted = true;
  for (std::size_t i = 1; i < terms.size() && sorted; ++i) sorted = terms[i - 1].m < terms[i].m;
  if (!sorted) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    std::vector<Term> merged;
    for (auto& x : terms) {
      if (!merged.empty() && merged.back().m == x.m)
        merged.back().c = f->add(merged.back().c, x.c);
      else
        merged.push_back(x);
    }
    terms.swap(merged);
  }
  terms.erase(std::remove_if(terms.begin(), terms.end(), [](const Term& x) { return x.c == 0; }), terms.end());
  r.terms_ = std::move(terms);
  return r;
}

bool BiPoly::t_only() const {
  for (auto& x : terms_)
    if (th_exp(x.m)) return false;
  return true;
}

std::int64_t BiPoly::deg_theta() const {
  if (terms_.empty()) return -1;
  std::uint64_t d = 0;
  for (auto& x : terms_) d = std::max(d, th_exp(x.m));
  return static_cast<std::int64_t>(d);
}

Fq BiPoly::coeff(std::uint64_t ti, std::uint64_t tj) const {
  Mono m = mono(ti, tj);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& a, Mono k) { return a.m < k; });
  return (it != terms_.end() && it->m == m) ? it->c : Fq(0);
}

BiPoly BiPoly::t_coeff(std::uint64_t i) const {
  BiPoly r(f_);
  for (auto& x : terms_)
    if (t_exp(x.m) == i) r.terms_.push_back({mono(0, th_exp(x.m)), x.c});
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& x : r.terms_) x.c = f_->neg(x.c);
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.terms_.empty()) {
    f_ = join_fields(f_, o.f_);
    return *this;
  }
  f_ = join_fields(f_, o.f_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].m < o.terms_[j].m)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].m < terms_[i].m) {
      out.push_back(o.terms_[j++]);
    } else {
      Fq c = f_->add(terms_[i].c, o.terms_[j].c);
      if (c) out.push_back({terms_[i].m, c});
      ++i, ++j;
    }
  }
  terms_.swap(out);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  const Field* f = join_fields(a.f_, b.f_);
  if (a.is_zero() || b.is_zero()) return BiPoly(f);
  if (a.size() == 1 && a.terms_[0].m == 0) return b.scaled(a.terms_[0].c);
  if (b.size() == 1 && b.terms_[0].m == 0) return a.scaled(b.terms_[0].c);
  return accumulate(f, {{&a, &b}});
}

BiPoly sum_of_products(const Field* f, const Pairs& pairs) {
  for (auto& [a, b] : pairs) f = join_fields(f, join_fields(a->field(), b->field()));
  return accumulate(f, pairs);
}

BiPoly BiPoly::scaled(Fq c) const {
  if (c == 0) return BiPoly(f_);
  if (c == 1) return *this;
  BiPoly r(*this);
  for (auto& x : r.terms_) x.c = f_->mul(x.c, c);
  return r;
}

BiPoly BiPoly::shifted(std::uint64_t ti, std::uint64_t tj) const {
  BiPoly r(*this);
  for (auto& x : r.terms_) {
    if (t_exp(x.m) + ti > kMaxTExp || th_exp(x.m) + tj > kThetaMask) throw DomainError("polynomial exponent overflow");
    x.m += mono(ti, tj);
  }
  return r;
}

BiPoly BiPoly::pow(std::uint64_t n) const {
  if (n == 0) return constant(f_, 1);
  BiPoly base = *this;
  const std::uint64_t p = f_ ? f_->p() : 2;
  // Frobenius on the p-part of the exponent.
  while (n % p == 0 && !base.is_zero()) {
    std::vector<Term> t;
    t.reserve(base.size());
    for (auto& x : base.terms_) {
      if (t_exp(x.m) * p > kMaxTExp || th_exp(x.m) * p > kThetaMask) throw DomainError("polynomial exponent overflow");
      t.push_back({mono(t_exp(x.m) * p, th_exp(x.m) * p), f_->pow(x.c, p)});
    }
    base.terms_ = std::move(t);
    n /= p;
  }
  BiPoly r = constant(f_, 1);
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

BiPoly BiPoly::twist(int k) const {
  if (k == 0 || terms_.empty()) return *this;
  std::uint64_t qk = 1;
  for (int i = 0; i < std::abs(k); ++i) {
    qk *= f_->q();
    if (qk > kThetaMask) {
      if (k < 0) throw NotInImageError();
      throw DomainError("polynomial exponent overflow");
    }
  }
  BiPoly r(f_);
  r.terms_.reserve(terms_.size());
  for (auto& x : terms_) {
    std::uint64_t j = th_exp(x.m);
    if (k > 0) {
      if (j && j > kThetaMask / qk) throw DomainError("polynomial exponent overflow");
      r.terms_.push_back({mono(t_exp(x.m), j * qk), x.c});
    } else {
      if (j % qk) throw NotInImageError();
      r.terms_.push_back({mono(t_exp(x.m), j / qk), x.c});
    }
  }
  return r;
}

BiPoly BiPoly::subst_t_theta_power(std::uint64_t m) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto& x : terms_) {
    std::uint64_t j = t_exp(x.m) * m + th_exp(x.m);
    if (j > kThetaMask) throw DomainError("polynomial exponent overflow");
    t.push_back({mono(0, j), x.c});
  }
  return from_terms(f_, std::move(t));
}

BiPoly BiPoly::subst_t_const(Fq c) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto& x : terms_) t.push_back({mono(0, th_exp(x.m)), f_->mul(x.c, f_->pow(c, t_exp(x.m)))});
  return from_terms(f_, std::move(t));
}

BiPoly BiPoly::subst_t(const BiPoly& v) const {
  if (terms_.empty()) return *this;
  BiPoly r(join_fields(f_, v.f_));
  for (std::int64_t i = deg_t(); i >= 0; --i) r = r * v + t_coeff(i);
  return r;
}

BiPoly BiPoly::swap_vars() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto& x : terms_) {
    if (th_exp(x.m) > kMaxTExp) throw DomainError("polynomial exponent overflow");
    t.push_back({mono(th_exp(x.m), t_exp(x.m)), x.c});
  }
  return from_terms(f_, std::move(t));
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::uint64_t ti = t_exp(it->m), tj = th_exp(it->m);
    std::string c = f_->to_string(it->c);
    bool compound = c.find(' ') != std::string::npos;
    std::string m;
    if (ti) m += ti == 1 ? "t" : "t^" + std::to_string(ti);
    if (tj) m += (m.empty() ? "" : "*") + std::string(tj == 1 ? "th" : "th^" + std::to_string(tj));
    if (m.empty()) {
      os << c;
    } else if (it->c == 1) {
      os << m;
    } else {
      os << (compound ? "(" + c + ")" : c) << "*" << m;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const Field* f;
  std::string s;
  std::size_t i = 0;

  [[noreturn]] void fail() { throw DomainError("cannot parse polynomial '" + s + "'"); }
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::uint64_t integer() {
    ws();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail();
    std::uint64_t v = std::stoull(s.substr(i, j - i));
    i = j;
    return v;
  }
  BiPoly atom() {
    ws();
    if (i >= s.size()) fail();
    if (s[i] == '(') {
      ++i;
      BiPoly r = expr();
      if (!eat(')')) fail();
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) return BiPoly::from_int(f, static_cast<std::int64_t>(integer() % f->p()));
    if (s.compare(i, 2, "th") == 0) {
      i += 2;
      return BiPoly::theta(f);
    }
    if (s[i] == 't') {
      ++i;
      return BiPoly::t(f);
    }
    if (s[i] == 'x') {
      if (f->e() == 1) fail();
      ++i;
      return BiPoly::constant(f, static_cast<Fq>(f->p()));
    }
    fail();
  }
  BiPoly factor() {
    BiPoly a = atom();
    if (eat('^')) a = a.pow(integer());
    return a;
  }
  BiPoly term() {
    BiPoly a = factor();
    while (eat('*')) a = a * factor();
    return a;
  }
  BiPoly expr() {
    BiPoly r(f);
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        break;
    }
    return r;
  }
};

}  // namespace

BiPoly BiPoly::parse(const Field* f, const std::string& text) {
  Parser ps{f, text};
  BiPoly r = ps.expr();
  ps.ws();
  if (ps.i != text.size()) ps.fail();
  return r;
}

std::optional<BiPoly> divexact(const BiPoly& a, const BiPoly& b) {
  const Field* f = join_fields(a.f_, b.f_);
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return BiPoly(f);
  if (b.is_constant()) return a.scaled(f->inv(b.constant_coeff()));
  if (b.deg_t() > a.deg_t() || b.deg_theta() > a.deg_theta()) return std::nullopt;
  const Term lb = b.leading();
  const Fq linv = f->inv(lb.c);
  const std::uint64_t bt = t_exp(lb.m), bj = th_exp(lb.m);
  std::map<Mono, Fq> r;
  for (auto& x : a.terms()) r.emplace_hint(r.end(), x.m, x.c);
  std::vector<Term> quo;
  while (!r.empty()) {
    auto top = std::prev(r.end());
    std::uint64_t ti = t_exp(top->first), tj = th_exp(top->first);
    if (ti < bt || tj < bj) return std::nullopt;
    Mono qm = mono(ti - bt, tj - bj);
    Fq qc = f->mul(top->second, linv);
    quo.push_back({qm, qc});
    for (auto& y : b.terms()) {
      Mono m = y.m + qm;
      Fq sub = f->mul(qc, y.c);
      auto it = r.find(m);
      if (it == r.end()) {
        r.emplace(m, f->neg(sub));
      } else {
        it->second = f->sub(it->second, sub);
        if (it->second == 0) r.erase(it);
      }
    }
  }
  return BiPoly::from_terms(f, std::move(quo));
}

Fq make_monic(BiPoly& a) {
  if (a.is_zero()) return 1;
  Fq lc = a.leading().c;
  if (lc != 1) a = a.scaled(a.field()->inv(lc));
  return lc;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  const Field* f = join_fields(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) {
    BiPoly r = a.is_zero() ? b : a;
    make_monic(r);
    return r;
  }
  if (a.is_constant() || b.is_constant()) return BiPoly::constant(f, 1);
  // Monomial factors: gcd with t^i th^j is read off exponents.
  if (a.size() == 1 || b.size() == 1) {
    const BiPoly& m = a.size() == 1 ? a : b;
    const BiPoly& o = a.size() == 1 ? b : a;
    std::uint64_t ti = t_exp(m.leading().m), tj = th_exp(m.leading().m);
    for (auto& x : o.terms()) ti = std::min(ti, t_exp(x.m)), tj = std::min(tj, th_exp(x.m));
    return BiPoly::monomial(f, ti, tj);
  }
  // A primitive polynomial of degree one in t is irreducible.
  for (const BiPoly* lin : {&b, &a}) {
    const BiPoly* other = lin == &b ? &a : &b;
    if (lin->deg_t() != 1) continue;
    UPoly c1 = to_upoly(lin->t_coeff(1)), c0 = to_upoly(lin->t_coeff(0));
    if (c0.empty() || ugcd(f, c1, c0).size() != 1) continue;
    if (divexact(*other, *lin)) {
      BiPoly r = *lin;
      make_monic(r);
      return r;
    }
    return BiPoly::constant(f, 1);
  }
  if (a.theta_only() && b.theta_only()) return from_upoly(f, ugcd(f, to_upoly(a), to_upoly(b)));
  RPoly ra = to_rpoly(a), rb = to_rpoly(b);
  UPoly ca = rcontent(f, ra), cb = rcontent(f, rb);
  UPoly c = ugcd(f, ca, cb);
  if (a.theta_only() || b.theta_only()) return from_upoly(f, c);
  ra = rprimitive(f, ra);
  rb = rprimitive(f, rb);
  for (;;) {
    if (ra.size() < rb.size()) std::swap(ra, rb);
    RPoly r = rprem(f, ra, rb);
    if (r.empty()) break;
    if (r.size() == 1) {
      rb = {UPoly{1}};
      break;
    }
    ra = std::move(rb);
    rb = rprimitive(f, std::move(r));
  }
  RPoly g = rb;
  for (auto& x : g) x = umul(f, x, c);
  BiPoly res = from_rpoly(f, g);
  make_monic(res);
  return res;
}

}  // namespace dmf
