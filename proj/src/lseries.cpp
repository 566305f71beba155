#include "dmf/lseries.hpp"

#include <algorithm>
#include <map>

#include "dmf/algebra.hpp"
#include "dmf/error.hpp"

namespace dmf {

namespace {

// Exponent scaling for the twist; exact precision stays exact.
Exp scale_prec(Exp p, Exp k) {
  if (p >= kExact) return kExact;
  Exp r = sat_mul(p, k);
  if (r >= kExact || r <= -kExact) throw DomainError("x-exponent overflow");
  return r;
}

Exp min_prec(Exp a, Exp b) { return std::min(a, b); }

}  // namespace

void KInf::normalize() {
  if (!exact()) {
    Exp keep = prec_ - val_;
    if (keep <= 0)
      dig_.clear();
    else if (static_cast<Exp>(dig_.size()) > keep)
      dig_.resize(static_cast<std::size_t>(keep));
  }
  while (!dig_.empty() && dig_.back() == 0) dig_.pop_back();
  std::size_t lead = 0;
  while (lead < dig_.size() && dig_[lead] == 0) ++lead;
  if (lead == dig_.size()) {
    dig_.clear();
    val_ = 0;
    return;
  }
  if (lead) {
    dig_.erase(dig_.begin(), dig_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<Exp>(lead);
  }
}

KInf KInf::x_power(const Field* f, Exp n, Fq c, Exp prec) {
  KInf r(f, prec);
  r.val_ = n;
  r.dig_ = {c};
  r.normalize();
  return r;
}

KInf KInf::from_theta_poly(const BiPoly& p) {
  if (!p.theta_only()) throw DomainError("expected a polynomial in theta alone");
  KInf r(p.field());
  if (p.is_zero()) return r;
  Exp deg = p.deg_theta();
  r.val_ = -deg;
  r.dig_.assign(static_cast<std::size_t>(deg + 1), 0);
  for (const auto& t : p.terms()) r.dig_[static_cast<std::size_t>(deg - static_cast<Exp>(th_exp(t.m)))] = t.c;
  r.normalize();
  return r;
}

KInf KInf::from_digits(const Field* f, Exp val, const std::vector<Fq>& d, Exp prec) {
  KInf r(f, prec);
  r.val_ = val;
  r.dig_ = d;
  r.normalize();
  return r;
}

Fq KInf::digit(Exp n) const {
  if (n >= prec_) throw PrecisionError("x-digit beyond the certified precision");
  if (dig_.empty() || n < val_ || n >= val_ + static_cast<Exp>(dig_.size())) return 0;
  return dig_[static_cast<std::size_t>(n - val_)];
}

KInf KInf::truncated(Exp p) const {
  KInf r = *this;
  r.prec_ = std::min(prec_, p);
  r.normalize();
  return r;
}

KInf KInf::rel_truncated(Exp r) const {
  if (dig_.empty() || r >= kExact) return *this;
  return truncated(sat_add(val_, r));
}

KInf KInf::operator-() const {
  KInf r = *this;
  for (auto& c : r.dig_) c = f_->neg(c);
  return r;
}

KInf KInf::scaled(Fq c) const {
  KInf r = *this;
  for (auto& d : r.dig_) d = f_->mul(d, c);
  r.normalize();
  return r;
}

KInf KInf::shifted(Exp s) const {
  KInf r = *this;
  r.val_ += s;
  if (!r.exact()) r.prec_ += s;
  return r;
}

KInf operator+(const KInf& a, const KInf& b) {
  const Field* f = a.f_ ? a.f_ : b.f_;
  KInf r(f, min_prec(a.prec_, b.prec_));
  if (a.dig_.empty() && b.dig_.empty()) return r;
  Exp lo = a.dig_.empty() ? b.val_ : (b.dig_.empty() ? a.val_ : std::min(a.val_, b.val_));
  Exp hi = lo;
  if (!a.dig_.empty()) hi = std::max(hi, a.val_ + static_cast<Exp>(a.dig_.size()));
  if (!b.dig_.empty()) hi = std::max(hi, b.val_ + static_cast<Exp>(b.dig_.size()));
  hi = std::min(hi, r.prec_);
  if (hi <= lo) return r;
  r.val_ = lo;
  r.dig_.assign(static_cast<std::size_t>(hi - lo), 0);
  auto acc = [&](const KInf& x) {
    for (std::size_t i = 0; i < x.dig_.size(); ++i) {
      Exp e = x.val_ + static_cast<Exp>(i);
      if (e >= hi) break;
      auto& d = r.dig_[static_cast<std::size_t>(e - lo)];
      d = f->add(d, x.dig_[i]);
    }
  };
  acc(a);
  acc(b);
  r.normalize();
  return r;
}

KInf operator*(const KInf& a, const KInf& b) {
  const Field* f = a.f_ ? a.f_ : b.f_;
  Exp va = a.valuation(), vb = b.valuation();
  KInf r(f, std::min(sat_add(a.prec_, vb), sat_add(b.prec_, va)));
  if (a.dig_.empty() || b.dig_.empty()) return r;
  Exp len = static_cast<Exp>(a.dig_.size() + b.dig_.size() - 1);
  if (!r.exact()) len = std::min(len, r.prec_ - va - vb);
  if (len <= 0) return r;
  r.val_ = va + vb;
  r.dig_.assign(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < a.dig_.size() && static_cast<Exp>(i) < len; ++i) {
    Fq x = a.dig_[i];
    if (!x) continue;
    std::size_t jmax = std::min(b.dig_.size(), static_cast<std::size_t>(len) - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (!b.dig_[j]) continue;
      auto& d = r.dig_[i + j];
      d = f->add(d, f->mul(x, b.dig_[j]));
    }
  }
  r.normalize();
  return r;
}

KInf KInf::inverse(Exp rel_cap) const {
  if (dig_.empty()) throw PrecisionError("inverse of an element indistinguishable from 0");
  Fq b0 = f_->inv(dig_[0]);
  if (exact() && dig_.size() == 1) return x_power(f_, -val_, b0);
  Exp r = exact() ? rel_cap : std::min(prec_ - val_, rel_cap);
  if (r >= kExact) throw DomainError("inverse of an exact non-monomial needs a digit cap");
  KInf out(f_, -val_ + r);
  out.val_ = -val_;
  out.dig_.assign(static_cast<std::size_t>(r), 0);
  Fq nb0 = f_->neg(b0);
  for (Exp n = 0; n < r; ++n) {
    if (n == 0) {
      out.dig_[0] = b0;
      continue;
    }
    Fq s = 0;
    Exp kmax = std::min<Exp>(n, static_cast<Exp>(dig_.size()) - 1);
    for (Exp k = 1; k <= kmax; ++k) {
      Fq ak = dig_[static_cast<std::size_t>(k)];
      if (ak) s = f_->add(s, f_->mul(ak, out.dig_[static_cast<std::size_t>(n - k)]));
    }
    out.dig_[static_cast<std::size_t>(n)] = f_->mul(nb0, s);
  }
  out.normalize();
  return out;
}

KInf KInf::pow(std::int64_t n, Exp rel_cap) const {
  if (n < 0) return inverse(rel_cap).pow(-n, rel_cap);
  KInf r = constant(f_, 1), b = *this;
  while (n) {
    if (n & 1) r = (r * b).rel_truncated(rel_cap);
    n >>= 1;
    if (n) b = (b * b).rel_truncated(rel_cap);
  }
  return r;
}

KInf KInf::frobenius(int k) const {
  if (k < 0) throw DomainError("negative twist at the infinite place");
  Exp qk = qpow(f_->q(), k);
  KInf r(f_, scale_prec(prec_, qk));
  if (dig_.empty()) return r;
  r.val_ = scale_prec(val_, qk);
  r.dig_.assign(static_cast<std::size_t>((static_cast<Exp>(dig_.size()) - 1) * qk + 1), 0);
  for (std::size_t i = 0; i < dig_.size(); ++i) r.dig_[static_cast<std::size_t>(static_cast<Exp>(i) * qk)] = dig_[i];
  r.normalize();
  return r;
}

bool operator==(const KInf& a, const KInf& b) {
  return a.prec_ == b.prec_ && a.dig_ == b.dig_ && (a.dig_.empty() || a.val_ == b.val_);
}

nlohmann::json KInf::to_json() const {
  nlohmann::json j;
  j["exact"] = exact();
  if (exact())
    j["prec"] = nullptr;
  else
    j["prec"] = prec_;
  if (dig_.empty()) {
    j["theta_degree"] = nullptr;
    j["digits"] = nlohmann::json::array();
    return j;
  }
  // digits from the leading theta-power downward
  j["theta_degree"] = -val_;
  nlohmann::json d = nlohmann::json::array();
  for (Fq c : dig_) d.push_back(f_->to_string(c));
  j["digits"] = d;
  return j;
}

std::optional<Exp> first_difference(const KInf& a, const KInf& b) {
  Exp p = std::min(a.prec(), b.prec());
  KInf d = (a - b).truncated(p);
  if (d.is_zero()) return std::nullopt;
  return d.valuation();
}

bool agree(const KInf& a, const KInf& b) { return !first_difference(a, b).has_value(); }

InfSeries::InfSeries(const Field* fld, int t_order) : f(fld), c(static_cast<std::size_t>(t_order), KInf(fld)) {}

InfSeries InfSeries::constant(const KInf& a, int t_order) {
  InfSeries r(a.field(), t_order);
  if (t_order > 0) r.c[0] = a;
  return r;
}

Exp InfSeries::prec() const {
  Exp p = kExact;
  for (const auto& x : c) p = std::min(p, x.prec());
  return p;
}

InfSeries InfSeries::truncated(Exp p) const {
  InfSeries r = *this;
  for (auto& x : r.c) x = x.truncated(p);
  return r;
}

InfSeries operator+(const InfSeries& a, const InfSeries& b) {
  int t = std::min(a.t_order(), b.t_order());
  InfSeries r(a.f ? a.f : b.f, t);
  for (int j = 0; j < t; ++j) r.c[j] = a.c[j] + b.c[j];
  return r;
}

InfSeries InfSeries::operator-() const {
  InfSeries r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

InfSeries operator-(const InfSeries& a, const InfSeries& b) { return a + (-b); }

InfSeries operator*(const InfSeries& a, const InfSeries& b) {
  int t = std::min(a.t_order(), b.t_order());
  InfSeries r(a.f ? a.f : b.f, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; i + j < t; ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

InfSeries operator*(const KInf& k, const InfSeries& a) {
  InfSeries r = a;
  for (auto& x : r.c) x = k * x;
  return r;
}

InfSeries InfSeries::times_t_minus_theta() const {
  InfSeries r(f, t_order());
  KInf th = KInf::theta_power(f, 1);
  for (int j = 0; j < t_order(); ++j) {
    r.c[j] = -(th * c[j]);
    if (j) r.c[j] += c[j - 1];
  }
  return r;
}

InfSeries InfSeries::frobenius(int k) const {
  InfSeries r = *this;
  for (auto& x : r.c) x = x.frobenius(k);
  return r;
}

nlohmann::json InfSeries::to_json() const {
  nlohmann::json j;
  j["t_order"] = t_order();
  Exp p = prec();
  if (p >= kExact)
    j["prec"] = nullptr;
  else
    j["prec"] = p;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& x : c) cs.push_back(x.to_json());
  j["coefficients"] = cs;
  return j;
}

bool agree(const InfSeries& a, const InfSeries& b) {
  if (a.t_order() != b.t_order()) return false;
  for (int j = 0; j < a.t_order(); ++j)
    if (!agree(a.c[j], b.c[j])) return false;
  return true;
}

KInf pibar_power(const Field* f, std::int64_t m, Exp n) {
  std::int64_t r1 = f->q() - 1;
  if (m % r1 != 0) throw DomainError("fractional pibar-power");
  if (m == 0) return KInf::constant(f, 1);
  std::int64_t s = m / r1;
  // pibar^m = (-1)^s theta^(m + s) P^(-m), P = prod_(i >= 1) (1 - x^(q^i - 1))
  Exp lead = m + s;
  Exp rel = std::max<Exp>(1, n + lead);
  KInf p = KInf::constant(f, 1).truncated(rel);
  for (int i = 1; qpow(f->q(), i) - 1 < rel; ++i)
    p = p * (KInf::constant(f, 1) - KInf::x_power(f, qpow(f->q(), i) - 1));
  KInf v = p.pow(-m).shifted(-lead);
  if (s % 2) v = -v;
  return v;
}

InfSeries scar_normalized(const Field* f, int T, Exp n) {
  if (T < 1 || n < 1) throw DomainError("scar_normalized needs T, N >= 1");
  int q = f->q();
  InfSeries s(f, T);
  for (auto& x : s.c) x = KInf(f);
  // term k has valuation k q^k + q^k - (q^k - 1) q / (q - 1), increasing in k
  for (int k = 0;; ++k) {
    Exp qk = qpow(q, k);
    Exp v = k * qk + qk - (qk - 1) * q / (q - 1);
    if (v >= n) break;
    Exp need = n - qk;
    KInf dk = KInf::from_theta_poly(dfact(f, k));
    KInf pk = pibar_power(f, qk - 1, need - k * qk);
    KInf ck = pk * dk.inverse(std::max<Exp>(1, need - v + qk + 1));
    for (int j = 0; j < T; ++j) s.c[j] += ck.shifted(qk * (j + 1));
  }
  return s.truncated(n);
}

KInf scar_residue_at_theta(const Field* f, Exp n) {
  int q = f->q();
  KInf r(f);
  KInf zero(f);
  for (int k = 0;; ++k) {
    Exp qk = qpow(q, k);
    Exp v = k * qk - (qk - 1) * q / (q - 1);
    if (v >= n) break;
    // (t - theta) / (theta^(q^k) - t) at t = theta
    KInf ratio = k == 0 ? KInf::from_int(f, -1)
                        : zero * KInf::from_theta_poly(bracket(f, k)).inverse(std::max<Exp>(1, n - v + 1));
    if (ratio.is_zero()) continue;
    r += pibar_power(f, qk - 1, n + k * qk) * KInf::from_theta_poly(dfact(f, k)).inverse(n + qk * k) * ratio;
  }
  return r.truncated(n);
}

// The x^(<n) digits of the degree-d block involve monomials in the free
// coefficients of total degree <= n - 1 - alpha d + l, and the sum over F_q^d
// kills every monomial of degree < d (q - 1).
int lseries_degree_bound(const Field* f, int l, int alpha, Exp n) {
  Exp num = n - 1 + l;
  if (num < 0) return -1;
  return static_cast<int>(num / (f->q() - 1 + alpha));
}

namespace {

struct BlockPiece {
  std::vector<int> k;  // selected free coefficient indices
  std::vector<int> e;  // their exponents
  bool operator<(const BlockPiece& o) const { return std::tie(k, e) < std::tie(o.k, o.e); }
};

// sum over monic a = theta^d + sum_(j in K) s_j theta^j + v, v in the span
// V' of the remaining theta^i (i < d), of prod s_j^(e_j) a^(-alpha), using
// sum_(v in V') (X - v)^(-alpha) = (-1)^(alpha-1) [Z^(alpha-1)] E_0 / (e(X) + e(Z))
// for the subspace polynomial e(X) = prod_(v in V') (X - v) = sum E_i X^(q^i).
KInf piece_sum(const Field* f, int alpha, int d, const BlockPiece& pc, Exp rel) {
  int q = f->q();
  int top = 0;
  while (qpow(q, top + 1) <= alpha - 1) ++top;
  std::vector<KInf> en{KInf::constant(f, 1)};
  std::vector<KInf> g;
  for (int j = 0; j <= d; ++j) g.push_back(KInf::theta_power(f, j));
  int gens = 0;
  for (int i = 0; i < d; ++i) {
    if (std::find(pc.k.begin(), pc.k.end(), i) != pc.k.end()) continue;
    KInf gamma = g[i].pow(q - 1, rel).rel_truncated(rel);
    std::vector<KInf> ne(std::min(gens + 2, top + 1), KInf(f));
    for (std::size_t l = 0; l < ne.size(); ++l) {
      KInf x = l < en.size() ? -(gamma * en[l]) : KInf(f);
      if (l >= 1 && l - 1 < en.size()) x += en[l - 1].frobenius(1);
      ne[l] = x.rel_truncated(rel);
    }
    en = std::move(ne);
    ++gens;
    for (int j = 0; j <= d; ++j) g[j] = (g[j].frobenius(1) - gamma * g[j]).rel_truncated(rel);
  }
  std::size_t nk = pc.k.size();
  KInf total(f);
  std::vector<Fq> s(nk, 0);
  for (;;) {
    Fq w = 1;
    for (std::size_t j = 0; j < nk; ++j) w = f->mul(w, f->pow(s[j], static_cast<std::uint64_t>(pc.e[j])));
    if (w) {
      KInf a = g[d];
      for (std::size_t j = 0; j < nk; ++j) a += g[pc.k[j]].scaled(s[j]);
      // r = 1 / (a + sum_l E_l Z^(q^l)) up to Z^(alpha - 1)
      std::vector<KInf> r(static_cast<std::size_t>(alpha), KInf(f));
      KInf ainv = a.inverse(rel);
      r[0] = ainv;
      for (int m = 1; m < alpha; ++m) {
        KInf acc(f);
        for (std::size_t l = 0; l < en.size() && qpow(q, static_cast<int>(l)) <= m; ++l)
          acc += en[l] * r[static_cast<std::size_t>(m - qpow(q, static_cast<int>(l)))];
        r[static_cast<std::size_t>(m)] = (-(ainv * acc)).rel_truncated(rel);
      }
      KInf term = en[0] * r[static_cast<std::size_t>(alpha - 1)];
      if ((alpha - 1) % 2) term = -term;
      total += term.scaled(w);
    }
    std::size_t j = 0;
    while (j < nk && ++s[j] == q) s[j++] = 0;
    if (j == nk) break;
  }
  return total;
}

// Multisets of size l from the slots of chi_t(a) = sum_(i<d) c_i t^i + t^d
// with index sum < T, keyed by the free coefficients they select.
void enumerate_slots(int l, int d, int T, int slot, int left, int tsum, std::vector<int>& cnt,
                     std::vector<std::pair<int, std::pair<std::int64_t, BlockPiece>>>& out) {
  int last = std::min(d, T - 1);
  if (left == 0) {
    BlockPiece pc;
    std::int64_t mult = 1;
    int used = 0;
    for (int i = 0; i <= last; ++i) {
      for (int c = 1; c <= cnt[i]; ++c) mult = mult * (used + c) / c;
      used += cnt[i];
      if (cnt[i] && i < d) {
        pc.k.push_back(i);
        pc.e.push_back(cnt[i]);
      }
    }
    out.push_back({tsum, {mult, pc}});
    return;
  }
  for (int i = slot; i <= last; ++i) {
    if (tsum + i * left >= T) break;
    ++cnt[i];
    enumerate_slots(l, d, T, i, left - 1, tsum + i, cnt, out);
    --cnt[i];
  }
}

}  // namespace

InfSeries l_value_block(const Field* f, int l, int alpha, int d, int T, Exp n) {
  if (alpha < 1 || l < 0 || d < 0 || T < 1) throw DomainError("bad L-series block parameters");
  std::vector<int> cnt(static_cast<std::size_t>(d + 1), 0);
  std::vector<std::pair<int, std::pair<std::int64_t, BlockPiece>>> terms;
  enumerate_slots(l, d, T, 0, l, 0, cnt, terms);
  Exp rel = std::max<Exp>(16, n - static_cast<Exp>(alpha) * d + 16);
  for (int attempt = 0; attempt < 12; ++attempt, rel *= 2) {
    InfSeries r(f, T);
    std::map<BlockPiece, KInf> cache;
    for (const auto& [tj, mp] : terms) {
      Fq c = f->from_int(mp.first);
      if (!c) continue;
      auto it = cache.find(mp.second);
      if (it == cache.end()) it = cache.emplace(mp.second, piece_sum(f, alpha, d, mp.second, rel)).first;
      r.c[tj] += it->second.scaled(c);
    }
    if (r.prec() >= n) return r.truncated(n);
  }
  throw PrecisionError("L-series block did not reach the requested precision");
}

InfSeries l_value_series(const Field* f, int l, int alpha, int T, Exp n, int extra_degrees) {
  int dmax = lseries_degree_bound(f, l, alpha, n) + extra_degrees;
  InfSeries r(f, T);
  for (int d = 0; d <= dmax; ++d) r = r + l_value_block(f, l, alpha, d, T, n);
  return r.truncated(n);
}

InfSeries l_value_bruteforce(const Field* f, int l, int alpha, int T, Exp n, int dmax) {
  int q = f->q();
  InfSeries r(f, T);
  for (int d = 0; d <= dmax; ++d) {
    Exp rel = n - static_cast<Exp>(alpha) * d;
    if (rel <= 0) continue;
    std::vector<Fq> c(static_cast<std::size_t>(d), 0);
    for (;;) {
      std::vector<Fq> poly = c;
      poly.push_back(1);
      KInf a = KInf::from_theta_poly(BiPoly::from_theta_coeffs(f, poly));
      KInf ai = a.pow(-alpha, rel);
      // chi_t(a)^l mod t^T
      std::vector<Fq> chi(static_cast<std::size_t>(T), 0);
      chi[0] = 1;
      for (int e = 0; e < l; ++e) {
        std::vector<Fq> nx(static_cast<std::size_t>(T), 0);
        for (int i = 0; i < T; ++i)
          for (int j = 0; j <= d && i + j < T; ++j) nx[i + j] = f->add(nx[i + j], f->mul(chi[i], poly[j]));
        chi = std::move(nx);
      }
      for (int j = 0; j < T; ++j)
        if (chi[j]) r.c[j] += ai.scaled(chi[j]);
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == q) c[i++] = 0;
      if (i == c.size()) break;
    }
  }
  return r.truncated(n);
}

KInf zeta_value(const Field* f, int alpha, Exp n) { return l_value_series(f, 0, alpha, 1, n).c[0]; }

bool cor4_product_holds(const InfSeries& lvalue, const InfSeries& s, Exp n) {
  InfSeries p = lvalue * s.times_t_minus_theta();
  if (p.prec() < n) return false;
  for (int j = 0; j < p.t_order(); ++j) {
    KInf x = j == 0 ? p.c[0] + KInf::constant(p.f, 1) : p.c[j];
    if (!x.truncated(n).is_zero()) return false;
  }
  return true;
}

bool Cor4Report::ok() const {
  return product_ok && std::all_of(zeta.begin(), zeta.end(), [](const ZetaCheck& z) { return z.ok; });
}

nlohmann::json Cor4Report::to_json() const {
  nlohmann::json j;
  j["t_order"] = T;
  j["prec"] = n;
  j["product_ok"] = product_ok;
  j["product_certified"] = product_certified;
  nlohmann::json zs = nlohmann::json::array();
  for (const auto& z : zeta) {
    nlohmann::json e{{"k", z.k}, {"ok", z.ok}, {"certified", z.certified}};
    e["first_difference"] = z.first_difference ? nlohmann::json(*z.first_difference) : nlohmann::json(nullptr);
    zs.push_back(e);
  }
  j["zeta"] = zs;
  j["ok"] = ok();
  return j;
}

Cor4Report verify_corollary4_zeta(const Field* f, int T, Exp n, int kmax) {
  Cor4Report rep;
  rep.T = T;
  rep.n = n;
  InfSeries lv = l_value_series(f, 1, 1, T, n + 2);
  InfSeries s = scar_normalized(f, T, n + 2);
  rep.product_certified = (lv * s.times_t_minus_theta()).prec();
  rep.product_ok = cor4_product_holds(lv, s, n);
  int q = f->q();
  for (int k = 1; k <= kmax; ++k) {
    ZetaCheck z;
    z.k = k;
    int alpha = static_cast<int>(qpow(q, k) - 1);
    BiPoly br = bracket_product(f, k);
    KInf lhs = zeta_value(f, alpha, n + br.deg_theta()) * KInf::from_theta_poly(br);
    KInf rhs = pibar_power(f, alpha, n);
    if (k % 2) rhs = -rhs;
    z.certified = std::min(lhs.prec(), rhs.prec());
    z.first_difference = first_difference(lhs, rhs);
    z.ok = z.certified >= n && !z.first_difference;
    rep.zeta.push_back(z);
  }
  return rep;
}

}  // namespace dmf
