#ifndef DMF_LSERIES_HPP
#define DMF_LSERIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "dmf/bipoly.hpp"
#include "dmf/field.hpp"
#include "dmf/useries.hpp"

namespace dmf {

// Truncated Laurent series in x = 1/theta over F_q. Digits are stored from
// x^val upward with no leading or trailing zeros; every x^n with n < prec is
// known, prec = kExact for exact values.
class KInf {
 public:
  KInf() = default;
  explicit KInf(const Field* f, Exp prec = kExact) : f_(f), prec_(prec) {}

  // c x^n.
  static KInf x_power(const Field* f, Exp n, Fq c = 1, Exp prec = kExact);
  static KInf theta_power(const Field* f, Exp j, Fq c = 1) { return x_power(f, -j, c); }
  static KInf constant(const Field* f, Fq c) { return x_power(f, 0, c); }
  static KInf from_int(const Field* f, std::int64_t n) { return constant(f, f->from_int(n)); }
  // A theta-only polynomial.
  static KInf from_theta_poly(const BiPoly& p);
  // Digits d[i] of x^(val + i), known below prec.
  static KInf from_digits(const Field* f, Exp val, const std::vector<Fq>& d, Exp prec);

  const Field* field() const { return f_; }
  Exp prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  // Known zero below prec.
  bool is_zero() const { return dig_.empty(); }
  // x-adic valuation; prec when indistinguishable from 0.
  Exp valuation() const { return dig_.empty() ? prec_ : val_; }
  // theta-degree of the leading term.
  Exp theta_degree() const { return -valuation(); }
  // Coefficient of x^n; PrecisionError at or beyond prec.
  Fq digit(Exp n) const;
  // Absolute truncation: forget x^n for n >= p.
  KInf truncated(Exp p) const;
  // Keep r digits past the valuation.
  KInf rel_truncated(Exp r) const;

  KInf operator-() const;
  KInf& operator+=(const KInf& o) { return *this = *this + o; }
  KInf& operator-=(const KInf& o) { return *this = *this - o; }
  KInf& operator*=(const KInf& o) { return *this = *this * o; }
  friend KInf operator+(const KInf& a, const KInf& b);
  friend KInf operator-(const KInf& a, const KInf& b) { return a + (-b); }
  friend KInf operator*(const KInf& a, const KInf& b);
  friend KInf operator/(const KInf& a, const KInf& b) { return a * b.inverse(); }
  KInf scaled(Fq c) const;
  // Multiplication by x^s.
  KInf shifted(Exp s) const;
  // Inversion keeps the relative precision; an exact non-monomial input needs
  // rel_cap digits.
  KInf inverse(Exp rel_cap = kExact) const;
  KInf pow(std::int64_t n, Exp rel_cap = kExact) const;
  // theta -> theta^(q^k) for k >= 0, the coefficientwise q^k-th power.
  KInf frobenius(int k) const;

  // Structural equality of digits and precision.
  friend bool operator==(const KInf& a, const KInf& b);

  nlohmann::json to_json() const;

 private:
  void normalize();

  const Field* f_ = nullptr;
  Exp val_ = 0;
  std::vector<Fq> dig_;
  Exp prec_ = kExact;
};

// Digits agree below the common precision.
bool agree(const KInf& a, const KInf& b);
std::optional<Exp> first_difference(const KInf& a, const KInf& b);

// Truncated power series in t with KInf coefficients; t^j is known for j < T.
struct InfSeries {
  const Field* f = nullptr;
  std::vector<KInf> c;

  InfSeries() = default;
  InfSeries(const Field* fld, int t_order);
  static InfSeries constant(const KInf& a, int t_order);

  int t_order() const { return static_cast<int>(c.size()); }
  // Minimum absolute x-precision over the coefficients.
  Exp prec() const;
  InfSeries truncated(Exp p) const;

  friend InfSeries operator+(const InfSeries& a, const InfSeries& b);
  friend InfSeries operator-(const InfSeries& a, const InfSeries& b);
  friend InfSeries operator*(const InfSeries& a, const InfSeries& b);
  friend InfSeries operator*(const KInf& k, const InfSeries& a);
  InfSeries operator-() const;
  friend bool operator==(const InfSeries& a, const InfSeries& b) { return a.f == b.f && a.c == b.c; }
  // Multiplication by (t - theta).
  InfSeries times_t_minus_theta() const;
  InfSeries frobenius(int k) const;

  nlohmann::json to_json() const;
};

bool agree(const InfSeries& a, const InfSeries& b);

// pibar^m for (q - 1) | m, known below x^n.
KInf pibar_power(const Field* f, std::int64_t m, Exp n);

// s_Car / pibar as a t-series, t^j for j < T, every coefficient known below x^n.
InfSeries scar_normalized(const Field* f, int T, Exp n);
// ((t - theta) S)(theta) summed termwise: only the n = 0 term survives.
KInf scar_residue_at_theta(const Field* f, Exp n);

// Largest degree of monics that can contribute below x^n to L(chi_t^l, alpha).
int lseries_degree_bound(const Field* f, int l, int alpha, Exp n);

// sum over monic a of degree d of chi_t(a)^l a^(-alpha), mod t^T, below x^n.
InfSeries l_value_block(const Field* f, int l, int alpha, int d, int T, Exp n);
// L(chi_t^l, alpha) mod t^T below x^n; blocks up to the degree bound plus extra.
InfSeries l_value_series(const Field* f, int l, int alpha, int T, Exp n, int extra_degrees = 0);
// Direct enumeration over monics of degree <= dmax.
InfSeries l_value_bruteforce(const Field* f, int l, int alpha, int T, Exp n, int dmax);
// zeta(alpha) = L(chi_t^0, alpha).
KInf zeta_value(const Field* f, int alpha, Exp n);

struct ZetaCheck {
  int k = 0;
  bool ok = false;
  Exp certified = 0;
  std::optional<Exp> first_difference;
};

struct Cor4Report {
  int T = 0;
  Exp n = 0;
  bool product_ok = false;
  Exp product_certified = 0;
  std::vector<ZetaCheck> zeta;
  bool ok() const;
  nlohmann::json to_json() const;
};

// (a) L(chi_t, 1) (t - theta) S = -1 mod t^T below x^n; (b) for 1 <= k <= kmax,
// zeta(q^k - 1) [k]...[1] = (-1)^k pibar^(q^k - 1) below x^n.
Cor4Report verify_corollary4_zeta(const Field* f, int T, Exp n, int kmax);
// Same as (a) with S replaced by a caller-supplied series.
bool cor4_product_holds(const InfSeries& lvalue, const InfSeries& s, Exp n);

}  // namespace dmf

#endif
