#ifndef DMF_USERIES_HPP
#define DMF_USERIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmf/coeff.hpp"

namespace dmf {

using Exp = std::int64_t;

// Order of a series known exactly. Arithmetic saturates at this value.
constexpr Exp kExact = std::int64_t(1) << 60;

Exp sat_add(Exp a, Exp b);
Exp sat_mul(Exp a, Exp b);
// q^k as an exponent, saturating to kExact.
Exp qpow(int q, int k);

struct Tags {
  std::int64_t weight = 0;
  std::int64_t type = 0;  // residue mod q - 1
  bool operator==(const Tags& o) const { return weight == o.weight && type == o.type; }
};

// Truncated Laurent series sum c_i u^i, correct for all exponents below
// order(). Terms are sorted by exponent, nonzero, and below order().
class USeries {
 public:
  using TermT = std::pair<Exp, CoeffElem>;

  USeries() = default;
  // Zero series known to the given order.
  explicit USeries(const Field* f, Exp order = kExact) : f_(f), order_(order) {}

  static USeries monomial(const Field* f, Exp e, CoeffElem c, Exp order = kExact);
  static USeries constant(CoeffElem c, Exp order = kExact);
  static USeries one(const Field* f, Exp order = kExact) { return constant(CoeffElem::constant(f, 1), order); }
  static USeries u(const Field* f, Exp order = kExact) { return monomial(f, 1, CoeffElem::constant(f, 1), order); }
  // Terms may be unsorted and contain zeros or exponents >= order.
  static USeries from_terms(const Field* f, std::vector<TermT> terms, Exp order);

  const Field* field() const { return f_; }
  const std::vector<TermT>& terms() const { return terms_; }
  Exp order() const { return order_; }
  bool exact() const { return order_ >= kExact; }
  bool is_zero() const { return terms_.empty(); }
  // Lowest nonzero exponent; order() for a series with no known terms.
  Exp valuation() const { return terms_.empty() ? order_ : terms_.front().first; }
  // Throws PrecisionError for i >= order().
  CoeffElem coeff(Exp i) const;
  const CoeffElem& lead() const;
  bool is_integral() const;
  bool theta_only() const;

  const std::optional<Tags>& tags() const { return tags_; }
  // Attaches weight/type after checking the type condition on exponents.
  USeries with_tags(std::int64_t weight, std::int64_t type) const;
  USeries without_tags() const;
  // Lowers the order to min(order(), n).
  USeries truncated(Exp n) const;
  // Same terms, declared exact.
  USeries exact_part() const;

  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const CoeffElem& c, const USeries& a);
  friend USeries operator/(const USeries& a, const USeries& b) { return a * b.inverse(); }
  USeries& operator+=(const USeries& o) { return *this = *this + o; }
  USeries& operator-=(const USeries& o) { return *this = *this - o; }
  USeries& operator*=(const USeries& o) { return *this = *this * o; }
  // Structural equality: same terms and the same order.
  friend bool operator==(const USeries& a, const USeries& b) { return a.order_ == b.order_ && a.terms_ == b.terms_; }

  // Multiplication by u^s.
  USeries shifted(Exp s) const;
  // The cap bounds the order of an otherwise infinite expansion; an exact
  // non-monomial input without a cap raises PrecisionError.
  USeries inverse(Exp cap = kExact) const;
  USeries pow(std::int64_t n, Exp cap = kExact) const;
  // Frobenius power f^p computed coefficientwise.
  USeries frobenius_power() const;

  // tau^k: exponents times q^k, coefficients twisted, t fixed.
  USeries tau(int k = 1) const;
  // D_1 = u^2 d/du.
  USeries d1() const;

  USeries map_coeffs(const std::function<CoeffElem(const CoeffElem&)>& fn) const;
  USeries subst_t_theta_power(std::uint64_t m) const;
  USeries subst_t_const(Fq c) const;

  std::string to_json() const;
  std::string to_csv() const;
  static USeries from_json(const Field* f, const std::string& text);

 private:
  void normalize();

  const Field* f_ = nullptr;
  std::vector<TermT> terms_;
  Exp order_ = kExact;
  std::optional<Tags> tags_;
};

// a and b agree on every exponent below min(a.order(), b.order()).
bool agree(const USeries& a, const USeries& b);
// First exponent below the common order at which a and b differ.
std::optional<Exp> first_difference(const USeries& a, const USeries& b);

USeries div(const USeries& a, const USeries& b, Exp cap);

// Unique g with g^(q-1) = f and leading term c u^e.
USeries root_q_minus_1(const USeries& f, Exp e, const CoeffElem& c, Exp cap = kExact);

// [f]_n: terms with exponent <= q^n - 1, or the constant term for n < 0.
USeries truncate_block(const USeries& f, int n);

}  // namespace dmf

#endif
