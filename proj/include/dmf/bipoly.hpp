#ifndef DMF_BIPOLY_HPP
#define DMF_BIPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmf/field.hpp"

namespace dmf {

// Monomial t^i th^j packed as (i << 40) | j. Integer order on the packed key
// is the t-major, theta-minor lexicographic order.
using Mono = std::uint64_t;
constexpr int kThetaBits = 40;
constexpr std::uint64_t kThetaMask = (std::uint64_t(1) << kThetaBits) - 1;
constexpr std::uint64_t kMaxTExp = (std::uint64_t(1) << 23) - 1;

inline Mono mono(std::uint64_t ti, std::uint64_t tj) { return (ti << kThetaBits) | tj; }
inline std::uint64_t t_exp(Mono m) { return m >> kThetaBits; }
inline std::uint64_t th_exp(Mono m) { return m & kThetaMask; }

struct Term {
  Mono m;
  Fq c;
  bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

// Sparse polynomial in F_q[t, theta]. Terms are kept sorted by key with no
// zero coefficients, so equality is structural.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const Field* f) : f_(f) {}

  static BiPoly constant(const Field* f, Fq c);
  static BiPoly from_int(const Field* f, std::int64_t n) { return constant(f, f->from_int(n)); }
  static BiPoly monomial(const Field* f, std::uint64_t ti, std::uint64_t tj, Fq c = 1);
  static BiPoly t(const Field* f) { return monomial(f, 1, 0); }
  static BiPoly theta(const Field* f) { return monomial(f, 0, 1); }
  // Univariate polynomial in theta from low-to-high coefficients.
  static BiPoly from_theta_coeffs(const Field* f, const std::vector<Fq>& c);
  // Accepts the canonical rendering and general +, -, *, ^, parentheses over
  // integers, t, th and (extension fields) the generator x.
  static BiPoly parse(const Field* f, const std::string& text);
  // Builds from unsorted terms, merging duplicates.
  static BiPoly from_terms(const Field* f, std::vector<Term> terms);

  const Field* field() const { return f_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m == 0 && terms_[0].c == 1; }
  bool theta_only() const { return terms_.empty() || t_exp(terms_.back().m) == 0; }
  bool t_only() const;
  Fq constant_coeff() const { return (!terms_.empty() && terms_[0].m == 0) ? terms_[0].c : Fq(0); }
  const Term& leading() const { return terms_.back(); }
  std::int64_t deg_t() const { return terms_.empty() ? -1 : static_cast<std::int64_t>(t_exp(terms_.back().m)); }
  std::int64_t deg_theta() const;
  Fq coeff(std::uint64_t ti, std::uint64_t tj) const;
  // The theta-polynomial multiplying t^i.
  BiPoly t_coeff(std::uint64_t i) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly scaled(Fq c) const;
  BiPoly shifted(std::uint64_t ti, std::uint64_t tj) const;
  BiPoly pow(std::uint64_t n) const;
  // theta -> theta^(q^k), t fixed. For k < 0 every theta-exponent must be
  // divisible by q^(-k), otherwise NotInImageError.
  BiPoly twist(int k) const;
  // t -> theta^m.
  BiPoly subst_t_theta_power(std::uint64_t m) const;
  // t -> c in F_q.
  BiPoly subst_t_const(Fq c) const;
  // t -> v for a theta-only polynomial v.
  BiPoly subst_t(const BiPoly& v) const;
  // Swaps the roles of t and theta.
  BiPoly swap_vars() const;

  std::string str() const;

 private:
  const Field* f_ = nullptr;
  std::vector<Term> terms_;
  friend BiPoly sum_of_products(const Field*, const std::vector<std::pair<const BiPoly*, const BiPoly*>>&);
  friend std::optional<BiPoly> divexact(const BiPoly& a, const BiPoly& b);
};

const Field* join_fields(const Field* a, const Field* b);

// Sum of a_k * b_k, accumulated in one pass.
BiPoly sum_of_products(const Field* f, const std::vector<std::pair<const BiPoly*, const BiPoly*>>& pairs);

// a / b if b divides a exactly, otherwise nullopt.
std::optional<BiPoly> divexact(const BiPoly& a, const BiPoly& b);

// Greatest common divisor, leading coefficient 1 under the monomial order.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// Makes the leading coefficient 1; returns the factor divided out.
Fq make_monic(BiPoly& a);

}  // namespace dmf

#endif
