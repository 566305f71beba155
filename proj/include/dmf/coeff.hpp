#ifndef DMF_COEFF_HPP
#define DMF_COEFF_HPP

#include <string>

#include "dmf/bipoly.hpp"

namespace dmf {

// Element of F_q(t, theta) as a reduced fraction whose denominator has
// leading coefficient 1 under the t-major, theta-minor order.
class CoeffElem {
 public:
  CoeffElem() = default;
  CoeffElem(BiPoly num);  // NOLINT(google-explicit-constructor)
  explicit CoeffElem(const Field* f) : num_(f), den_(BiPoly::constant(f, 1)) {}

  static CoeffElem fraction(BiPoly num, BiPoly den);
  static CoeffElem from_int(const Field* f, std::int64_t n) { return CoeffElem(BiPoly::from_int(f, n)); }
  static CoeffElem constant(const Field* f, Fq c) { return CoeffElem(BiPoly::constant(f, c)); }
  static CoeffElem parse(const Field* f, const std::string& text);

  const Field* field() const { return num_.field() ? num_.field() : den_.field(); }
  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && is_integral(); }
  bool is_integral() const { return den_.is_zero() || den_.is_one(); }
  bool theta_only() const { return num_.theta_only() && den_.theta_only(); }

  CoeffElem operator-() const;
  friend CoeffElem operator+(const CoeffElem& a, const CoeffElem& b);
  friend CoeffElem operator-(const CoeffElem& a, const CoeffElem& b) { return a + (-b); }
  friend CoeffElem operator*(const CoeffElem& a, const CoeffElem& b);
  friend CoeffElem operator/(const CoeffElem& a, const CoeffElem& b) { return a * b.inverse(); }
  CoeffElem& operator+=(const CoeffElem& o) { return *this = *this + o; }
  CoeffElem& operator-=(const CoeffElem& o) { return *this = *this - o; }
  CoeffElem& operator*=(const CoeffElem& o) { return *this = *this * o; }
  friend bool operator==(const CoeffElem& a, const CoeffElem& b);
  friend bool operator!=(const CoeffElem& a, const CoeffElem& b) { return !(a == b); }

  CoeffElem inverse() const;
  CoeffElem pow(std::int64_t n) const;
  CoeffElem scaled(Fq c) const;
  // theta -> theta^(q^k); NotInImageError for k < 0 outside the image.
  CoeffElem twist(int k) const;
  // t -> theta^m; DomainError when the denominator vanishes.
  CoeffElem subst_t_theta_power(std::uint64_t m) const;
  // t -> c in F_q.
  CoeffElem subst_t_const(Fq c) const;

  std::string str() const;

 private:
  BiPoly num_, den_;
};

// Frobenius twist on coefficients, the name used throughout the interfaces.
inline CoeffElem frobenius_twist(const CoeffElem& x, int k) { return x.twist(k); }

}  // namespace dmf

#endif
