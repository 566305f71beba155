#ifndef DMF_FIELD_HPP
#define DMF_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dmf {

// Elements of F_q are indices 0..q-1; the base-p digits of an index are the
// coefficients (low to high) of a polynomial in the generator x.
using Fq = std::uint16_t;

class Field {
 public:
  // Interned: equal (p, e, modulus) always yields the same pointer, and the
  // pointer stays valid for the life of the process.
  static const Field* get(int p, int e, const std::vector<int>& modulus = {});
  static const Field* prime(int p) { return get(p, 1); }

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  // Monic, low to high, length e+1.
  const std::vector<int>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
  Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t n) const;
  // Image of an integer under Z -> F_p -> F_q.
  Fq from_int(std::int64_t n) const;
  bool in_prime_field(Fq a) const { return a < p_; }

  // Integer for the prime field, generator polynomial in x otherwise.
  std::string to_string(Fq a) const;
  std::string modulus_string() const;

 private:
  Field(int p, int e, std::vector<int> modulus);

  int p_, e_, q_;
  std::vector<int> modulus_;
  std::vector<Fq> add_, mul_, neg_, inv_;
};

bool is_prime(int n);
// Parses "x^2 + x + 1" style text into low-to-high coefficients mod p.
std::vector<int> parse_modulus(const std::string& text, int p);

}  // namespace dmf

#endif
