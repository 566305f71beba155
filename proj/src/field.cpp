#include "dmf/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "dmf/error.hpp"

namespace dmf {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Multiplies two residues given as digit vectors modulo the monic modulus.
std::vector<int> mulmod(const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<int>& mod, int p) {
  int e = static_cast<int>(mod.size()) - 1;
  std::vector<int> r(2 * e + 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * e; d >= e; --d) {
    int c = r[d];
    if (!c) continue;
    for (int i = 0; i <= e; ++i) r[d - e + i] = ((r[d - e + i] - c * mod[i]) % p + p) % p;
  }
  r.resize(e);
  return r;
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i, a /= p) d[i] = a % p;
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// The quotient ring is a field iff every nonzero element is invertible.
bool quotient_is_field(const std::vector<int>& mod, int p) {
  int e = static_cast<int>(mod.size()) - 1;
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  for (int a = 1; a < q; ++a) {
    auto da = digits(a, p, e);
    bool found = false;
    for (int b = 1; b < q && !found; ++b)
      found = undigits(mulmod(da, digits(b, p, e), mod, p), p) == 1;
    if (!found) return false;
  }
  return true;
}

}  // namespace

Field::Field(int p, int e, std::vector<int> modulus) : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<std::vector<int>> dig(q_);
  for (int a = 0; a < q_; ++a) dig[a] = digits(a, p, e);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> n(e);
    for (int i = 0; i < e; ++i) n[i] = (p - dig[a][i]) % p;
    neg_[a] = static_cast<Fq>(undigits(n, p));
    for (int b = 0; b < q_; ++b) {
      std::vector<int> s(e);
      for (int i = 0; i < e; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
      add_[a * q_ + b] = static_cast<Fq>(undigits(s, p));
      mul_[a * q_ + b] = static_cast<Fq>(e == 1 ? (a * b) % p : undigits(mulmod(dig[a], dig[b], modulus_, p), p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Fq>(b);
}

const Field* Field::get(int p, int e, const std::vector<int>& modulus_in) {
  if (!is_prime(p)) throw DomainError("p not prime");
  if (e < 1) throw DomainError("e must be positive");
  long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q > 256) throw DomainError("field size above 256 is not supported");

  std::vector<int> modulus;
  if (!modulus_in.empty()) {
    modulus = modulus_in;
    for (auto& c : modulus) c = ((c % p) + p) % p;
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (static_cast<int>(modulus.size()) != e + 1) throw DomainError("modulus has wrong degree");
    if (modulus.back() != 1) {
      // make monic
      int lc = modulus.back(), inv = 1;
      while ((lc * inv) % p != 1) ++inv;
      for (auto& c : modulus) c = (c * inv) % p;
    }
    if (e > 1 && !quotient_is_field(modulus, p)) throw DomainError("modulus reducible");
  } else if (e == 1) {
    modulus = {0, 1};
  } else {
    // Lowest irreducible: monic of degree e, lower coefficients read as a
    // base-p integer, scanned upward.
    for (int code = 0;; ++code) {
      auto low = digits(code, p, e);
      low.push_back(1);
      if (quotient_is_field(low, p)) {
        modulus = low;
        break;
      }
    }
  }

  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, e, modulus);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto* f = new Field(p, e, modulus);
  registry.emplace(key, std::unique_ptr<Field>(f));
  return f;
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw DomainError("division by zero in F_q");
  return inv_[a];
}

Fq Field::pow(Fq a, std::uint64_t n) const {
  Fq r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fq Field::from_int(std::int64_t n) const {
  n %= p_;
  if (n < 0) n += p_;
  return static_cast<Fq>(n);
}

std::string Field::to_string(Fq a) const {
  if (e_ == 1) return std::to_string(a);
  auto d = digits(a, p_, e_);
  std::ostringstream os;
  bool first = true;
  for (int i = e_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = e_; i >= 0; --i) {
    int c = modulus_[i];
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<int> parse_modulus(const std::string& text, int p) {
  // Accepts sums of terms c, x, c*x, x^k, c*x^k with optional '-' signs.
  std::vector<int> out;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw DomainError("empty modulus");
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long coef = 1;
    bool has_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      coef = std::stol(s.substr(i, j - i));
      has_coef = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw DomainError("bad modulus exponent");
        power = std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!has_coef) {
      throw DomainError("cannot parse modulus '" + text + "'");
    }
    if (static_cast<int>(out.size()) <= power) out.resize(power + 1, 0);
    out[power] = static_cast<int>(((out[power] + sign * coef) % p + p) % p);
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw DomainError("cannot parse modulus '" + text + "'");
  }
  return out;
}

}  // namespace dmf
