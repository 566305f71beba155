#include "dmf/coeff.hpp"

#include "dmf/error.hpp"

namespace dmf {

namespace {

BiPoly one_of(const Field* f) { return BiPoly::constant(f, 1); }

BiPoly exact(const BiPoly& a, const BiPoly& b) {
  auto r = divexact(a, b);
  if (!r) throw DomainError("internal: inexact division of fraction parts");
  return *r;
}

// Makes the denominator monic, assuming num/den already coprime.
void monic_den(BiPoly& num, BiPoly& den) {
  Fq lc = make_monic(den);
  if (lc != 1) num = num.scaled(den.field()->inv(lc));
}

}  // namespace

CoeffElem::CoeffElem(BiPoly num) : num_(std::move(num)), den_(one_of(num_.field())) {}

CoeffElem CoeffElem::fraction(BiPoly num, BiPoly den) {
  const Field* f = join_fields(num.field(), den.field());
  if (den.is_zero()) throw DomainError("zero denominator");
  CoeffElem r(f);
  if (num.is_zero()) return r;
  if (den.is_constant()) {
    r.num_ = num.scaled(f->inv(den.constant_coeff()));
    return r;
  }
  if (auto q = divexact(num, den)) {
    r.num_ = std::move(*q);
    return r;
  }
  BiPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  monic_den(num, den);
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

CoeffElem CoeffElem::parse(const Field* f, const std::string& text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0)
      return fraction(BiPoly::parse(f, text.substr(0, i)), BiPoly::parse(f, text.substr(i + 1)));
  }
  return CoeffElem(BiPoly::parse(f, text));
}

CoeffElem CoeffElem::operator-() const {
  CoeffElem r(*this);
  r.num_ = -r.num_;
  return r;
}

CoeffElem operator+(const CoeffElem& a, const CoeffElem& b) {
  if (a.is_zero()) return b.is_zero() ? CoeffElem(join_fields(a.field(), b.field())) : b;
  if (b.is_zero()) return a;
  const Field* f = join_fields(a.field(), b.field());
  if (a.is_integral() && b.is_integral()) return CoeffElem(a.num_ + b.num_);
  if (a.den_ == b.den_) return CoeffElem::fraction(a.num_ + b.num_, a.den_);
  if (a.is_integral() || b.is_integral()) {
    const CoeffElem& i = a.is_integral() ? a : b;
    const CoeffElem& r = a.is_integral() ? b : a;
    CoeffElem out(f);
    out.num_ = i.num_ * r.den_ + r.num_;
    out.den_ = r.den_;
    return out;
  }
  BiPoly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    CoeffElem out(f);
    out.num_ = sum_of_products(f, {{&a.num_, &b.den_}, {&b.num_, &a.den_}});
    if (out.num_.is_zero()) return out;
    out.den_ = a.den_ * b.den_;
    return out;
  }
  BiPoly ad = exact(a.den_, g), bd = exact(b.den_, g);
  BiPoly num = sum_of_products(f, {{&a.num_, &bd}, {&b.num_, &ad}});
  return CoeffElem::fraction(num, ad * b.den_);
}

CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) {
  const Field* f = join_fields(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return CoeffElem(f);
  if (a.is_integral() && b.is_integral()) return CoeffElem(a.num_ * b.num_);
  BiPoly an = a.num_, ad = a.is_integral() ? one_of(f) : a.den_;
  BiPoly bn = b.num_, bd = b.is_integral() ? one_of(f) : b.den_;
  if (!bd.is_one()) {
    BiPoly g = gcd(an, bd);
    if (!g.is_one()) an = exact(an, g), bd = exact(bd, g);
  }
  if (!ad.is_one()) {
    BiPoly g = gcd(bn, ad);
    if (!g.is_one()) bn = exact(bn, g), ad = exact(ad, g);
  }
  CoeffElem out(f);
  out.num_ = an * bn;
  out.den_ = ad * bd;
  if (out.den_.is_constant()) {
    out.num_ = out.num_.scaled(f->inv(out.den_.constant_coeff()));
    out.den_ = one_of(f);
  }
  return out;
}

bool operator==(const CoeffElem& a, const CoeffElem& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.is_integral() != b.is_integral()) return false;
  return a.num_ == b.num_ && (a.is_integral() || a.den_ == b.den_);
}

CoeffElem CoeffElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero coefficient");
  const Field* f = field();
  CoeffElem r(f);
  r.num_ = is_integral() ? one_of(f) : den_;
  r.den_ = num_;
  if (r.den_.is_constant()) {
    r.num_ = r.num_.scaled(f->inv(r.den_.constant_coeff()));
    r.den_ = one_of(f);
    return r;
  }
  monic_den(r.num_, r.den_);
  return r;
}

CoeffElem CoeffElem::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  CoeffElem r(field());
  r.num_ = num_.pow(static_cast<std::uint64_t>(n));
  r.den_ = is_integral() ? one_of(field()) : den_.pow(static_cast<std::uint64_t>(n));
  return r;
}

CoeffElem CoeffElem::scaled(Fq c) const {
  CoeffElem r(*this);
  r.num_ = r.num_.scaled(c);
  return r;
}

CoeffElem CoeffElem::twist(int k) const {
  if (k == 0 || is_zero()) return *this;
  CoeffElem r(field());
  r.num_ = num_.twist(k);
  r.den_ = is_integral() ? one_of(field()) : den_.twist(k);
  return r;
}

CoeffElem CoeffElem::subst_t_theta_power(std::uint64_t m) const {
  if (is_integral()) return CoeffElem(num_.subst_t_theta_power(m));
  BiPoly d = den_.subst_t_theta_power(m);
  if (d.is_zero()) throw DomainError("denominator vanishes under substitution");
  return fraction(num_.subst_t_theta_power(m), d);
}

CoeffElem CoeffElem::subst_t_const(Fq c) const {
  if (is_integral()) return CoeffElem(num_.subst_t_const(c));
  BiPoly d = den_.subst_t_const(c);
  if (d.is_zero()) throw DomainError("denominator vanishes under substitution");
  return fraction(num_.subst_t_const(c), d);
}

std::string CoeffElem::str() const {
  if (is_integral()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace dmf
