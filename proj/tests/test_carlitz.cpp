#include <gtest/gtest.h>

#include <random>

#include "dmf/algebra.hpp"
#include "dmf/carlitz.hpp"
#include "dmf/error.hpp"

using namespace dmf;

namespace {

CoeffElem C(const Field* f, const char* s) { return CoeffElem::parse(f, s); }
BiPoly P(const Field* f, const char* s) { return BiPoly::parse(f, s); }

const Field* field_for(int q) { return q == 4 ? Field::get(2, 2) : Field::prime(q); }

// s(c zeta) for a series s in zeta.
USeries scale_variable(const USeries& s, const CoeffElem& c) {
  std::vector<USeries::TermT> t;
  for (const auto& [e, x] : s.terms()) t.emplace_back(e, x * c.pow(e));
  return USeries::from_terms(s.field(), t, s.order());
}

// rho(s) = sum_i l_i s^(q^i).
USeries apply_addpoly(const AddPoly& rho, const USeries& s) {
  USeries acc(s.field(), s.order());
  USeries pw = s;
  for (std::size_t i = 0; i < rho.c.size(); ++i) {
    if (i > 0) pw = pw.pow(s.field()->q());
    acc += CoeffElem(rho.c[i]) * pw;
  }
  return acc.truncated(s.order());
}

std::vector<Fq> random_a(const Field* f, std::mt19937_64& rng, int maxdeg) {
  int d = static_cast<int>(rng() % (maxdeg + 1));
  std::vector<Fq> a(d + 1);
  for (auto& x : a) x = static_cast<Fq>(rng() % f->q());
  a.back() = static_cast<Fq>(1 + rng() % (f->q() - 1));
  return a;
}

}  // namespace

TEST(Carlitz, ActionExamples) {
  const Field* f = Field::get(3, 1);
  AddPoly rt = carlitz_action(f, {0, 1});
  ASSERT_EQ(rt.c.size(), 2u);
  EXPECT_EQ(rt.c[0], BiPoly::theta(f));
  EXPECT_TRUE(rt.c[1].is_one());
  EXPECT_EQ(carlitz_action(f, {0, 0, 1}), compose(rt, rt));
  AddPoly lam = carlitz_action(f, {2});
  ASSERT_EQ(lam.c.size(), 1u);
  EXPECT_EQ(lam.c[0], BiPoly::constant(f, 2));
  EXPECT_EQ(carlitz_action(P(f, "th^2 + 1")), carlitz_action(f, {1, 0, 1}));
}

TEST(Carlitz, ExponentialFunctionalEquation) {
  for (int q : {2, 3, 4, 5}) {
    const Field* f = field_for(q);
    Exp n = qpow(q, 4) + 1;
    USeries e = carlitz_exponential(f, n);
    USeries lhs = scale_variable(e, CoeffElem(BiPoly::theta(f)));
    USeries rhs = CoeffElem(BiPoly::theta(f)) * e + e.pow(q);
    EXPECT_TRUE(agree(lhs, rhs)) << q;
    // e(a zeta) = rho_a(e(zeta)) for a few a
    for (std::vector<Fq> a : {std::vector<Fq>{1, 1}, std::vector<Fq>{0, 1, 1}, std::vector<Fq>{1, 0, 0, 1}}) {
      EXPECT_TRUE(agree(scale_variable(e, CoeffElem(theta_poly(f, a))), apply_addpoly(carlitz_action(f, a), e)));
    }
  }
  const Field* f3 = Field::get(3, 1);
  USeries e = carlitz_exponential(f3, 20);
  EXPECT_TRUE(e.coeff(1).is_one());
  EXPECT_EQ(e.coeff(3), CoeffElem::fraction(BiPoly::constant(f3, 1), bracket(f3, 1)));
  EXPECT_EQ(e.coeff(9), CoeffElem::fraction(BiPoly::constant(f3, 1), bracket(f3, 2) * bracket(f3, 1).pow(3)));
  EXPECT_TRUE(e.coeff(2).is_zero());
}

TEST(Carlitz, HomomorphismProperties) {
  std::mt19937_64 rng(41);
  for (int q : {2, 3, 4}) {
    const Field* f = field_for(q);
    for (int n = 0; n < 20; ++n) {
      auto a = random_a(f, rng, 3), b = random_a(f, rng, 3);
      BiPoly ta = theta_poly(f, a), tb = theta_poly(f, b);
      AddPoly ra = carlitz_action(f, a), rb = carlitz_action(f, b);
      EXPECT_EQ(carlitz_action(ta * tb), compose(ra, rb));
      EXPECT_EQ(compose(ra, rb), compose(rb, ra));
      BiPoly s = ta + tb;
      if (!s.is_zero()) EXPECT_EQ(carlitz_action(s), ra + rb);
      EXPECT_EQ(ra.degree(), static_cast<int>(a.size()) - 1);
      EXPECT_EQ(ra.c.back(), BiPoly::constant(f, a.back()));
    }
  }
}

TEST(Carlitz, UaExamples) {
  const Field* f = Field::get(3, 1);
  EXPECT_EQ(u_sub_a(f, {1}, 12), USeries::u(f, 12));
  USeries ut = u_sub_a(f, {0, 1}, 12);
  // u^3 / (1 + th u^2)
  EXPECT_EQ(ut, USeries::from_terms(f, {{3, C(f, "1")}, {5, C(f, "-th")}, {7, C(f, "th^2")}, {9, C(f, "-th^3")}, {11, C(f, "th^4")}}, 12));
  for (int q : {3, 4, 5}) {
    const Field* g = field_for(q);
    for (Fq lam = 1; lam < q; ++lam) {
      std::vector<Fq> a = {1, 1, 1}, la(3);
      for (int i = 0; i < 3; ++i) la[i] = g->mul(lam, a[i]);
      EXPECT_EQ(u_sub_a(g, la, 200), CoeffElem::constant(g, g->inv(lam)) * u_sub_a(g, a, 200));
    }
  }
}

TEST(Carlitz, UaComposition) {
  // u_(ab) = u_a(u_b): u_a as a series in u, evaluated at u_b.
  for (int q : {2, 3}) {
    const Field* f = field_for(q);
    Exp n = 3 * qpow(q, 3);
    for (int da = 0; da <= 2; ++da)
      for (int db = 0; da + db <= 3; ++db)
        for (const auto& a : enumerate_monic(f, da))
          for (const auto& b : enumerate_monic(f, db)) {
            BiPoly ab = theta_poly(f, a) * theta_poly(f, b);
            std::vector<Fq> abc(ab.deg_theta() + 1, 0);
            for (const auto& t : ab.terms()) abc[th_exp(t.m)] = t.c;
            USeries lhs = u_sub_a(f, abc, n);
            USeries rhs = compose(u_sub_a(f, a, n), u_sub_a(f, b, n));
            EXPECT_TRUE(agree(lhs, rhs));
            EXPECT_GE(std::min(lhs.order(), rhs.order()), n);
          }
  }
}

TEST(Carlitz, FaIntegral) {
  for (int q : {2, 3, 4, 5}) {
    const Field* f = field_for(q);
    for (int d = 0; d <= 2; ++d)
      for (const auto& a : enumerate_monic(f, d)) {
        USeries fa = f_sub_a(f, a, 60);
        EXPECT_TRUE(fa.coeff(0).is_one());
        EXPECT_TRUE(fa.is_integral());
        EXPECT_TRUE(fa.theta_only());
        EXPECT_TRUE(agree(fa.shifted(qpow(q, d)), u_sub_a(f, a, 60)));
      }
  }
}

TEST(Goss, SmallExamples) {
  for (int q : {2, 3, 4, 5}) {
    const Field* f = field_for(q);
    EXPECT_EQ(goss_polynomial(f, 1), USeries::u(f));
    for (int a = 1; a <= q; ++a) EXPECT_EQ(goss_polynomial(f, a), USeries::monomial(f, a, CoeffElem::constant(f, 1)));
    USeries expect = USeries::monomial(f, q + 1, CoeffElem::constant(f, 1)) +
                     USeries::monomial(f, 2, CoeffElem::fraction(BiPoly::constant(f, 1), bracket(f, 1)));
    EXPECT_EQ(goss_polynomial(f, q + 1), expect);
  }
  EXPECT_THROW(goss_polynomial(Field::prime(3), 0), DomainError);
}

TEST(Goss, RoutesAgree) {
  for (int q : {2, 3, 4, 5}) {
    const Field* f = field_for(q);
    int amax = static_cast<int>(qpow(q, 3));
    auto gen = goss_generating(f, amax);
    for (int a = 1; a <= amax; ++a) EXPECT_EQ(gen[a], goss_polynomial(f, a)) << q << " " << a;
  }
}

TEST(Goss, StructuralProperties) {
  for (int q : {2, 3, 4, 5}) {
    const Field* f = field_for(q);
    int p = f->p();
    for (int a = 1; a <= q * q; ++a) {
      USeries g = goss_polynomial(f, a);
      EXPECT_EQ(goss_polynomial(f, p * a), g.pow(p));
      // type alpha: G(lambda u) = lambda^alpha G(u)
      EXPECT_NO_THROW(g.with_tags(a, a));
      EXPECT_GE(g.valuation(), 1);
      EXPECT_EQ(g.terms().back().first, a);
      EXPECT_TRUE(g.terms().back().second.is_one());
      EXPECT_TRUE(g.theta_only());
    }
  }
}

TEST(Carlitz, PolyAtUaMatchesComposition) {
  std::mt19937_64 rng(43);
  for (int q : {2, 3, 4, 5}) {
    const Field* f = field_for(q);
    for (int n = 0; n < 12; ++n) {
      std::vector<USeries::TermT> t;
      int deg = 1 + static_cast<int>(rng() % (q * q + 3));
      for (int j = 1; j <= deg; ++j)
        if (rng() % 2 || j == deg) t.emplace_back(j, CoeffElem(BiPoly::monomial(f, rng() % 2, rng() % 3, 1)));
      USeries p = USeries::from_terms(f, t, kExact);
      auto a = random_a(f, rng, 2);
      Exp order = 3 * q * q + 5;
      USeries fast = poly_at_ua(p, a, order);
      USeries slow = compose(p, u_sub_a(f, a, order));
      EXPECT_EQ(fast.order(), order);
      EXPECT_TRUE(agree(fast, slow));
      EXPECT_GE(slow.order(), order);
    }
  }
}
