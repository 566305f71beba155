#include <gtest/gtest.h>

#include <random>

#include "dmf/algebra.hpp"
#include "dmf/error.hpp"

using namespace dmf;

namespace {

BiPoly P(const Field* f, const char* s) { return BiPoly::parse(f, s); }

BiPoly random_poly(const Field* f, std::mt19937_64& rng, int tdeg, int thdeg, int terms) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i)
    t.push_back({mono(rng() % (tdeg + 1), rng() % (thdeg + 1)), static_cast<Fq>(rng() % f->q())});
  return BiPoly::from_terms(f, t);
}

CoeffElem random_frac(const Field* f, std::mt19937_64& rng) {
  BiPoly den = random_poly(f, rng, 2, 3, 3);
  if (den.is_zero()) den = BiPoly::constant(f, 1);
  return CoeffElem::fraction(random_poly(f, rng, 2, 3, 4), den);
}

}  // namespace

TEST(Field, PrimeAndExtension) {
  const Field* f3 = Field::get(3, 1);
  EXPECT_EQ(f3->q(), 3);
  const Field* f4 = Field::get(2, 2, {1, 1, 1});
  EXPECT_EQ(f4->q(), 4);
  EXPECT_EQ(f4, Field::get(2, 2));
  EXPECT_EQ(f4->modulus_string(), "x^2 + x + 1");
  for (Fq a = 1; a < 4; ++a) EXPECT_EQ(f4->mul(a, f4->inv(a)), 1);
  EXPECT_EQ(Field::get(3, 2)->modulus_string(), "x^2 + 1");
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::get(6, 1), DomainError);
  EXPECT_THROW(Field::get(2, 2, {1, 0, 1}), DomainError);
  EXPECT_THROW(Field::get(2, 2, {1, 1}), DomainError);
}

TEST(Field, ParseModulus) {
  EXPECT_EQ(parse_modulus("x^2+x+1", 2), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(parse_modulus("x^2 - 1", 3), (std::vector<int>{2, 0, 1}));
}

TEST(BiPoly, RenderingIsCanonical) {
  const Field* f = Field::get(3, 1);
  BiPoly a = P(f, "1 + th + 2*th^2*t^3");
  EXPECT_EQ(a.str(), "2*t^3*th^2 + th + 1");
  EXPECT_EQ(P(f, a.str().c_str()), a);
  EXPECT_EQ(P(f, "th - th^3").str(), "2*th^3 + th");
  const Field* f4 = Field::get(2, 2);
  BiPoly b = P(f4, "(x+1)*t + x*th + 1");
  EXPECT_EQ(b.str(), "(x + 1)*t + x*th + 1");
  EXPECT_EQ(P(f4, b.str().c_str()), b);
}

TEST(Special, Brackets) {
  const Field* f2 = Field::get(2, 1);
  EXPECT_EQ(bracket(f2, 1), P(f2, "th^2 + th"));
  const Field* f3 = Field::get(3, 1);
  EXPECT_EQ(dfact(f3, 2), P(f3, "(th^9 - th)*(th^3 - th)^3"));
  EXPECT_TRUE(dfact(f3, 0).is_one());
  EXPECT_TRUE(lstar(f3, -1).is_one());
  EXPECT_EQ(lstar(f3, 0), P(f3, "t - th"));
  EXPECT_EQ(lstar(f3, 1), P(f3, "(t - th)*(t - th^3)"));
  EXPECT_THROW(bracket(f3, 0), DomainError);
  EXPECT_THROW(dfact(f3, -1), DomainError);
}

TEST(Special, BracketRecursion) {
  for (int q : {2, 3, 5}) {
    const Field* f = Field::prime(q);
    for (int i = 1; i < 5; ++i) EXPECT_EQ(bracket(f, i + 1), bracket(f, i).pow(q) + bracket(f, 1)) << q << " " << i;
  }
  const Field* f4 = Field::get(2, 2);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(bracket(f4, i + 1), bracket(f4, i).pow(4) + bracket(f4, 1));
}

TEST(Special, DfactProductDefinition) {
  // d_i = [i][i-1]^q ... [1]^(q^(i-1))
  for (int q : {2, 3, 4}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int i = 0; i < 4; ++i) {
      BiPoly d = BiPoly::constant(f, 1);
      std::uint64_t e = 1;
      for (int j = i; j >= 1; --j, e *= q) d *= bracket(f, j).pow(e);
      EXPECT_EQ(dfact(f, i), d);
    }
  }
}

TEST(Twist, Examples) {
  const Field* f3 = Field::get(3, 1);
  EXPECT_EQ(P(f3, "th + t").twist(1), P(f3, "th^3 + t"));
  EXPECT_EQ(P(f3, "th^3").twist(-1), P(f3, "th"));
  EXPECT_THROW(P(f3, "th").twist(-1), NotInImageError);
  const Field* f2 = Field::get(2, 1);
  EXPECT_EQ(P(f2, "t - th").twist(2), P(f2, "t - th^4"));
}

TEST(Twist, HomomorphismProperty) {
  std::mt19937_64 rng(7);
  for (int q : {2, 3, 4}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 100; ++n) {
      CoeffElem a = random_frac(f, rng), b = random_frac(f, rng);
      EXPECT_EQ((a * b).twist(1), a.twist(1) * b.twist(1));
      EXPECT_EQ((a + b).twist(2), a.twist(2) + b.twist(2));
      EXPECT_EQ(a.twist(1).twist(2), a.twist(3));
      EXPECT_EQ(a.twist(2).twist(-1), a.twist(1));
    }
  }
}

TEST(Monic, Enumeration) {
  const Field* f2 = Field::get(2, 1);
  auto m = enumerate_monic(f2, 1);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(theta_poly(f2, m[0]), P(f2, "th"));
  EXPECT_EQ(theta_poly(f2, m[1]), P(f2, "th + 1"));
  EXPECT_EQ(t_poly(f2, m[1]), P(f2, "t + 1"));
  const Field* f3 = Field::get(3, 1);
  EXPECT_EQ(enumerate_monic(f3, 0).size(), 1u);
  EXPECT_TRUE(theta_poly(f3, enumerate_monic(f3, 0)[0]).is_one());
  EXPECT_EQ(enumerate_monic(f3, 2).size(), 9u);
}

TEST(Fraction, CanonicalForm) {
  const Field* f = Field::get(3, 1);
  CoeffElem x = CoeffElem::fraction(P(f, "(t - th)*(t + th^2)"), P(f, "2*(t - th)*(th + 1)"));
  EXPECT_EQ(x.num(), P(f, "2*t + 2*th^2"));
  EXPECT_EQ(x.den(), P(f, "th + 1"));
  CoeffElem y = CoeffElem::fraction(P(f, "t^2 - th^2"), P(f, "t + th"));
  EXPECT_TRUE(y.is_integral());
  EXPECT_EQ(y.num(), P(f, "t - th"));
  EXPECT_EQ(CoeffElem::parse(f, x.str()), x);
  EXPECT_THROW(CoeffElem::fraction(P(f, "t"), BiPoly(f)), DomainError);
}

TEST(Fraction, Substitution) {
  const Field* f = Field::get(3, 1);
  CoeffElem x = CoeffElem::fraction(P(f, "t^2 + th"), P(f, "t - th^3"));
  EXPECT_EQ(x.subst_t_theta_power(1), CoeffElem::fraction(P(f, "th^2 + th"), P(f, "th - th^3")));
  EXPECT_THROW(x.subst_t_theta_power(3), DomainError);
}

TEST(Gcd, KnownFactors) {
  const Field* f = Field::get(5, 1);
  BiPoly g = P(f, "t^2*th + t - th^3 + 2");
  BiPoly a = g * P(f, "t - th^5 + 1"), b = g * P(f, "t*th + th^2 + 3");
  BiPoly r = gcd(a, b);
  BiPoly gm = g;
  make_monic(gm);
  EXPECT_EQ(r, gm);
  EXPECT_TRUE(gcd(P(f, "t - th"), P(f, "t - th^5")).is_one());
  EXPECT_EQ(gcd(P(f, "th^2 - 1"), P(f, "(th - 1)*t")), P(f, "th - 1"));
}

TEST(RingAxioms, BiPolyFuzz) {
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 4, 5}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 100; ++n) {
      BiPoly a = random_poly(f, rng, 3, 6, 5), b = random_poly(f, rng, 3, 6, 5), c = random_poly(f, rng, 3, 6, 5);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) - b, a);
      if (!b.is_zero()) {
        auto d = divexact(a * b, b);
        ASSERT_TRUE(d.has_value());
        EXPECT_EQ(*d, a);
      }
    }
  }
}

TEST(RingAxioms, FractionFuzz) {
  std::mt19937_64 rng(13);
  for (int q : {2, 3, 4}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 100; ++n) {
      CoeffElem a = random_frac(f, rng), b = random_frac(f, rng), c = random_frac(f, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) + c, a + (b + c));
      if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
      // cancellation: (a*c)/(b*c) == a/b
      if (!b.is_zero() && !c.is_zero()) EXPECT_EQ((a * c) / (b * c), a / b);
      // denominators are monic under the monomial order
      EXPECT_EQ((c.is_zero() ? a : a / c).den().leading().c, 1);
    }
  }
}

TEST(Rho, Examples) {
  const Field* f = Field::get(3, 1);
  Mat2 g = {{{BiPoly::theta(f), BiPoly::constant(f, 1)}, {BiPoly::constant(f, 1), BiPoly(f)}}};
  RhoMatrix r1 = rho_symmetric(g, 1);
  EXPECT_EQ(r1.m[0][0], BiPoly::t(f));
  EXPECT_EQ(r1.m[0][1], BiPoly::constant(f, 1));
  EXPECT_EQ(r1.m[1][0], BiPoly::constant(f, 1));
  EXPECT_TRUE(r1.m[1][1].is_zero());
  RhoMatrix r0 = rho_symmetric(g, 0);
  ASSERT_EQ(r0.m.size(), 1u);
  EXPECT_TRUE(r0.m[0][0].is_one());
  BiPoly det = determinant(rho_symmetric(g, 2).m);
  EXPECT_EQ(det, BiPoly::from_int(f, -1).pow(3));
  Mat2 bad = {{{BiPoly::theta(f), BiPoly(f)}, {BiPoly(f), BiPoly::constant(f, 1)}}};
  EXPECT_THROW(rho_symmetric(bad, 1), DomainError);
}

TEST(Rho, MultiplicativeAndDeterminant) {
  std::mt19937_64 rng(17);
  for (int q : {2, 3}) {
    const Field* f = Field::prime(q);
    auto elementary = [&]() {
      BiPoly x = random_poly(f, rng, 0, 1, 2);
      BiPoly one = BiPoly::constant(f, 1), zero(f);
      Fq u = static_cast<Fq>(1 + rng() % (q - 1));
      Mat2 m = (rng() & 1) ? Mat2{{{one, x}, {zero, one}}} : Mat2{{{one, zero}, {x, one}}};
      m[0][0] = m[0][0].scaled(u);
      m[0][1] = m[0][1].scaled(u);
      return m;
    };
    auto mul = [&](const Mat2& a, const Mat2& b) {
      Mat2 c;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
      return c;
    };
    int done = 0;
    while (done < 50) {
      Mat2 g1 = mul(elementary(), elementary()), g2 = mul(elementary(), elementary());
      bool small = true;
      for (auto* g : {&g1, &g2})
        for (auto& row : *g)
          for (auto& x : row) small = small && x.deg_theta() <= 2;
      if (!small) continue;
      ++done;
      for (int l = 0; l <= 3; ++l) {
        RhoMatrix r12 = rho_symmetric(mul(g1, g2), l);
        RhoMatrix prod = matmul(rho_symmetric(g1, l), rho_symmetric(g2, l));
        EXPECT_EQ(r12.m, prod.m);
        BiPoly dg = g1[0][0] * g1[1][1] - g1[0][1] * g1[1][0];
        EXPECT_EQ(determinant(rho_symmetric(g1, l).m), dg.pow(l * (l + 1) / 2));
      }
    }
  }
}
