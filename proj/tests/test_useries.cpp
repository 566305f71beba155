#include <gtest/gtest.h>

#include <random>

#include "dmf/algebra.hpp"
#include "dmf/error.hpp"
#include "dmf/useries.hpp"

using namespace dmf;

namespace {

CoeffElem C(const Field* f, const char* s) { return CoeffElem::parse(f, s); }

CoeffElem random_coeff(const Field* f, std::mt19937_64& rng, bool frac) {
  std::vector<Term> t;
  for (int i = 0; i < 3; ++i) t.push_back({mono(rng() % 2, rng() % 4), static_cast<Fq>(rng() % f->q())});
  BiPoly n = BiPoly::from_terms(f, t);
  if (!frac || rng() % 3) return CoeffElem(n);
  return CoeffElem::fraction(n, BiPoly::theta(f) + BiPoly::constant(f, static_cast<Fq>(rng() % f->q())));
}

USeries random_series(const Field* f, std::mt19937_64& rng, Exp lo, Exp order, bool frac = true) {
  std::vector<USeries::TermT> terms;
  for (Exp e = lo; e < order; ++e)
    if (rng() % 2) terms.emplace_back(e, random_coeff(f, rng, frac));
  return USeries::from_terms(f, terms, order);
}

USeries unit_series(const Field* f, std::mt19937_64& rng, Exp order) {
  return USeries::one(f, order) + random_series(f, rng, 1, order, false);
}

}  // namespace

TEST(USeries, GeometricInverse) {
  const Field* f = Field::get(3, 1);
  USeries a = USeries::one(f, 4) - USeries::u(f, 4);
  USeries b = a.inverse();
  EXPECT_EQ(b.order(), 4);
  ASSERT_EQ(b.terms().size(), 4u);
  for (Exp i = 0; i < 4; ++i) EXPECT_TRUE(b.coeff(i).is_one());
  USeries exact = USeries::one(f) - USeries::u(f);
  EXPECT_THROW(exact.inverse(), PrecisionError);
  EXPECT_EQ(exact.inverse(4), b);
}

TEST(USeries, LaurentInverse) {
  const Field* f = Field::get(5, 1);
  USeries a = USeries::monomial(f, 1, CoeffElem::from_int(f, -1), 2);
  USeries b = a.inverse();
  EXPECT_EQ(b.order(), 0);
  ASSERT_EQ(b.terms().size(), 1u);
  EXPECT_EQ(b.terms()[0].first, -1);
  EXPECT_EQ(b.terms()[0].second, CoeffElem::from_int(f, -1));
  EXPECT_THROW(USeries(f, 5).inverse(), PrecisionError);
}

TEST(USeries, GInverseSquareCharThree) {
  // g = 1 + (th - th^3) u^2 + O(u^4); g^-2 = 1 - 2 (th - th^3) u^2 = 1 + (th - th^3) u^2.
  const Field* f = Field::get(3, 1);
  USeries g = USeries::one(f, 4) + USeries::monomial(f, 2, C(f, "th - th^3"), 4);
  USeries r = g.pow(-2);
  EXPECT_EQ(r.order(), 4);
  EXPECT_EQ(r.coeff(2), C(f, "-2*(th - th^3)"));
  EXPECT_EQ(r.coeff(2), C(f, "th - th^3"));
  EXPECT_TRUE(agree(r * g * g, USeries::one(f)));
}

TEST(USeries, InverseRoundtripFuzz) {
  std::mt19937_64 rng(3);
  for (int q : {2, 3, 4, 5}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 25; ++n) {
      Exp lo = static_cast<Exp>(rng() % 5) - 2;
      USeries a = random_series(f, rng, lo, lo + 8);
      if (a.is_zero()) continue;
      USeries b = a.inverse();
      USeries one = a * b;
      EXPECT_TRUE(agree(one, USeries::one(f)));
      EXPECT_EQ(one.order(), a.order() - a.valuation());
    }
  }
}

TEST(USeries, RingAxiomsFuzz) {
  std::mt19937_64 rng(5);
  for (int q : {2, 3, 4}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 40; ++n) {
      USeries a = random_series(f, rng, -1, 6), b = random_series(f, rng, 0, 7), c = random_series(f, rng, 1, 6);
      EXPECT_TRUE(agree((a * b) * c, a * (b * c)));
      EXPECT_TRUE(agree(a * (b + c), a * b + a * c));
      EXPECT_EQ(a * b, b * a);
    }
  }
}

TEST(USeries, Tau) {
  const Field* f = Field::get(3, 1);
  USeries a = USeries::from_terms(f, {{1, C(f, "th")}, {2, C(f, "t")}}, kExact);
  USeries b = a.tau(1);
  EXPECT_EQ(b, USeries::from_terms(f, {{3, C(f, "th^3")}, {6, C(f, "t")}}, kExact));
  EXPECT_EQ(a.truncated(5).tau(1).order(), 15);
  EXPECT_THROW(USeries::u(f).tau(-1), NotInImageError);
  EXPECT_EQ(b.tau(-1), a);
  EXPECT_EQ(a.truncated(5).tau(2).tau(-1), a.truncated(5).tau(1));
}

TEST(USeries, TauIsRingHomomorphism) {
  std::mt19937_64 rng(9);
  for (int q : {2, 3, 4}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 30; ++n) {
      USeries a = random_series(f, rng, 0, 6), b = random_series(f, rng, -1, 5);
      EXPECT_EQ((a * b).tau(1), a.tau(1) * b.tau(1));
      EXPECT_EQ((a + b).tau(2), a.tau(2) + b.tau(2));
    }
  }
}

TEST(USeries, FrobeniusPowerMatchesProduct) {
  std::mt19937_64 rng(19);
  for (int q : {2, 3, 4}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 20; ++n) {
      USeries a = random_series(f, rng, 0, 6);
      USeries slow = a;
      for (int i = 1; i < f->p(); ++i) slow = slow * a;
      EXPECT_TRUE(agree(a.frobenius_power(), slow));
      EXPECT_GE(a.frobenius_power().order(), slow.order());
    }
  }
}

TEST(USeries, Root) {
  const Field* f = Field::get(3, 1);
  USeries x = USeries::one(f, 6) - USeries::monomial(f, 2, CoeffElem::constant(f, 1), 6);
  USeries r = root_q_minus_1(x, 0, CoeffElem::constant(f, 1));
  EXPECT_EQ(r, USeries::from_terms(f, {{0, C(f, "1")}, {2, C(f, "1")}, {4, C(f, "1")}}, 6));
  USeries m = USeries::monomial(f, 2, CoeffElem::constant(f, 1));
  EXPECT_EQ(root_q_minus_1(m, 1, CoeffElem::constant(f, 1)), USeries::u(f));
  EXPECT_THROW(root_q_minus_1(USeries::u(f), 0, CoeffElem::constant(f, 1)), DomainError);
  EXPECT_THROW(root_q_minus_1(CoeffElem::from_int(f, 2) * m, 1, CoeffElem::constant(f, 1)), DomainError);
  EXPECT_EQ(root_q_minus_1(CoeffElem::from_int(f, 1) * m, 1, CoeffElem::from_int(f, 2)), USeries::monomial(f, 1, CoeffElem::from_int(f, 2)));
}

TEST(USeries, RootRoundtripAndProductOracle) {
  // (1 + w)^(1/(q-1)) = prod_i (1 + w^(q^i))^(-1) in characteristic p.
  std::mt19937_64 rng(23);
  for (int q : {2, 3, 4, 5}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 10; ++n) {
      Exp order = 12;
      USeries w = random_series(f, rng, 1, order);
      USeries big = USeries::one(f, order) + w;
      CoeffElem c = random_coeff(f, rng, true);
      if (c.is_zero()) c = CoeffElem::constant(f, 1);
      Exp e = static_cast<Exp>(rng() % 3) - 1;
      USeries fin = (c.pow(q - 1) * big).shifted((q - 1) * e);
      USeries r = root_q_minus_1(fin, e, c);
      EXPECT_EQ(r.order(), e + order);
      EXPECT_TRUE(agree(r.pow(q - 1), fin));
      EXPECT_EQ(r.pow(q - 1).order(), fin.order());
      USeries prod = USeries::one(f);
      USeries wk = w;
      while (wk.valuation() < order) {
        prod = prod * (USeries::one(f) + wk).inverse(order);
        wk = wk.pow(q);
      }
      EXPECT_TRUE(agree((c * prod).shifted(e), r));
    }
  }
}

TEST(USeries, D1) {
  const Field* f = Field::get(3, 1);
  EXPECT_EQ(USeries::u(f).d1(), USeries::monomial(f, 2, CoeffElem::constant(f, 1)));
  EXPECT_TRUE(USeries::monomial(f, 3, CoeffElem::constant(f, 1)).d1().is_zero());
  EXPECT_EQ(USeries::monomial(f, -1, C(f, "t")).d1(), USeries::constant(C(f, "-t")));
  std::mt19937_64 rng(29);
  for (int q : {2, 3, 5}) {
    const Field* g = Field::prime(q);
    for (int n = 0; n < 30; ++n) {
      USeries a = random_series(g, rng, -1, 7), b = random_series(g, rng, 0, 6);
      EXPECT_TRUE(agree((a * b).d1(), a * b.d1() + b * a.d1()));
    }
  }
}

TEST(USeries, BlockTruncation) {
  std::mt19937_64 rng(31);
  for (int q : {2, 3}) {
    const Field* f = Field::prime(q);
    for (int n = 0; n < 30; ++n) {
      USeries a = random_series(f, rng, 0, 30), b = random_series(f, rng, 0, 30);
      for (int k = -1; k <= 2; ++k) {
        EXPECT_EQ(truncate_block(a * b, k), truncate_block(truncate_block(a, k) * truncate_block(b, k), k));
        EXPECT_EQ(truncate_block(a + b, k), truncate_block(a, k) + truncate_block(b, k));
        if (k >= 0) EXPECT_EQ(truncate_block(a.tau(1), k), truncate_block(a, k - 1).tau(1));
      }
    }
  }
  const Field* f = Field::get(3, 1);
  EXPECT_THROW(truncate_block(USeries::one(f, 5), 2), PrecisionError);
  EXPECT_THROW(truncate_block(USeries::monomial(f, -1, CoeffElem::constant(f, 1)), 0), DomainError);
  EXPECT_EQ(truncate_block(USeries::one(f) + USeries::u(f), -1), USeries::one(f));
}

TEST(USeries, PrecisionSoundness) {
  // The same pipeline at orders N and 2N agrees below the certified order.
  std::mt19937_64 rng(37);
  for (int q : {2, 3, 4}) {
    const Field* f = q == 4 ? Field::get(2, 2) : Field::prime(q);
    for (int n = 0; n < 15; ++n) {
      auto seed = rng();
      // unit_series draws depend on the order, so build the long one and truncate.
      std::mt19937_64 r3(seed);
      USeries a2 = unit_series(f, r3, 20), b2 = unit_series(f, r3, 20).shifted(1);
      auto run = [&](Exp order) {
        USeries a = a2.truncated(order), b = b2.truncated(order + 1);
        return (a * a.tau(1) + b.d1()).inverse() * b - a.pow(-3) + root_q_minus_1(a, 0, CoeffElem::constant(f, 1));
      };
      USeries lo = run(10), hi = run(20);
      EXPECT_GE(hi.order(), lo.order());
      EXPECT_TRUE(agree(lo, hi));
      EXPECT_GT(lo.order(), 0);
    }
  }
}

TEST(USeries, TypeClosure) {
  const Field* f = Field::get(3, 1);
  USeries a = USeries::from_terms(f, {{0, C(f, "1")}, {2, C(f, "th")}}, 8).with_tags(2, 0);
  USeries b = USeries::from_terms(f, {{1, C(f, "t")}, {3, C(f, "1")}}, 8).with_tags(4, 1);
  ASSERT_TRUE((a * b).tags().has_value());
  EXPECT_EQ((a * b).tags()->type, 1);
  EXPECT_EQ((a * b).tags()->weight, 6);
  EXPECT_EQ(a.tau(1).tags()->type, 0);
  EXPECT_EQ(a.tau(1).tags()->weight, 6);
  EXPECT_EQ(b.d1().tags()->type, 0);
  EXPECT_EQ(b.d1().tags()->weight, 6);
  EXPECT_EQ(a.inverse().tags()->weight, -2);
  EXPECT_THROW(b.with_tags(4, 0), DomainError);
  EXPECT_NO_THROW((a * b).with_tags(6, 1));
  EXPECT_NO_THROW(b.d1().with_tags(6, 0));
}

TEST(USeries, Json) {
  const Field* f = Field::get(3, 1);
  USeries a = USeries::from_terms(f, {{-1, C(f, "t")}, {2, C(f, "(th + 1)/(t - th)")}}, 7);
  std::string js = a.to_json();
  EXPECT_NE(js.find("\"valuation\": -1"), std::string::npos);
  EXPECT_NE(js.find("\"order\": 7"), std::string::npos);
  EXPECT_EQ(USeries::from_json(f, js), a);
  EXPECT_EQ(a.to_csv(), "u_exponent,coefficient\n-1,t\n2,(th + 1)/(t + 2*th)\n");
}
