// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 iff every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dmf/algebra.hpp"
#include "dmf/catalog.hpp"
#include "dmf/deformations.hpp"
#include "dmf/error.hpp"
#include "dmf/forms.hpp"
#include "dmf/lseries.hpp"
#include "dmf/taurec.hpp"

using namespace dmf;

namespace {

const Field* field_for(int q) { return q == 4 ? Field::get(2, 2) : Field::prime(q); }
CoeffElem K(const BiPoly& p) { return CoeffElem(p); }

// Collects failures for one criterion.
struct Log {
  std::vector<std::string> fails;
  void check(bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  }
};

// One catalog identity; passes only if every comparison is certified to `need`.
void identity(Log& log, const std::string& id, int q, Exp order, int kmax, Exp need, int t_order = 8, Exp prec = 40) {
  VerifyConfig cfg;
  cfg.f = field_for(q);
  cfg.order = order;
  cfg.kmax = kmax;
  cfg.t_order = t_order;
  cfg.prec = prec;
  std::string tag = id + " q=" + std::to_string(q);
  try {
    auto rs = run_verify(id, cfg);
    for (const auto& r : rs) {
      if (r.skipped) {
        log.check(false, tag + " skipped: " + r.note);
      } else if (!r.pass) {
        log.check(false, tag + " discrepancy " + r.first_discrepancy->dump());
      } else {
        log.check(r.checked >= need, tag + " certified only to " + std::to_string(r.checked) + " < " + std::to_string(need));
      }
    }
  } catch (const std::exception& e) {
    log.check(false, tag + " error: " + e.what());
  }
}

BiPoly random_poly(const Field* f, std::mt19937_64& rng, int deg) {
  BiPoly r(f);
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; j <= deg - i; ++j) r += BiPoly::monomial(f, i, j, static_cast<Fq>(rng() % f->q()));
  return r;
}

CoeffElem random_frac(const Field* f, std::mt19937_64& rng) {
  BiPoly den = random_poly(f, rng, 2);
  if (den.is_zero()) den = BiPoly::constant(f, 1);
  return CoeffElem::fraction(random_poly(f, rng, 2), den);
}

USeries random_series(const Field* f, std::mt19937_64& rng, Exp lo, Exp order) {
  std::vector<USeries::TermT> terms;
  for (Exp e = lo; e < order; ++e)
    if (rng() % 2) terms.emplace_back(e, K(random_poly(f, rng, 1)));
  return USeries::from_terms(f, std::move(terms), order);
}

KInf random_kinf(const Field* f, std::mt19937_64& rng, Exp prec) {
  std::vector<Fq> d(1 + rng() % 10);
  for (auto& c : d) c = static_cast<Fq>(rng() % f->q());
  d[0] = static_cast<Fq>(1 + rng() % (f->q() - 1));
  return KInf::from_digits(f, static_cast<Exp>(rng() % 10) - 6, d, prec);
}

USeries random_exact(const Field* f, std::mt19937_64& rng) {
  std::vector<USeries::TermT> terms;
  for (int e = 0; e <= 3; ++e)
    if (rng() % 2) terms.emplace_back(e, K(random_poly(f, rng, 1)));
  terms.emplace_back(static_cast<Exp>(rng() % 4), CoeffElem::constant(f, 1));
  USeries s = USeries::from_terms(f, std::move(terms), kExact);
  return s.is_zero() ? USeries::one(f) : s;
}

bool tags_are(const USeries& s, std::int64_t w, std::int64_t m) {
  int r = s.field()->q() - 1;
  return s.tags() && s.tags()->weight == w && s.tags()->type == ((m % r) + r) % r;
}

void crit1(Log& log) {
  for (int q : {2, 3, 4, 5}) identity(log, "gkstar-routes", q, qpow(q, 4) + 2 * q, 4, qpow(q, 4) + 2 * q);
}

void crit2(Log& log) {
  for (int q : {2, 3, 4, 5}) {
    identity(log, "gkstar-at-theta", q, qpow(q, 4) + 2 * q, 4, qpow(q, 4) + 2 * q);
    identity(log, "gkstar-at-theta-qk", q, qpow(q, 4) + 2 * q, 4, qpow(q, 4) + 2 * q);
  }
}

void crit3(Log& log) {
  for (int q : {2, 3, 4}) identity(log, "deformed-e", q, 3 * q * q, 0, 3 * q * q);
}

void crit4(Log& log) {
  for (int q : {2, 3, 4}) {
    Exp n = qpow(q, 3) + q * q;
    identity(log, "gkstar-deformation", q, n, 3, n);
    identity(log, "h-inverse-k0", q, n + 2 * q, 0, n);
    identity(log, "d3star-twist-at-theta", q, n, 0, n);
  }
}

void crit5(Log& log) {
  for (int q : {3, 4, 5}) identity(log, "gkstar-truncation", q, qpow(q, 3) + 2 * q, 3, qpow(q, 1) + 2 * q - 2);
}

void crit6(Log& log) {
  for (int q : {2, 3, 4, 5}) {
    Exp n = 2 * q * q * q;
    identity(log, "d2-expansion", q, n, 0, 1);
    identity(log, "d3star-expansion", q, n, 0, 1);
    identity(log, "g-expansion", q, n, 0, 1);
  }
  for (int q : {2, 3, 4}) identity(log, "psistar-expansion", q, 2 * q * q, 0, 1);
}

void crit7(Log& log) {
  for (int q : {2, 3, 4}) {
    identity(log, "l1-annihilates", q, 40, 0, 30);
    identity(log, "l2-annihilates", q, 40, 0, 30);
    identity(log, "annihilator-l1", q, 40, 0, 30);
    identity(log, "gkstar-recurrences", q, 3 * q * q, 3, 3 * q * q);
  }
  std::mt19937_64 rng(7);
  int cases = 0;
  for (int q : {2, 3}) {
    const Field* f = field_for(q);
    for (int n = 0; n < 60; ++n) {
      int ln = 1 + static_cast<int>(rng() % 3), dn = 1 + static_cast<int>(rng() % 3);
      SkewOperator<USeries> l, d;
      for (int i = 0; i <= ln; ++i) l.a.push_back(random_exact(f, rng));
      for (int i = 0; i < dn; ++i) d.a.push_back(random_exact(f, rng));
      d.a.push_back(USeries::constant(K(BiPoly::t(f) + BiPoly::constant(f, static_cast<Fq>(rng() % q)))));
      auto qr = skew_right_divide(l, d);
      SkewOperator<USeries> back = qr.quotient.a.empty() ? qr.remainder : qr.quotient * d + qr.remainder;
      bool ok = qr.remainder.order() < d.order() && back.order() >= l.order();
      for (int i = 0; ok && i <= back.order(); ++i)
        ok = (back.a[i] - (i <= l.order() ? l.a[i] : USeries(f))).is_zero();
      log.check(ok, "skew division roundtrip q=" + std::to_string(q) + " case " + std::to_string(n));
      ++cases;
    }
  }
  log.check(cases >= 100, "fewer than 100 division cases");
}

void crit8(Log& log) {
  for (int q : {2, 3}) {
    identity(log, "eisenstein-gk", q, 2 * qpow(q, 3) + 2 * q, 3, 2 * qpow(q, 3) + 2 * q);
    identity(log, "goss-routes", q, q * q, 0, kExact);
  }
}

void crit9(Log& log) {
  for (int q : {2, 3, 4}) identity(log, "extremal-routes", q, 2 * qpow(q, 3) + 2 * q, 3, 2 * qpow(q, 3) + 2 * q);
}

void crit10(Log& log) {
  for (int q : {2, 3, 4}) {
    identity(log, "scar-product", q, 1, 0, 40, 8, 40);
    identity(log, "zeta-closed-form", q, 1, 3, 60, 1, 60);
    identity(log, "lseries-twist", q, 1, 0, 30, 6, 30);
    identity(log, "lseries-cutoff", q, 1, 0, 40, 8, 40);
  }
}

void crit11(Log& log) {
  // precision soundness: order N against order 2N
  for (int q : {2, 3, 4}) {
    const Field* f = field_for(q);
    Exp n = 2 * q * q;
    auto lo = build_deformations(f, n), hi = build_deformations(f, 2 * n);
    std::string s = " q=" + std::to_string(q);
    log.check(agree(lo.base.g, hi.base.g) && agree(lo.base.delta, hi.base.delta) && agree(lo.base.h, hi.base.h),
              "base forms overlap" + s);
    log.check(agree(lo.d2, hi.d2) && agree(lo.psistar, hi.psistar) && agree(lo.d3star, hi.d3star) &&
                  agree(lo.e_deform, hi.e_deform),
              "deformations overlap" + s);
    auto ga = gkstar_family(lo.base, 2, StarRoute::A), gb = gkstar_family(hi.base, 2, StarRoute::A);
    for (int k = 0; k <= 2; ++k) log.check(agree(ga[k], gb[k]), "g_k^* overlap" + s);
    log.check(agree(l_value_series(f, 1, 1, 4, 20), l_value_series(f, 1, 1, 4, 40)), "L-value overlap" + s);
    log.check(agree(pibar_power(f, q - 1, 20), pibar_power(f, q - 1, 40)), "pibar overlap" + s);

    // type and weight closure
    const BaseForms& b = hi.base;
    log.check(tags_are(b.g, q - 1, 0) && tags_are(b.delta, q * q - 1, 0) && tags_are(b.h, q + 1, 1), "base tags" + s);
    log.check(tags_are(b.g * b.h, q - 1 + q + 1, 1) && tags_are(b.h.pow(q - 1), q * q - 1, q - 1), "product tags" + s);
    for (int k = 0; k <= 2; ++k) {
      log.check(tags_are(gb[k], qpow(q, k) - 1, 0), "g_k^* tags" + s);
      log.check(tags_are(big_e_series(f, 2 * n, k), qpow(q, k) + 1, 1), "E_k tags" + s);
    }
    log.check(has_type(hi.d2, 0) && has_type(hi.psistar, -1) && has_type(hi.d3star, -1) && has_type(hi.e_deform, 1),
              "deformation types" + s);
  }

  // both directions of the Wronskian criterion
  for (int q : {2, 3}) {
    const Field* f = field_for(q);
    auto c = build_deformations(f, 24);
    USeries one = USeries::one(f), u = USeries::u(f), u2 = USeries::monomial(f, 2, CoeffElem::constant(f, 1));
    CoeffElem t = K(BiPoly::t(f)), th = K(BiPoly::theta(f));
    std::string s = " q=" + std::to_string(q);
    log.check(tau_wronskian<USeries>({c.d2, t * c.d2}).is_zero(), "dependent d2, t d2" + s);
    log.check(tau_wronskian<USeries>({one, u, one + t * u}).is_zero(), "dependent 1, u, 1 + t u" + s);
    log.check(!tau_wronskian<USeries>({u, th * u}).is_zero(), "independent u, theta u" + s);
    log.check(!tau_wronskian<USeries>({one, u, u2}).is_zero(), "independent 1, u, u^2" + s);
    log.check(!tau_wronskian<USeries>({c.d2, c.d2tau}).is_zero(), "independent d2, tau d2" + s);
  }

  // ring axioms, at least 100 cases per law and structure
  std::mt19937_64 rng(2024);
  int cases = 0;
  for (int q : {2, 3, 4, 5}) {
    const Field* f = field_for(q);
    for (int n = 0; n < 30; ++n, ++cases) {
      std::string s = " q=" + std::to_string(q);
      BiPoly a = random_poly(f, rng, 3), b = random_poly(f, rng, 3), c = random_poly(f, rng, 3);
      log.check((a * b) * c == a * (b * c), "poly associativity" + s);
      log.check(a * (b + c) == a * b + a * c, "poly distributivity" + s);
      log.check(a * b == b * a, "poly commutativity" + s);
      log.check((a * b).twist(1) == a.twist(1) * b.twist(1), "poly twist" + s);

      CoeffElem x = random_frac(f, rng), y = random_frac(f, rng), z = random_frac(f, rng);
      log.check((x * y) * z == x * (y * z), "fraction associativity" + s);
      log.check(x * (y + z) == x * y + x * z, "fraction distributivity" + s);
      log.check(x * y == y * x, "fraction commutativity" + s);
      if (!y.is_zero()) log.check((x * y) / y == x, "fraction division" + s);

      USeries p = random_series(f, rng, -1, 6), r = random_series(f, rng, 0, 7), w = random_series(f, rng, 1, 6);
      log.check(agree((p * r) * w, p * (r * w)), "series associativity" + s);
      log.check(agree(p * (r + w), p * r + p * w), "series distributivity" + s);
      log.check(p * r == r * p, "series commutativity" + s);
      log.check((p * r).tau(1) == p.tau(1) * r.tau(1), "series twist" + s);

      KInf i = random_kinf(f, rng, 12), j = random_kinf(f, rng, 14), k = random_kinf(f, rng, 10);
      log.check(agree((i * j) * k, i * (j * k)), "K_inf associativity" + s);
      log.check(agree(i * (j + k), i * j + i * k), "K_inf distributivity" + s);
      log.check(i * j == j * i, "K_inf commutativity" + s);
      log.check(agree(i * i.inverse(), KInf::constant(f, 1)), "K_inf inverse" + s);
    }
  }
  log.check(cases >= 100, "fewer than 100 fuzz cases");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  void (*run)(Log&);
};

}  // namespace

int main() {
  const std::vector<Criterion> crits{
      {1, "g_k^* dual recursions agree", 30, crit1},
      {2, "g_k^* specializes to g_k and m_k", 30, crit2},
      {3, "-h tau(d_2) equals the chi_t lattice sum", 20, crit3},
      {4, "g_k^* through d_2, d_3^*; k = 0 case; twisted d_3^* at t = theta", 60, crit4},
      {5, "truncation of g_k^* from d_2 and its substitutions", 60, crit5},
      {6, "displayed expansions of d_2, psi^*, d_3^*, g", 60, crit6},
      {7, "operators L_1, L_2, annihilator, recurrences, skew division", 30, crit7},
      {8, "Eisenstein and Goss cross-validation", 60, crit8},
      {9, "extremal family routes, valuation, integrality", 60, crit9},
      {10, "infinite place: L(chi_t,1) S identity, zeta closed forms, twist, cutoff", 30, crit10},
      {11, "precision soundness, type closure, Wronskian criterion, ring axioms", 60, crit11},
  };
  int failed = 0;
  for (const auto& c : crits) {
    Log log;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.check(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log.check(s < c.limit_s, "over the time budget");
    bool ok = log.fails.empty();
    failed += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << s << " s)";
    std::cout << line.str() << '\n';
    for (std::size_t i = 0; i < log.fails.size() && i < 5; ++i) std::cout << "    " << log.fails[i] << '\n';
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (crits.size() - failed) << "/" << crits.size() << '\n';
  return failed ? 1 : 0;
}
