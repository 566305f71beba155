#include "dmf/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "dmf/algebra.hpp"
#include "dmf/carlitz.hpp"
#include "dmf/deformations.hpp"
#include "dmf/error.hpp"
#include "dmf/forms.hpp"
#include "dmf/lseries.hpp"
#include "dmf/taurec.hpp"

namespace dmf {

namespace {

using json = nlohmann::json;

CoeffElem K(const BiPoly& p) { return CoeffElem(p); }

// Lazily built shared inputs for one run.
class Ctx {
 public:
  explicit Ctx(const VerifyConfig& c) : cfg(c), f(c.f), q(c.f->q()) {}

  const BaseForms& base() {
    if (!base_) base_ = bootstrap_base_forms(f, std::max<Exp>(cfg.order, static_cast<Exp>(q) * q));
    return *base_;
  }
  const DeformCatalog& deform() {
    if (!deform_) deform_ = build_deformations(f, cfg.order);
    return *deform_;
  }
  std::vector<int> ks(int lo) const {
    std::vector<int> r;
    if (cfg.k) {
      if (*cfg.k >= lo) r.push_back(*cfg.k);
      return r;
    }
    for (int k = lo; k <= cfg.kmax; ++k) r.push_back(k);
    return r;
  }
  int kcap() const { return cfg.k ? *cfg.k : cfg.kmax; }

  VerifyConfig cfg;
  const Field* f;
  int q;

 private:
  std::optional<BaseForms> base_;
  std::optional<DeformCatalog> deform_;
};

// Collects comparisons; the first discrepancy wins.
struct Outcome {
  Exp checked = kExact;
  std::optional<json> first;
  std::string note;
  bool skipped = false;

  void record(const std::string& label, json where) {
    if (first) return;
    where["check"] = label;
    first = std::move(where);
  }

  void series(const std::string& label, const USeries& lhs, const USeries& rhs) {
    Exp n = std::min(lhs.order(), rhs.order());
    if (n <= 0) throw PrecisionError(label + ": no certified coefficients to compare (raise --order)");
    checked = std::min(checked, n);
    auto d = first_difference(lhs, rhs);
    if (d) record(label, {{"u_exponent", *d}, {"lhs", lhs.coeff(*d).str()}, {"rhs", rhs.coeff(*d).str()}});
  }

  void zero(const std::string& label, const USeries& s) { series(label, s, USeries(s.field())); }

  void sym_zero(const std::string& label, const SymSeries& s) {
    Exp n = s.min_order();
    if (n <= 0) throw PrecisionError(label + ": no certified coefficients to compare (raise --order)");
    checked = std::min(checked, n);
    if (s.is_zero() || first) return;
    for (int fd = 0; fd <= s.f_degree(); ++fd)
      for (int sd = -8; sd <= 8; ++sd) {
        USeries c = s.component(fd, sd);
        if (c.is_zero()) continue;
        Exp e = c.valuation();
        record(label, {{"u_exponent", e}, {"F_degree", fd}, {"S_degree", sd}, {"lhs", c.coeff(e).str()}, {"rhs", "0"}});
        return;
      }
    record(label, {{"u_exponent", nullptr}, {"lhs", "nonzero"}, {"rhs", "0"}});
  }

  void coeffs(const std::string& label, const USeries& s, const std::vector<std::pair<Exp, CoeffElem>>& expect) {
    for (const auto& [e, c] : expect) {
      if (e >= s.order()) throw PrecisionError(label + ": displayed coefficient beyond the series order");
      if (s.coeff(e) != c) {
        record(label, {{"u_exponent", e}, {"lhs", s.coeff(e).str()}, {"rhs", c.str()}});
        return;
      }
    }
    checked = std::min(checked, s.order());
  }

  void kinf(const std::string& label, const InfSeries& lhs, const InfSeries& rhs) {
    Exp n = std::min(lhs.prec(), rhs.prec());
    checked = std::min(checked, n);
    for (int j = 0; j < std::min(lhs.t_order(), rhs.t_order()); ++j) {
      auto d = first_difference(lhs.c[j], rhs.c[j]);
      if (d) {
        auto dig = [&](const KInf& x) { return x.field()->to_string(x.digit(*d)); };
        record(label, {{"t_exponent", j}, {"theta_exponent", -*d}, {"lhs", dig(lhs.c[j])}, {"rhs", dig(rhs.c[j])}});
        return;
      }
    }
  }

  void flag(const std::string& label, bool ok, const std::string& what) {
    if (!ok) record(label, {{"u_exponent", nullptr}, {"lhs", what}, {"rhs", "expected"}});
  }
};

using Runner = std::function<void(Ctx&, Outcome&, json&)>;

struct Entry {
  IdentityInfo info;
  Runner run;
};

USeries prefix(const Field* f, std::vector<USeries::TermT> terms, Exp order) {
  return USeries::from_terms(f, std::move(terms), order);
}

void forms_entries(std::vector<Entry>& v) {
  v.push_back({{"g-expansion", "forms", "leading terms of the u-expansion of g"}, [](Ctx& c, Outcome& o, json&) {
                 const Field* f = c.f;
                 Exp r = c.q - 1, top = (static_cast<Exp>(c.q) * c.q - c.q + 1) * r;
                 CoeffElem lead = K(BiPoly::theta(f) - BiPoly::theta(f).pow(c.q));
                 o.series("g", c.base().g.truncated(top + 1),
                          prefix(f, {{0, CoeffElem::constant(f, 1)}, {r, lead}, {top, lead}}, top + 1));
               }});
  v.push_back({{"gkstar-routes", "forms", "the two recursions for the deformed g_k^* agree"},
               [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 auto a = gkstar_family(c.base(), c.kcap(), StarRoute::A);
                 auto b = gkstar_family(c.base(), c.kcap(), StarRoute::B);
                 for (int k : c.ks(0)) o.series("k=" + std::to_string(k), a[k], b[k]);
               }});
  v.push_back({{"gkstar-at-theta", "forms", "g_k^* at t = theta is g_k"}, [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 auto s = gkstar_family(c.base(), c.kcap(), StarRoute::A);
                 auto g = ortho_family(c.base(), c.kcap());
                 for (int k : c.ks(0)) o.series("k=" + std::to_string(k), s[k].subst_t_theta_power(1), g[k]);
               }});
  v.push_back({{"gkstar-at-theta-qk", "forms", "g_k^* at t = theta^(q^k) is m_k"}, [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 auto s = gkstar_family(c.base(), c.kcap(), StarRoute::A);
                 auto m = para_family(c.base(), c.kcap());
                 for (int k : c.ks(0))
                   o.series("k=" + std::to_string(k), s[k].subst_t_theta_power(static_cast<std::uint64_t>(qpow(c.q, k))),
                            m[k]);
               }});
  v.push_back({{"eisenstein-gk", "forms", "1 + (-1)^k [k]...[1] sum_a G_(q^k-1)(u_a) = g_k"},
               [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 auto g = ortho_family(c.base(), c.kcap());
                 for (int k : c.ks(0)) o.series("k=" + std::to_string(k), eisenstein_gk(c.f, k, c.base().order), g[k]);
               }});
  v.push_back({{"goss-routes", "forms", "Goss polynomials: generating series and recursion agree"},
               [](Ctx& c, Outcome& o, json& p) {
                 int amax = static_cast<int>(qpow(c.q, 3));
                 p["alpha_max"] = amax;
                 auto gen = goss_generating(c.f, amax);
                 for (int a = 1; a <= amax; ++a) o.series("alpha=" + std::to_string(a), gen[a], goss_polynomial(c.f, a));
               }});
  v.push_back({{"extremal-routes", "forms", "E_k from the x_k recursion, from D_1 g_k and from the lattice sum agree"},
               [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 auto ex = extremal_family(c.base(), c.kcap(), ExtremalRoute::XK);
                 auto ed = extremal_family(c.base(), c.kcap(), ExtremalRoute::D1);
                 auto el = extremal_family(c.base(), c.kcap(), ExtremalRoute::Lattice);
                 for (int k : c.ks(0)) {
                   std::string s = "k=" + std::to_string(k);
                   o.series(s + " xk", ex[k], el[k]);
                   o.series(s + " d1", ed[k], el[k]);
                   o.flag(s + " valuation", ex[k].valuation() == qpow(c.q, k), "valuation");
                   o.flag(s + " normalised", ex[k].lead().is_one(), "leading coefficient");
                   o.flag(s + " integral", ex[k].is_integral() && ex[k].theta_only(), "non-integral coefficient");
                 }
               }});
}

void deformation_entries(std::vector<Entry>& v) {
  v.push_back({{"d2-equation", "deformations", "d_2 solves its twisted functional equation"},
               [](Ctx& c, Outcome& o, json&) { o.zero("residual", eq32_residual(c.deform().base, c.deform().d2)); }});
  v.push_back({{"d2-expansion", "deformations", "displayed leading terms of d_2"}, [](Ctx& c, Outcome& o, json&) {
                 const Field* f = c.f;
                 Exp r = c.q - 1, top = (static_cast<Exp>(c.q) * c.q - c.q + 1) * r;
                 CoeffElem lead = K(BiPoly::theta(f) - BiPoly::t(f));
                 o.series("d2", c.deform().d2.truncated(top + 1),
                          prefix(f, {{0, CoeffElem::constant(f, 1)}, {r, lead}, {top, lead}}, top + 1));
               }});
  v.push_back({{"psistar-expansion", "deformations", "displayed leading terms of psi^*"}, [](Ctx& c, Outcome& o, json&) {
                 const Field* f = c.f;
                 int q = c.q;
                 const USeries& psi = c.deform().psistar;
                 if (q == 2) {
                   o.coeffs("psi*", psi, {{0, K(BiPoly::constant(f, 1) + BiPoly::theta(f) + BiPoly::t(f))}});
                   return;
                 }
                 Exp s = q - 2;
                 o.coeffs("psi*", psi,
                          {{s - 1, CoeffElem(f)},
                           {s, K(BiPoly::theta(f) - BiPoly::t(f))},
                           {(q - 1) * (q - 2) + s, CoeffElem::constant(f, 1)},
                           {(q - 1) * (q - 1) + s, K(BiPoly::theta(f) - BiPoly::theta(f).pow(q))}});
               }});
  v.push_back({{"d3star-expansion", "deformations", "displayed leading terms of d_3^*"}, [](Ctx& c, Outcome& o, json&) {
                 const Field* f = c.f;
                 int q = c.q;
                 const USeries& d3 = c.deform().d3star;
                 if (q == 2) {
                   CoeffElem x = K(BiPoly::t(f) + BiPoly::theta(f));
                   o.series("d3*", d3.truncated(3), prefix(f, {{0, x}, {2, x}}, 3));
                   return;
                 }
                 Exp s = q - 2, second = s + static_cast<Exp>(q) * (q - 1) * (q - 1);
                 CoeffElem lead = K(BiPoly::theta(f) - BiPoly::t(f));
                 o.series("d3*", d3.truncated(second + 1), prefix(f, {{s, lead}, {second, lead}}, second + 1));
                 o.zero("equation", d3_residual(c.deform().base, d3, c.deform().psistar));
               }});
  v.push_back({{"deformed-e", "deformations", "-h tau(d_2) = sum over monic c of chi_t(c) u_c"},
               [](Ctx& c, Outcome& o, json&) {
                 o.series("lattice", c.deform().e_deform, deform_e_lattice(c.f, c.cfg.order));
               }});
  v.push_back({{"h-inverse-k0", "deformations", "-1/h in terms of d_2 and d_3^*"}, [](Ctx& c, Outcome& o, json&) {
                 const auto& d = c.deform();
                 o.series("k=0", -d.base.h.inverse(c.cfg.order), thm29_k0_rhs(d.base, d.d2, d.d3star));
               }});
  v.push_back({{"d3star-twist-at-theta", "deformations", "tau(d_3^*) at t = theta equals (E/u - 1)(theta - theta^q)/h"},
               [](Ctx& c, Outcome& o, json&) {
                 const auto& d = c.deform();
                 const Field* f = c.f;
                 Exp n = c.cfg.order;
                 USeries e = big_e_series(f, n + 2, 0);
                 USeries rhs = K(BiPoly::theta(f) - BiPoly::theta(f).pow(c.q)) * ((e.shifted(-1) - USeries::one(f)) * d.base.h.inverse(n));
                 o.series("twist", d.d3star.tau(1).subst_t_theta_power(1), rhs);
               }});
  v.push_back({{"gkstar-deformation", "deformations", "g_k^* expressed through h, d_2 and d_3^*"},
               [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 const auto& d = c.deform();
                 auto s = gkstar_family(d.base, c.kcap(), StarRoute::A);
                 for (int k : c.ks(1)) o.series("k=" + std::to_string(k), s[k], thm29_rhs(d.base, d.d2, d.d3star, k));
               }});
  v.push_back({{"gkstar-truncation", "deformations", "truncation of g_k^* below u^(q^k + 2q - 2) from d_2"},
               [](Ctx& c, Outcome& o, json& p) {
                 if (c.q == 2) {
                   o.skipped = true;
                   o.note = "needs q != 2";
                   return;
                 }
                 p["kmax"] = c.kcap();
                 const auto& d = c.deform();
                 const Field* f = c.f;
                 auto s = gkstar_family(d.base, c.kcap(), StarRoute::A);
                 auto g = ortho_family(d.base, c.kcap());
                 auto m = para_family(d.base, c.kcap());
                 for (int k : c.ks(1)) {
                   std::string lab = "k=" + std::to_string(k);
                   Exp qk = qpow(c.q, k), n = qk + 2 * c.q - 2;
                   USeries formula = cor6_formula(d.base, d.d2, k);
                   o.series(lab, formula, s[k].truncated(n).without_tags());
                   std::vector<USeries::TermT> st{{0, CoeffElem::constant(f, 1)}};
                   for (int i = 0; i < k; ++i) st.emplace_back(qk - qpow(c.q, i), K(t_chain(f, k, i).subst_t_theta_power(1)));
                   USeries at_theta = formula.subst_t_theta_power(1);
                   o.series(lab + " t=theta", at_theta, USeries::from_terms(f, std::move(st), n));
                   o.series(lab + " t=theta g_k", at_theta, g[k]);
                   auto uq = static_cast<std::uint64_t>(qk);
                   o.series(lab + " t=theta^(q^k)", formula.subst_t_theta_power(uq), d.d2.subst_t_theta_power(uq).truncated(n));
                   o.series(lab + " t=theta^(q^k) m_k", formula.subst_t_theta_power(uq), m[k]);
                 }
               }});
}

void taurec_entries(std::vector<Entry>& v) {
  v.push_back({{"l1-annihilates", "taurec", "the order-2 operator L_1 kills d_2 and the symbolic d_1"},
               [](Ctx& c, Outcome& o, json&) {
                 const auto& d = c.deform();
                 auto l1 = lift_operator<SymSeries>(l1_operator(d.base));
                 o.sym_zero("d1", l1.apply(d1_symbolic(d)));
                 o.sym_zero("d2", l1.apply(SymSeries(d.d2)));
               }});
  v.push_back({{"l2-annihilates", "taurec", "the order-3 operator L_2 kills d_2^2, d_1 d_2 and d_1^2"},
               [](Ctx& c, Outcome& o, json&) {
                 const auto& d = c.deform();
                 auto l2 = lift_operator<SymSeries>(l2_operator(d.base, c.cfg.order));
                 SymSeries d1 = d1_symbolic(d), d2(d.d2);
                 o.sym_zero("d2^2", l2.apply(d2 * d2));
                 o.sym_zero("d1 d2", l2.apply(d1 * d2));
                 o.sym_zero("d1^2", l2.apply(d1 * d1));
               }});
  v.push_back({{"annihilator-l1", "taurec", "the annihilator of (d_1, d_2) normalised to a_0 = -1 is L_1"},
               [](Ctx& c, Outcome& o, json&) {
                 const auto& d = c.deform();
                 auto ann = build_annihilator(thm3_column(d));
                 SymSeries scale = -ann.a[0].inverse(c.cfg.order);
                 auto l1 = l1_operator(d.base);
                 for (int i = 0; i <= 2; ++i) {
                   SymSeries ai = ann.a[i] * scale;
                   if (!ai.is_pure()) {
                     o.flag("a" + std::to_string(i), false, "coefficient involves F or S");
                     continue;
                   }
                   o.series("a" + std::to_string(i), ai.collapse(), l1.a[i]);
                 }
               }});
  v.push_back({{"row-sequence", "taurec", "row times twisted column reproduces g_k^*"}, [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 const auto& d = c.deform();
                 auto g = sequence_eval(thm3_row(d), thm3_column(d), 0, c.kcap());
                 auto s = gkstar_family(d.base, c.kcap(), StarRoute::A);
                 for (int k : c.ks(0)) {
                   std::string lab = "k=" + std::to_string(k);
                   if (!g[k].is_pure()) {
                     o.sym_zero(lab, g[k] - SymSeries(s[k]));
                     continue;
                   }
                   o.series(lab, g[k].collapse(), s[k]);
                 }
                 auto lad = lift_operator<SymSeries>(lad_operator(d.base));
                 auto row = thm3_row(d);
                 o.sym_zero("adjoint row[0]", lad.apply(row[0]));
                 o.sym_zero("adjoint row[1]", lad.apply(row[1]));
               }});
  v.push_back({{"legendre", "taurec", "deformed Legendre identity: row times column is 1"}, [](Ctx& c, Outcome& o, json&) {
                 const auto& d = c.deform();
                 auto g = sequence_eval(thm3_row(d), thm3_column(d), 0, 0);
                 o.sym_zero("G_0 - 1", g[0] - SymSeries(USeries::one(c.f)));
               }});
  v.push_back({{"gkstar-recurrences", "taurec", "g_k^* satisfies the L_1 recurrence and the adjoint recurrence"},
               [](Ctx& c, Outcome& o, json& p) {
                 int kmax = std::max(2, c.kcap() + 2);
                 p["kmax"] = kmax;
                 const BaseForms& b = c.base();
                 auto gs = gkstar_family(b, kmax, StarRoute::B);
                 auto l1 = l1_operator(b);
                 auto lad = lad_operator(b);
                 for (int k = 2; k <= kmax; ++k) {
                   o.zero("L1 k=" + std::to_string(k), l1.apply_sequence(gs, k));
                   o.zero("adjoint k=" + std::to_string(k), linearised_residual(lad, gs, k));
                 }
               }});
}

void lseries_entries(std::vector<Entry>& v) {
  v.push_back({{"scar-product", "lseries", "L(chi_t, 1) (t - theta) s_Car/pibar = -1"}, [](Ctx& c, Outcome& o, json& p) {
                 int T = c.cfg.t_order;
                 Exp n = c.cfg.prec;
                 p["t_order"] = T;
                 p["prec"] = n;
                 InfSeries lv = l_value_series(c.f, 1, 1, T, n + 2);
                 InfSeries s = scar_normalized(c.f, T, n + 2);
                 o.kinf("product", (lv * s.times_t_minus_theta()).truncated(n),
                        InfSeries::constant(KInf::from_int(c.f, -1), T).truncated(n));
                 InfSeries tw = pibar_power(c.f, c.q - 1, n) * s.frobenius(1);
                 o.kinf("twist", tw.truncated(n), s.times_t_minus_theta().truncated(n));
               }});
  v.push_back({{"zeta-closed-form", "lseries", "zeta(q^k - 1) [k]...[1] = (-1)^k pibar^(q^k - 1)"},
               [](Ctx& c, Outcome& o, json& p) {
                 p["kmax"] = c.kcap();
                 p["prec"] = c.cfg.prec;
                 Cor4Report r = verify_corollary4_zeta(c.f, 1, c.cfg.prec, c.kcap());
                 for (const auto& z : r.zeta) {
                   if (c.cfg.k && z.k != *c.cfg.k) continue;
                   o.checked = std::min(o.checked, z.certified);
                   if (z.certified < c.cfg.prec) throw PrecisionError("zeta value short of the requested precision");
                   if (z.first_difference) o.record("k=" + std::to_string(z.k), {{"theta_exponent", -*z.first_difference}});
                 }
               }});
  v.push_back({{"lseries-twist", "lseries", "tau L(chi_t^l, alpha) = L(chi_t^l, q alpha)"}, [](Ctx& c, Outcome& o, json& p) {
                 int T = c.cfg.t_order;
                 Exp n = c.cfg.prec;
                 p["t_order"] = T;
                 p["prec"] = n;
                 for (auto [l, a] : std::vector<std::pair<int, int>>{{1, 1}, {1, c.q}, {2, 2}}) {
                   InfSeries lhs = l_value_series(c.f, l, a, T, n).frobenius(1);
                   InfSeries rhs = l_value_series(c.f, l, c.q * a, T, n);
                   o.kinf("l=" + std::to_string(l) + " alpha=" + std::to_string(a), lhs, rhs);
                 }
               }});
  v.push_back({{"lseries-cutoff", "lseries", "L-series sums at the degree cutoff D and at D + 2 coincide"},
               [](Ctx& c, Outcome& o, json& p) {
                 int T = c.cfg.t_order;
                 Exp n = c.cfg.prec;
                 p["t_order"] = T;
                 p["prec"] = n;
                 for (auto [l, a] : std::vector<std::pair<int, int>>{{1, 1}, {0, 1}, {2, 2}}) {
                   InfSeries x = l_value_series(c.f, l, a, T, n), y = l_value_series(c.f, l, a, T, n, 2);
                   o.kinf("l=" + std::to_string(l) + " alpha=" + std::to_string(a), x, y);
                   o.flag("identical", x == y, "digits differ");
                 }
               }});
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> v = [] {
    std::vector<Entry> r;
    forms_entries(r);
    deformation_entries(r);
    taurec_entries(r);
    lseries_entries(r);
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
    return r;
  }();
  return v;
}

}  // namespace

json IdentityResult::to_json() const {
  json j;
  j["id"] = id;
  j["suite"] = suite;
  j["anchor"] = anchor;
  j["params"] = params;
  j["status"] = skipped ? "skip" : (pass ? "pass" : "fail");
  if (!note.empty()) j["note"] = note;
  j["checked_order"] = checked >= kExact ? json(nullptr) : json(checked);
  j["first_discrepancy"] = first_discrepancy ? *first_discrepancy : json(nullptr);
  j["elapsed_ms"] = elapsed_ms ? json(*elapsed_ms) : json(nullptr);
  return j;
}

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> v = [] {
    std::vector<IdentityInfo> r;
    for (const auto& e : entries()) r.push_back(e.info);
    return r;
  }();
  return v;
}

bool is_suite(const std::string& name) {
  return name == "all" || name == "forms" || name == "deformations" || name == "taurec" || name == "lseries";
}

std::vector<IdentityResult> run_verify(const std::string& selector, const VerifyConfig& cfg) {
  if (!cfg.f) throw DomainError("no field given");
  if (cfg.order < 1 || cfg.kmax < 0 || cfg.t_order < 1 || cfg.prec < 1) throw DomainError("numeric parameters must be positive");
  bool suite = is_suite(selector);
  std::vector<const Entry*> chosen;
  for (const auto& e : entries())
    if ((suite && (selector == "all" || e.info.suite == selector)) || e.info.id == selector) chosen.push_back(&e);
  if (chosen.empty()) throw DomainError("unknown identity or suite: " + selector);
  Ctx ctx(cfg);
  std::vector<IdentityResult> out;
  for (const Entry* e : chosen) {
    IdentityResult r;
    r.id = e->info.id;
    r.suite = e->info.suite;
    r.anchor = e->info.anchor;
    r.params = {{"p", cfg.f->p()}, {"e", cfg.f->e()}, {"order", cfg.order}};
    if (cfg.k) r.params["k"] = *cfg.k;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e->run(ctx, o, r.params);
    } catch (const PrecisionError& err) {
      throw PrecisionError(e->info.id + ": " + err.what() +
                           " (base forms need u-order >= q^2; k-indexed identities need about q^k + 2q)");
    }
    auto t1 = std::chrono::steady_clock::now();
    if (cfg.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.skipped = o.skipped;
    r.note = o.note;
    r.checked = o.checked;
    r.first_discrepancy = o.first;
    r.pass = !o.first;
    out.push_back(std::move(r));
  }
  return out;
}

json verify_report(const std::vector<IdentityResult>& results, const VerifyConfig& cfg) {
  json j;
  j["field"] = {{"p", cfg.f->p()}, {"e", cfg.f->e()}, {"q", cfg.f->q()}, {"modulus", cfg.f->modulus_string()}};
  json rs = json::array();
  bool all = true;
  for (const auto& r : results) {
    rs.push_back(r.to_json());
    all = all && (r.pass || r.skipped);
  }
  j["identities"] = rs;
  j["all_pass"] = all;
  return j;
}

const std::vector<std::string>& expand_objects() {
  static const std::vector<std::string> v{"g",  "h",       "delta",  "E",       "gk", "mk",   "gkstar", "Ek",
                                          "xk", "d2",      "psistar", "d3star", "Edeform", "goss", "ua"};
  return v;
}

USeries expand_object(const ExpandRequest& r) {
  const Field* f = r.f;
  if (!f) throw DomainError("no field given");
  const std::string& o = r.object;
  if (std::find(expand_objects().begin(), expand_objects().end(), o) == expand_objects().end())
    throw DomainError("unknown object: " + o);
  if (o == "goss") {
    if (r.alpha < 1) throw DomainError("goss needs alpha >= 1");
    return goss_polynomial(f, r.alpha);
  }
  if (r.order < 1) throw DomainError("order must be positive");
  if (r.k < 0) throw DomainError("k must be nonnegative");
  Exp n = r.order;
  int q = f->q();
  if (o == "ua") {
    if (r.a.empty() || std::all_of(r.a.begin(), r.a.end(), [](Fq c) { return c == 0; }))
      throw DomainError("ua needs a nonzero polynomial a");
    return u_sub_a(f, r.a, n);
  }
  if (o == "E") return big_e_series(f, n, 0);
  if (o == "Ek") return big_e_series(f, n, r.k);
  if (o == "d2" || o == "psistar" || o == "d3star" || o == "Edeform") {
    DeformCatalog c = build_deformations(f, n);
    if (o == "d2") return c.d2;
    if (o == "psistar") return c.psistar;
    if (o == "d3star") return c.d3star;
    return c.e_deform;
  }
  BaseForms b = bootstrap_base_forms(f, std::max<Exp>(n, static_cast<Exp>(q) * q));
  USeries s;
  if (o == "g")
    s = b.g;
  else if (o == "h")
    s = b.h;
  else if (o == "delta")
    s = b.delta;
  else if (o == "gk")
    s = ortho_family(b, r.k)[r.k];
  else if (o == "mk")
    s = para_family(b, r.k)[r.k];
  else if (o == "gkstar")
    s = gkstar_family(b, r.k, StarRoute::A)[r.k];
  else
    s = x_family(b, big_e_series(f, b.order, 0), r.k)[r.k];
  if (s.order() < n) throw PrecisionError("base forms certified below the requested order");
  return s.truncated(n);
}

}  // namespace dmf
