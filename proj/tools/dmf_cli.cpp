// Batch interface: expand, verify, lvalue, zeta.
// Exit codes: 0 success or all pass, 1 verification failure, 2 usage, 3 precision shortfall.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dmf/algebra.hpp"
#include "dmf/bipoly.hpp"
#include "dmf/catalog.hpp"
#include "dmf/error.hpp"
#include "dmf/lseries.hpp"

using namespace dmf;
using json = nlohmann::json;

namespace {

struct Common {
  int p = 3;
  int e = 1;
  std::string modulus;
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--p", c.p, "characteristic")->check(CLI::PositiveNumber);
  app->add_option("--e", c.e, "extension degree, q = p^e")->check(CLI::PositiveNumber);
  app->add_option("--modulus", c.modulus, "defining polynomial of F_q over F_p, e.g. \"x^2 + x + 1\"");
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--output", c.output, "output path (default stdout)");
}

const Field* make_field(const Common& c) {
  std::vector<int> mod;
  if (!c.modulus.empty()) mod = parse_modulus(c.modulus, c.p);
  return Field::get(c.p, c.e, mod);
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw DomainError("cannot open output file " + c.output);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// key=value lines (# comments, optional [section] headers) become flags
// placed before the command line ones, so command line flags win.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw CLI::ConversionError("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
    if (key == "timing") {
      if (val == "true" || val == "1") out.push_back("--timing");
      continue;
    }
    out.push_back("--" + key);
    out.push_back(val);
  }
  return out;
}

std::vector<Fq> parse_a(const Field* f, const std::string& text) {
  BiPoly a = BiPoly::parse(f, text);
  if (!a.theta_only()) throw DomainError("a must be a polynomial in th");
  std::vector<Fq> c(static_cast<std::size_t>(std::max<std::int64_t>(a.deg_theta() + 1, 0)), 0);
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(0, j);
  return c;
}

std::string inf_csv(const InfSeries& s) {
  std::ostringstream o;
  o << "t_exponent,theta_exponent,digit\n";
  for (int j = 0; j < s.t_order(); ++j) {
    const KInf& x = s.c[j];
    if (x.is_zero()) continue;
    Exp hi = x.prec() >= kExact ? x.valuation() + 1 : x.prec();
    for (Exp n = x.valuation(); n < hi; ++n) {
      Fq d = x.digit(n);
      if (d) o << j << ',' << -n << ',' << x.field()->to_string(d) << '\n';
    }
  }
  return o.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modular forms: expansions, identity checks and L-values"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Common cx, cv, cl, cz;
  std::string config;
  app.add_option("--config", config, "key=value file; command line flags take precedence");

  auto* expand = app.add_subcommand("expand", "write the u-expansion of a catalog object");
  add_common(expand, cx);
  ExpandRequest er;
  std::string object, a_text;
  Exp xorder = 30;
  expand->add_option("--object", object, "g h delta E gk mk gkstar Ek xk d2 psistar d3star Edeform goss ua")->required();
  expand->add_option("--order", xorder, "u-order")->check(CLI::PositiveNumber);
  expand->add_option("--k", er.k, "index k")->check(CLI::NonNegativeNumber);
  expand->add_option("--alpha", er.alpha, "Goss index")->check(CLI::PositiveNumber);
  expand->add_option("--a", a_text, "polynomial a in th for ua");

  auto* verify = app.add_subcommand("verify", "run an identity or a suite and report");
  add_common(verify, cv);
  std::string suite, id;
  VerifyConfig vc;
  int vk = -1;
  verify->add_option("--suite", suite, "all, forms, deformations, taurec, lseries");
  verify->add_option("--id", id, "single identity id");
  verify->add_option("--order", vc.order, "u-order")->check(CLI::PositiveNumber);
  verify->add_option("--kmax", vc.kmax, "largest k")->check(CLI::NonNegativeNumber);
  verify->add_option("--k", vk, "restrict to one k")->check(CLI::NonNegativeNumber);
  verify->add_option("--t-order", vc.t_order, "t-order at the infinite place")->check(CLI::PositiveNumber);
  verify->add_option("--prec", vc.prec, "theta-precision at the infinite place")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", vc.timing, "record elapsed_ms (output is then not reproducible)");
  verify->add_flag("--list", "print the identity catalog");

  auto* lvalue = app.add_subcommand("lvalue", "L(chi_t^l, alpha) as a t-series over K_inf");
  add_common(lvalue, cl);
  int ll = 1, la = 1, lt = 4;
  Exp lp = 20;
  lvalue->add_option("--l", ll, "power of chi_t")->check(CLI::NonNegativeNumber);
  lvalue->add_option("--alpha", la, "exponent alpha")->check(CLI::PositiveNumber);
  lvalue->add_option("--t-order", lt, "t-order")->check(CLI::PositiveNumber);
  lvalue->add_option("--prec", lp, "theta-precision")->check(CLI::PositiveNumber);

  auto* zeta = app.add_subcommand("zeta", "zeta(q^k - 1) and its closed form");
  add_common(zeta, cz);
  int zk = 1;
  Exp zp = 20;
  zeta->add_option("--k", zk, "k >= 1")->check(CLI::PositiveNumber);
  zeta->add_option("--prec", zp, "theta-precision")->check(CLI::PositiveNumber);

  try {
    // splice config values in right after the subcommand name
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
      if (args[i] == "--config") {
        auto extra = config_args(args[i + 1]);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
        auto sub = std::find_if(args.begin(), args.end(), [](const std::string& s) { return s.rfind("--", 0) != 0; });
        if (sub != args.end()) ++sub;
        args.insert(sub, extra.begin(), extra.end());
        break;
      }
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*expand) {
      er.f = make_field(cx);
      er.object = object;
      er.order = xorder;
      if (object == "ua") {
        if (a_text.empty()) throw DomainError("ua needs --a");
        er.a = parse_a(er.f, a_text);
      }
      USeries s = expand_object(er);
      emit(cx, cx.format == "csv" ? s.to_csv() : s.to_json());
      return 0;
    }
    if (*verify) {
      if (verify->count("--list")) {
        json j = json::array();
        for (const auto& i : identity_catalog()) j.push_back({{"id", i.id}, {"suite", i.suite}, {"anchor", i.anchor}});
        emit(cv, j.dump(2));
        return 0;
      }
      if (suite.empty() == id.empty()) throw DomainError("give exactly one of --suite and --id");
      if (cv.format != "json") throw DomainError("verify reports are JSON only");
      vc.f = make_field(cv);
      if (vk >= 0) vc.k = vk;
      auto results = run_verify(suite.empty() ? id : suite, vc);
      json rep = verify_report(results, vc);
      emit(cv, rep.dump(2));
      return rep["all_pass"].get<bool>() ? 0 : 1;
    }
    if (*lvalue) {
      const Field* f = make_field(cl);
      InfSeries s = l_value_series(f, ll, la, lt, lp);
      if (cl.format == "csv") {
        emit(cl, inf_csv(s));
        return 0;
      }
      json j{{"l", ll}, {"alpha", la}, {"q", f->q()}, {"t_order", lt}, {"certified_prec", s.prec()},
             {"degree_cutoff", lseries_degree_bound(f, ll, la, lp)}, {"series", s.to_json()}};
      emit(cl, j.dump(2));
      return 0;
    }
    if (*zeta) {
      const Field* f = make_field(cz);
      int alpha = static_cast<int>(qpow(f->q(), zk) - 1);
      KInf z = zeta_value(f, alpha, zp);
      Cor4Report r = verify_corollary4_zeta(f, 1, zp, zk);
      const ZetaCheck& c = r.zeta.back();
      if (cz.format == "csv") {
        emit(cz, inf_csv(InfSeries::constant(z, 1)));
        return c.ok ? 0 : 1;
      }
      json j{{"k", zk}, {"alpha", alpha}, {"q", f->q()}, {"certified_prec", z.prec()}, {"value", z.to_json()},
             {"closed_form_agrees", c.ok}};
      emit(cz, j.dump(2));
      return c.ok ? 0 : 1;
    }
  } catch (const PrecisionError& e) {
    std::cerr << "precision shortfall: " << e.what() << '\n';
    return 3;
  } catch (const NotInImageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
