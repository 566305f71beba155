#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "dmf/catalog.hpp"
#include "dmf/error.hpp"
#include "json.hpp"

using namespace dmf;

namespace {

const Field* field_for(int q) { return q == 4 ? Field::get(2, 2) : Field::prime(q); }

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  std::string path = ::testing::TempDir() + "dmf_cli_out.txt";
  std::string cmd = std::string(DMF_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
  int st = std::system(cmd.c_str());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, ss.str()};
}

}  // namespace

TEST(Catalog, IdsSortedAndSuites) {
  const auto& cat = identity_catalog();
  ASSERT_GE(cat.size(), 20u);
  for (std::size_t i = 1; i < cat.size(); ++i) EXPECT_LT(cat[i - 1].id, cat[i].id);
  for (const auto& e : cat) EXPECT_TRUE(is_suite(e.suite)) << e.id;
  VerifyConfig c;
  c.f = field_for(3);
  EXPECT_THROW(run_verify("nope", c), DomainError);
}

TEST(Catalog, SuitesPass) {
  for (int q : {2, 3, 4}) {
    VerifyConfig c;
    c.f = field_for(q);
    c.order = 3 * q * q + 8;
    c.kmax = 2;
    c.t_order = 4;
    c.prec = 20;
    auto rs = run_verify("all", c);
    EXPECT_EQ(rs.size(), identity_catalog().size());
    for (const auto& r : rs) {
      EXPECT_TRUE(r.pass || r.skipped) << q << " " << r.id << " " << r.to_json().dump();
      EXPECT_EQ(r.skipped, q == 2 && r.id == "gkstar-truncation");
    }
    EXPECT_TRUE(verify_report(rs, c)["all_pass"].get<bool>());
  }
}

TEST(Catalog, ReportIsDeterministic) {
  VerifyConfig c;
  c.f = field_for(3);
  c.order = 30;
  c.kmax = 2;
  auto a = verify_report(run_verify("deformations", c), c).dump();
  auto b = verify_report(run_verify("deformations", c), c).dump();
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  for (const auto& r : j["identities"]) EXPECT_TRUE(r["elapsed_ms"].is_null());
  // k = 3 needs u-order q^3 + 2q - 2 = 31
  c.kmax = 3;
  EXPECT_THROW(run_verify("gkstar-truncation", c), PrecisionError);
}

TEST(Catalog, ExpandObjects) {
  const Field* f = field_for(3);
  for (const auto& o : expand_objects()) {
    ExpandRequest r;
    r.f = f;
    r.object = o;
    r.order = 20;
    r.k = 2;
    r.alpha = 4;
    r.a = {1, 1};
    USeries s = expand_object(r);
    if (o != "goss") EXPECT_EQ(s.order(), 20) << o;
  }
  ExpandRequest g;
  g.f = f;
  g.object = "goss";
  g.alpha = 4;
  USeries goss = expand_object(g);
  EXPECT_TRUE(goss.coeff(4).is_one());
  EXPECT_EQ(goss.coeff(2), CoeffElem::fraction(BiPoly::constant(f, 1), BiPoly::theta(f).pow(3) - BiPoly::theta(f)));
  g.object = "zzz";
  EXPECT_THROW(expand_object(g), DomainError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("verify --suite all --p 3 --order 100 --kmax 3").code, 0);
  EXPECT_EQ(cli("verify --id gkstar-deformation --k 2 --p 3 --order 40").code, 0);
  EXPECT_EQ(cli("verify --id scar-product --t-order 8 --prec 40").code, 0);
  EXPECT_EQ(cli("verify --suite bogus").code, 2);
  EXPECT_EQ(cli("expand --object bogus").code, 2);
  EXPECT_EQ(cli("expand").code, 2);
  EXPECT_EQ(cli("expand --p 4").code, 2);
  EXPECT_EQ(cli("verify --suite all --p 5 --order 20 --kmax 3").code, 3);
}

TEST(Cli, ExpandOutput) {
  CliRun r = cli("expand --p 3 --e 1 --object g --order 30 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 30);
  bool seen = false;
  for (const auto& t : j["terms"])
    if (t["u"] == 2) {
      // th - th^3 in canonical rendering
      EXPECT_EQ(t["coeff"], "2*th^3 + th");
      seen = true;
    }
  EXPECT_TRUE(seen);
  CliRun csv = cli("expand --p 3 --object g --order 30 --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("u_exponent,coefficient", 0), 0u);
  EXPECT_EQ(cli("expand --p 3 --object d2 --order 20").out, cli("expand --p 3 --object d2 --order 20").out);
}

TEST(Cli, ConfigFileAndPrecedence) {
  std::string path = ::testing::TempDir() + "dmf_cfg.ini";
  {
    std::ofstream o(path);
    o << "# test config\np = 3\norder = 40\n[verify]\nkmax = 2\n";
  }
  CliRun r = cli("verify --config " + path + " --id gkstar-routes --order 30");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["identities"][0]["params"]["order"], 30);
  EXPECT_EQ(j["identities"][0]["params"]["kmax"], 2);
  EXPECT_EQ(j["field"]["q"], 3);
}

TEST(Cli, LValueAndZeta) {
  CliRun r = cli("lvalue --p 2 --l 1 --alpha 1 --t-order 2 --prec 6");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["certified_prec"], 6);
  EXPECT_EQ(j["series"]["coefficients"][0]["theta_degree"], 0);
  CliRun z = cli("zeta --p 3 --k 2 --prec 30");
  ASSERT_EQ(z.code, 0);
  auto jz = nlohmann::json::parse(z.out);
  EXPECT_TRUE(jz["closed_form_agrees"].get<bool>());
  EXPECT_EQ(jz["alpha"], 8);
  EXPECT_EQ(jz["certified_prec"], 30);
}
