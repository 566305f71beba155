#ifndef DMF_CATALOG_HPP
#define DMF_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dmf/field.hpp"
#include "dmf/useries.hpp"

namespace dmf {

struct VerifyConfig {
  const Field* f = nullptr;
  Exp order = 60;
  int kmax = 3;
  // restricts k-indexed identities to a single k
  std::optional<int> k;
  int t_order = 8;
  Exp prec = 40;
  bool timing = false;
};

struct IdentityInfo {
  std::string id, suite, anchor;
};

struct IdentityResult {
  std::string id, suite, anchor;
  nlohmann::json params;
  bool pass = false;
  bool skipped = false;
  std::string note;
  // smallest certified order (u or x) over the comparisons made
  Exp checked = kExact;
  std::optional<nlohmann::json> first_discrepancy;
  std::optional<double> elapsed_ms;
  nlohmann::json to_json() const;
};

// Sorted by id.
const std::vector<IdentityInfo>& identity_catalog();
bool is_suite(const std::string& name);

// Runs one identity or a suite (all, forms, deformations, taurec, lseries).
// DomainError on an unknown selector; PrecisionError propagates.
std::vector<IdentityResult> run_verify(const std::string& selector, const VerifyConfig& cfg);
nlohmann::json verify_report(const std::vector<IdentityResult>& results, const VerifyConfig& cfg);

// Catalog objects for expansion: g, h, delta, E, gk, mk, gkstar, Ek, xk, d2,
// psistar, d3star, Edeform, goss, ua.
struct ExpandRequest {
  const Field* f = nullptr;
  std::string object;
  Exp order = 30;
  int k = 1;
  int alpha = 1;
  std::vector<Fq> a;
};
const std::vector<std::string>& expand_objects();
USeries expand_object(const ExpandRequest& r);

}  // namespace dmf

#endif
