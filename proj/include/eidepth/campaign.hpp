#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eidepth/depth_oracle.hpp"
#include "eidepth/forest.hpp"

namespace eidepth {

/// Configuration of a randomized verification campaign. Deterministic: the
/// same config always produces byte-identical reports.
struct CampaignConfig {
  std::uint64_t seed = 1;
  int count = 100;         // instances
  int max_vertices = 8;    // non-isolated vertices per forest
  int max_components = 3;  // p cap
  int max_power = 2;       // t cap
  FieldSpec field;
  long long budget = OracleOptions{}.candidate_budget;
  std::string mode = "full";  // bounds | identities | ass | full
  // also run the oracle over GF(2) and log (never fail on) any depth that
  // differs from the configured field
  bool compare_char2 = false;
};

/// One named pass/fail check within a row.
struct Check {
  std::string name;
  bool holds = false;
};

/// One campaign verdict: an instance/power pair with its bounds, oracle depth
/// (or budget-exceeded marker) and named inequality checks. A failing check
/// forces a nonzero process exit.
struct VerdictRow {
  long instance = 0;
  std::string graph_hash;
  int n = 0, d = 0, p = 0, q = 0, t = 1;
  int forest_lb = 0, bonus_lb = 0, dim_ub = 0;
  std::optional<int> oracle_depth;
  bool budget_exceeded = false;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // logged observations, never failures

  bool passed() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

/// One identity verdict: an exact ideal-equality check on a random instance.
struct IdentityRow {
  long instance = 0;
  std::string graph_hash;
  int n = 0, t = 1;
  std::string check;   // leaf_colon | powers_reduce | rhs
  std::string detail;  // which leaf / which (M, y)
  bool holds = false;
};

/// Deterministic random forest for campaign instance `instance`:
/// p <= max_components tree components, >= 2 vertices each, at most
/// max_vertices non-isolated vertices, sometimes one isolated vertex.
Forest random_forest(std::uint64_t seed, long instance, int max_vertices,
                     int max_components);

/// Bound-vs-oracle verification on `count` random forests at t = 1..max_power.
/// Budget-exceeded rows are marked, not failed. Rows ordered by (instance, t).
std::vector<VerdictRow> run_verify_campaign(const CampaignConfig& config);

/// Identity checks (leaf colon, path power reduction, colon/deletion swap) on
/// random trees. Rows ordered deterministically.
std::vector<IdentityRow> run_identities_campaign(const CampaignConfig& config);

std::string to_tsv(const std::vector<VerdictRow>& rows);
std::string to_tsv(const std::vector<IdentityRow>& rows);

/// Full JSON documents: config echo, summary counts, and all rows.
std::string to_json(const CampaignConfig& config, const std::vector<VerdictRow>& rows);
std::string to_json(const CampaignConfig& config, const std::vector<IdentityRow>& rows);

/// JSON sidecar: config echo plus pass/fail summary counts.
std::string campaign_sidecar_json(const CampaignConfig& config, long total_rows,
                                  long failed_rows, long budget_exceeded_rows);

}  // namespace eidepth
