#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eidepth/bounds.hpp"
#include "eidepth/depth_oracle.hpp"
#include "eidepth/forest.hpp"
#include "eidepth/primes.hpp"

namespace eidepth {

/// One row of a bound report: every closed-form bound at power t, next to the
/// oracle depth when it was computed.
struct BoundReportRow {
  int t = 1;
  std::optional<int> path_exact;  // only when the graph is a single path, t = 1
  int tree_lb = 0;
  int forest_lb = 0;
  int bonus_lb = 0;
  int bipartite_lb = 0;
  int dim_ub = 0;
  int stabilized_depth = 0;
  int onset_lb = 0;
  std::optional<int> oracle_depth;
  bool budget_exceeded = false;
  bool degenerate_small_diameter = false;  // d <= 3: near-leaf count conventions are loose
};

struct BoundReport {
  std::string graph_hash;
  std::string field;
  int n = 0;
  int d = 0;
  int p = 0;
  int q = 0;
  int isolated = 0;
  int height = 0;
  bool edgeless = false;
  std::vector<BoundReportRow> rows;
};

/// Bound table for a forest, one row per t in [1..t_max]. The oracle column
/// is filled when with_oracle is set and the instance fits the budget.
BoundReport bound_report(const Forest& f, int t_max, const FieldSpec& k,
                         const OracleOptions& options, bool with_oracle = true);

/// Associated-prime report for a graph: Ass(R/I^t) per power, torsion-free
/// verdict, and the "maximal ideal associated iff depth zero" cross-check.
struct AssRow {
  int t = 1;
  std::vector<std::string> primes;
  bool equals_min = false;
  bool max_ideal_associated = false;
  std::optional<int> oracle_depth;
  bool budget_exceeded = false;
  bool depth_zero_cross_check = false;  // (m associated) == (oracle depth 0)
};

struct AssReport {
  std::string graph_hash;
  int n = 0;
  bool bipartite = false;
  int height = 0;
  bool unmixed = false;
  bool torsion_free = false;  // Ass(R/I^t) = Min(R/I) for all reported t
  std::vector<std::string> min_primes;
  std::vector<AssRow> rows;
};

AssReport ass_report(const Forest& g, int t_max, const FieldSpec& k,
                     const OracleOptions& options);

/// The two bundled example trees: an 11-vertex spider (diameter 4, five near
/// leaves) and a 9-vertex caterpillar (diameter 6, three near leaves).
Forest example_spider11();
Forest example_caterpillar9();

/// One row of the bundled-examples report.
struct ExampleRow {
  std::string graph;  // "spider11" | "caterpillar9"
  int t = 1;
  int bonus_lb = 0;
  std::optional<int> oracle_depth;
  bool out_of_desk_scale = false;
  std::optional<bool> agrees;  // bound == depth, when the oracle ran
};

struct ExamplesReport {
  BoundReport spider11;
  BoundReport caterpillar9;
  std::vector<ExampleRow> rows;
};

/// Reproduces the bound-vs-depth tables for the bundled trees at t = 1..6.
/// The spider is evaluated by the oracle at t = 1 only and the caterpillar at
/// t <= 3; larger powers are reported as out of desk scale, not computed.
ExamplesReport examples_report(const FieldSpec& k, const OracleOptions& options);

std::string to_tsv(const BoundReport& r);
std::string to_tsv(const AssReport& r);
std::string to_tsv(const ExamplesReport& r);
std::string to_json(const BoundReport& r);
std::string to_json(const AssReport& r);
std::string to_json(const ExamplesReport& r);

}  // namespace eidepth
