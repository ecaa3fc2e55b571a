#include "eidepth/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace eidepth {

namespace {

bool is_single_path(const Forest& f, const ForestStats& s) {
  if (s.p != 1 || !s.isolated_vertices.empty()) return false;
  for (int v = 1; v <= f.num_vertices; ++v)
    if (f.degree(v) > 2) return false;
  return true;
}

std::string cell(const std::optional<int>& v, bool budget_exceeded) {
  if (v) return std::to_string(*v);
  return budget_exceeded ? "budget-exceeded" : "-";
}

}  // namespace

BoundReport bound_report(const Forest& f, int t_max, const FieldSpec& k,
                         const OracleOptions& options, bool with_oracle) {
  if (t_max < 1) throw std::invalid_argument("bound_report: t_max must be >= 1");
  const ForestStats s = stats(f);

  BoundReport r;
  r.graph_hash = graph_hash(f);
  r.field = k.name();
  r.n = f.num_vertices;
  r.p = s.p;
  r.d = s.d.value_or(0);
  r.q = s.q.value_or(0);
  r.isolated = static_cast<int>(s.isolated_vertices.size());
  r.height = height_and_unmixed(f).first;
  r.edgeless = (s.p == 0);

  const bool path = is_single_path(f, s);

  for (int t = 1; t <= t_max; ++t) {
    BoundReportRow row;
    row.t = t;
    if (r.edgeless) {
      // pure polynomial ring: depth is the ambient variable count at every power
      row.tree_lb = row.forest_lb = row.bonus_lb = row.bipartite_lb = r.n;
      row.dim_ub = r.n;
      row.stabilized_depth = r.n;
      row.onset_lb = 1;
    } else {
      if (path && t == 1) row.path_exact = path_depth_exact(r.n);
      const BoundValues v =
          evaluate_bounds(BoundInput{r.n, r.d, r.p, r.q, t, r.isolated});
      row.tree_lb = v.tree_lb;
      row.forest_lb = v.forest_lb;
      row.bonus_lb = v.bonus_lb;
      row.bipartite_lb = v.bipartite_lb;
      row.dim_ub = r.n - r.height;
      row.stabilized_depth = v.stabilized;
      row.onset_lb = v.onset_lb;
      row.degenerate_small_diameter = (r.d <= 3);
    }
    if (with_oracle) {
      try {
        row.oracle_depth = depth_of_power(f, t, k, options).depth;
      } catch (const BudgetExceeded&) {
        row.budget_exceeded = true;
      }
    }
    r.rows.push_back(row);
  }
  return r;
}

AssReport ass_report(const Forest& g, int t_max, const FieldSpec& k,
                     const OracleOptions& options) {
  if (t_max < 1) throw std::invalid_argument("ass_report: t_max must be >= 1");
  const MonomialIdeal ideal = edge_ideal(g);
  if (ideal.is_zero()) throw std::invalid_argument("ass_report: graph has no edges");

  AssReport r;
  r.graph_hash = graph_hash(g);
  r.n = g.num_vertices;
  r.bipartite = bipartition(g).bipartite;
  auto [height, unmixed] = height_and_unmixed(g);
  r.height = height;
  r.unmixed = unmixed;

  const auto min_set = minimal_primes(ideal);
  for (const auto& p : min_set) r.min_primes.push_back(to_string(p, ideal.context()));

  const MonomialPrime maximal{[&] {
    std::vector<int> all(static_cast<size_t>(g.num_vertices));
    for (int v = 1; v <= g.num_vertices; ++v) all[static_cast<size_t>(v) - 1] = v;
    return all;
  }()};

  r.torsion_free = true;
  for (int t = 1; t <= t_max; ++t) {
    AssRow row;
    row.t = t;
    const auto ass = associated_primes(power(ideal, t));
    for (const auto& p : ass) row.primes.push_back(to_string(p, ideal.context()));
    row.equals_min = (ass == min_set);
    if (!row.equals_min) r.torsion_free = false;
    row.max_ideal_associated = ass.count(maximal) > 0;
    try {
      row.oracle_depth = depth_of_power(g, t, k, options).depth;
      row.depth_zero_cross_check = (row.max_ideal_associated == (*row.oracle_depth == 0));
    } catch (const BudgetExceeded&) {
      row.budget_exceeded = true;
      row.depth_zero_cross_check = true;  // nothing to compare
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Forest example_spider11() {
  return Forest::from_edge_list({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7},
                                 {3, 8}, {8, 9}, {3, 10}, {10, 11}},
                                11);
}

Forest example_caterpillar9() {
  return Forest::from_edge_list({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                 {4, 8}, {8, 9}},
                                9);
}

ExamplesReport examples_report(const FieldSpec& k, const OracleOptions& options) {
  ExamplesReport r;
  const int t_max = 6;
  // oracle coverage: spider11 only at t = 1, caterpillar9 up to t = 3;
  // beyond that the candidate lattice outgrows a desk-scale run
  auto build = [&](const Forest& f, const std::string& name, int oracle_t_max) {
    BoundReport base = bound_report(f, t_max, k, options, false);
    for (auto& row : base.rows) {
      ExampleRow ex;
      ex.graph = name;
      ex.t = row.t;
      ex.bonus_lb = row.bonus_lb;
      ex.out_of_desk_scale = row.t > oracle_t_max;
      if (!ex.out_of_desk_scale) {
        try {
          row.oracle_depth = depth_of_power(f, row.t, k, options).depth;
          ex.oracle_depth = row.oracle_depth;
          ex.agrees = (*ex.oracle_depth == ex.bonus_lb);
        } catch (const BudgetExceeded&) {
          row.budget_exceeded = true;
          ex.out_of_desk_scale = true;
        }
      }
      r.rows.push_back(ex);
    }
    return base;
  };
  r.spider11 = build(example_spider11(), "spider11", 1);
  r.caterpillar9 = build(example_caterpillar9(), "caterpillar9", 3);
  return r;
}

std::string to_tsv(const BoundReport& r) {
  std::ostringstream out;
  out << "# graph " << r.graph_hash << " field=" << r.field << " n=" << r.n
      << " d=" << r.d << " p=" << r.p << " q=" << r.q << " isolated=" << r.isolated
      << " height=" << r.height << "\n";
  out << "t\tpath_exact\ttree_lb\tforest_lb\tbonus_lb\tbipartite_lb\tdim_ub"
      << "\tstabilized\tonset_lb\toracle_depth\tflags\n";
  for (const auto& row : r.rows) {
    out << row.t << '\t' << cell(row.path_exact, false) << '\t' << row.tree_lb << '\t'
        << row.forest_lb << '\t' << row.bonus_lb << '\t' << row.bipartite_lb << '\t'
        << row.dim_ub << '\t' << row.stabilized_depth << '\t' << row.onset_lb << '\t'
        << cell(row.oracle_depth, row.budget_exceeded) << '\t'
        << (row.degenerate_small_diameter ? "d<=3" : "-") << '\n';
  }
  return out.str();
}

std::string to_tsv(const AssReport& r) {
  std::ostringstream out;
  out << "# graph " << r.graph_hash << " n=" << r.n
      << " bipartite=" << (r.bipartite ? "yes" : "no") << " height=" << r.height
      << " unmixed=" << (r.unmixed ? "yes" : "no")
      << " torsion_free=" << (r.torsion_free ? "yes" : "no") << "\n";
  out << "t\tass\tequals_min\tmax_ideal_associated\toracle_depth\tdepth_zero_cross_check\n";
  for (const auto& row : r.rows) {
    out << row.t << '\t';
    for (size_t i = 0; i < row.primes.size(); ++i) {
      if (i) out << ' ';
      out << '(' << row.primes[i] << ')';
    }
    out << '\t' << (row.equals_min ? "yes" : "no") << '\t'
        << (row.max_ideal_associated ? "yes" : "no") << '\t'
        << cell(row.oracle_depth, row.budget_exceeded) << '\t'
        << (row.depth_zero_cross_check ? "ok" : "FAIL") << '\n';
  }
  return out.str();
}

std::string to_tsv(const ExamplesReport& r) {
  std::ostringstream out;
  auto header = [&](const char* name, const BoundReport& b) {
    out << "# " << name << ": n=" << b.n << " d=" << b.d << " q=" << b.q
        << " p=" << b.p << " height=" << b.height << " field=" << b.field << "\n";
  };
  header("spider11", r.spider11);
  header("caterpillar9", r.caterpillar9);
  out << "graph\tt\tbonus_lb\toracle_depth\tagrees\n";
  for (const auto& row : r.rows) {
    out << row.graph << '\t' << row.t << '\t' << row.bonus_lb << '\t';
    if (row.out_of_desk_scale)
      out << "out-of-desk-scale\t-";
    else
      out << cell(row.oracle_depth, false) << '\t'
          << (row.agrees ? (*row.agrees ? "yes" : "no") : "-");
    out << '\n';
  }
  return out.str();
}

namespace {

nlohmann::json row_json(const BoundReportRow& row) {
  nlohmann::json j{{"t", row.t},
                   {"tree_lb", row.tree_lb},
                   {"forest_lb", row.forest_lb},
                   {"bonus_lb", row.bonus_lb},
                   {"bipartite_lb", row.bipartite_lb},
                   {"dim_ub", row.dim_ub},
                   {"stabilized", row.stabilized_depth},
                   {"onset_lb", row.onset_lb},
                   {"degenerate_small_diameter", row.degenerate_small_diameter}};
  if (row.path_exact) j["path_exact"] = *row.path_exact;
  if (row.oracle_depth)
    j["oracle_depth"] = *row.oracle_depth;
  else if (row.budget_exceeded)
    j["oracle_depth"] = "budget-exceeded";
  return j;
}

nlohmann::json report_json(const BoundReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) rows.push_back(row_json(row));
  return nlohmann::json{{"graph_hash", r.graph_hash},
                        {"field", r.field},
                        {"n", r.n},
                        {"d", r.d},
                        {"p", r.p},
                        {"q", r.q},
                        {"isolated", r.isolated},
                        {"height", r.height},
                        {"edgeless", r.edgeless},
                        {"rows", rows}};
}

}  // namespace

std::string to_json(const BoundReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const AssReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j{{"t", row.t},
                     {"ass", row.primes},
                     {"equals_min", row.equals_min},
                     {"max_ideal_associated", row.max_ideal_associated},
                     {"depth_zero_cross_check", row.depth_zero_cross_check}};
    if (row.oracle_depth)
      j["oracle_depth"] = *row.oracle_depth;
    else if (row.budget_exceeded)
      j["oracle_depth"] = "budget-exceeded";
    rows.push_back(j);
  }
  return nlohmann::json{{"graph_hash", r.graph_hash},
                        {"n", r.n},
                        {"bipartite", r.bipartite},
                        {"height", r.height},
                        {"unmixed", r.unmixed},
                        {"torsion_free", r.torsion_free},
                        {"min_primes", r.min_primes},
                        {"rows", rows}}
             .dump(2) +
         "\n";
}

std::string to_json(const ExamplesReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j{{"graph", row.graph}, {"t", row.t}, {"bonus_lb", row.bonus_lb}};
    if (row.out_of_desk_scale)
      j["oracle_depth"] = "out-of-desk-scale";
    else if (row.oracle_depth) {
      j["oracle_depth"] = *row.oracle_depth;
      j["agrees"] = *row.agrees;
    }
    rows.push_back(j);
  }
  return nlohmann::json{{"spider11", report_json(r.spider11)},
                        {"caterpillar9", report_json(r.caterpillar9)},
                        {"rows", rows}}
             .dump(2) +
         "\n";
}

}  // namespace eidepth
