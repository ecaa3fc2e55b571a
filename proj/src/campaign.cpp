#include "eidepth/campaign.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "eidepth/bounds.hpp"
#include "eidepth/ideal.hpp"
#include "eidepth/primes.hpp"

namespace eidepth {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, long instance) {
  std::uint64_t x = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(instance);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  return x;
}

int pick(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Forest random_forest(std::uint64_t seed, long instance, int max_vertices,
                     int max_components) {
  std::mt19937_64 rng(mix_seed(seed, instance));
  const int p = std::max(1, std::min(pick(rng, 1, max_components), max_vertices / 2));
  // sizes >= 2 each, total <= max_vertices
  std::vector<int> sizes(static_cast<size_t>(p), 2);
  int spare = max_vertices - 2 * p;
  for (int i = 0; i < p && spare > 0; ++i) {
    const int extra = pick(rng, 0, spare);
    sizes[static_cast<size_t>(i)] += extra;
    spare -= extra;
  }
  const int isolated = pick(rng, 0, 1);
  std::vector<std::pair<int, int>> edges;
  int offset = 0;
  for (int i = 0; i < p; ++i) {
    const Forest tree = random_tree(sizes[static_cast<size_t>(i)], rng());
    for (auto [u, v] : tree.edges) edges.push_back({u + offset, v + offset});
    offset += sizes[static_cast<size_t>(i)];
  }
  return Forest::from_edge_list(edges, offset + isolated);
}

std::vector<VerdictRow> run_verify_campaign(const CampaignConfig& config) {
  OracleOptions options;
  options.candidate_budget = config.budget;
  std::vector<VerdictRow> rows;

#pragma omp parallel for schedule(dynamic) if (config.count > 1)
  for (long instance = 0; instance < config.count; ++instance) {
    const Forest f =
        random_forest(config.seed, instance, config.max_vertices, config.max_components);
    const ForestStats s = stats(f);
    const auto [height, unused_unmixed] = height_and_unmixed(f);
    std::vector<VerdictRow> local;
    for (int t = 1; t <= config.max_power; ++t) {
      VerdictRow row;
      row.instance = instance;
      row.graph_hash = graph_hash(f);
      row.n = f.num_vertices;
      row.d = s.d.value_or(0);
      row.p = s.p;
      row.q = s.q.value_or(0);
      row.t = t;
      row.forest_lb = forest_lb(row.d, row.p, t);
      row.bonus_lb = forest_bonus_lb(row.d, row.p, row.q, t);
      row.dim_ub = row.n - height;
      try {
        row.oracle_depth = depth_of_power(f, t, config.field, options).depth;
        row.checks.push_back({"forest_lb<=depth", row.forest_lb <= *row.oracle_depth});
        row.checks.push_back({"bonus_lb<=depth", row.bonus_lb <= *row.oracle_depth});
        row.checks.push_back({"depth<=dim_ub", *row.oracle_depth <= row.dim_ub});
        row.checks.push_back({"depth>=p", *row.oracle_depth >= row.p});
        if (config.compare_char2 && config.field.characteristic != 2) {
          const int depth_f2 =
              depth_of_power(f, t, FieldSpec::prime_field(2), options).depth;
          if (depth_f2 != *row.oracle_depth)
            row.notes.push_back("char-dependent: depth over F2 is " +
                                std::to_string(depth_f2));
        }
      } catch (const BudgetExceeded&) {
        row.budget_exceeded = true;
      }
      if (row.q >= 2)
        row.checks.push_back({"bonus>=forest(q>=2)", row.bonus_lb >= row.forest_lb});
      local.push_back(std::move(row));
    }
#pragma omp critical
    rows.insert(rows.end(), local.begin(), local.end());
  }

  std::sort(rows.begin(), rows.end(), [](const VerdictRow& a, const VerdictRow& b) {
    return std::tie(a.instance, a.t) < std::tie(b.instance, b.t);
  });
  return rows;
}

std::vector<IdentityRow> run_identities_campaign(const CampaignConfig& config) {
  std::vector<IdentityRow> rows;

#pragma omp parallel for schedule(dynamic) if (config.count > 1)
  for (long instance = 0; instance < config.count; ++instance) {
    std::mt19937_64 rng(mix_seed(config.seed ^ 0x1dful, instance));
    std::vector<IdentityRow> local;

    // leaf colon: (I^t : xy) = I^{t-1} for a random tree, leaf and t >= 2
    {
      const int n = pick(rng, 2, config.max_vertices);
      const Forest tree = random_tree(n, rng());
      std::vector<int> leaves;
      for (int v = 1; v <= n; ++v)
        if (tree.is_leaf(v)) leaves.push_back(v);
      const int leaf = leaves[static_cast<size_t>(pick(rng, 0, static_cast<int>(leaves.size()) - 1))];
      const int t = pick(rng, 2, std::max(2, config.max_power));
      IdentityRow row;
      row.instance = instance;
      row.graph_hash = graph_hash(tree);
      row.n = n;
      row.t = t;
      row.check = "leaf_colon";
      row.detail = "leaf=x" + std::to_string(leaf);
      row.holds = check_leaf_colon_identity(tree, leaf, t);
      local.push_back(std::move(row));
    }

    // path power reduction: (P_n^t : x_{n-1} x_n) = P_n^{t-1}
    {
      const int n = pick(rng, 2, config.max_vertices);
      const int t = pick(rng, 2, std::max(2, config.max_power));
      const Forest path = path_graph(n);
      IdentityRow row;
      row.instance = instance;
      row.graph_hash = graph_hash(path);
      row.n = n;
      row.t = t;
      row.check = "powers_reduce";
      row.detail = "path";
      row.holds = check_leaf_colon_identity(path, n, t);
      local.push_back(std::move(row));
    }

    // colon/deletion swap: ((I^t : M), y) = ((K^t : M), y), K = I with y = 0
    {
      const int n = pick(rng, 3, config.max_vertices);
      const Forest tree = random_tree(n, rng());
      const MonomialIdeal ideal = edge_ideal(tree);
      const int y = pick(rng, 1, n);
      Monomial m = Monomial::one(n);
      const int factors = pick(rng, 0, 3);
      for (int i = 0; i < factors; ++i) {
        int v = pick(rng, 1, n);
        if (v == y) continue;
        m.exp[static_cast<size_t>(v) - 1] += pick(rng, 1, 2);
      }
      const int t = pick(rng, 1, std::min(3, config.max_power));
      IdentityRow row;
      row.instance = instance;
      row.graph_hash = graph_hash(tree);
      row.n = n;
      row.t = t;
      row.check = "rhs";
      row.detail = "M=" + to_string(m, ideal.context()) + ",y=x" + std::to_string(y);
      row.holds = check_rhs_identity(ideal, m, y, t);
      local.push_back(std::move(row));
    }

#pragma omp critical
    rows.insert(rows.end(), local.begin(), local.end());
  }

  std::sort(rows.begin(), rows.end(), [](const IdentityRow& a, const IdentityRow& b) {
    return std::tie(a.instance, a.check) < std::tie(b.instance, b.check);
  });
  return rows;
}

std::string to_tsv(const std::vector<VerdictRow>& rows) {
  std::ostringstream out;
  out << "instance\tgraph\tn\td\tp\tq\tt\tforest_lb\tbonus_lb\tdim_ub\toracle_depth"
      << "\tverdict\tnotes\n";
  for (const auto& row : rows) {
    out << row.instance << '\t' << row.graph_hash << '\t' << row.n << '\t' << row.d << '\t'
        << row.p << '\t' << row.q << '\t' << row.t << '\t' << row.forest_lb << '\t'
        << row.bonus_lb << '\t' << row.dim_ub << '\t';
    if (row.oracle_depth)
      out << *row.oracle_depth;
    else
      out << (row.budget_exceeded ? "budget-exceeded" : "-");
    out << '\t';
    if (row.passed())
      out << "pass";
    else {
      out << "FAIL:";
      for (const auto& c : row.checks)
        if (!c.holds) out << ' ' << c.name;
    }
    out << '\t';
    if (row.notes.empty())
      out << '-';
    else
      for (size_t i = 0; i < row.notes.size(); ++i) out << (i ? "; " : "") << row.notes[i];
    out << '\n';
  }
  return out.str();
}

std::string to_tsv(const std::vector<IdentityRow>& rows) {
  std::ostringstream out;
  out << "instance\tgraph\tn\tt\tcheck\tdetail\tverdict\n";
  for (const auto& row : rows)
    out << row.instance << '\t' << row.graph_hash << '\t' << row.n << '\t' << row.t << '\t'
        << row.check << '\t' << row.detail << '\t' << (row.holds ? "pass" : "FAIL") << '\n';
  return out.str();
}

namespace {

nlohmann::json config_json(const CampaignConfig& config) {
  return {{"seed", config.seed},
          {"count", config.count},
          {"max_vertices", config.max_vertices},
          {"max_components", config.max_components},
          {"max_power", config.max_power},
          {"field", config.field.name()},
          {"budget", config.budget},
          {"mode", config.mode}};
}

}  // namespace

std::string to_json(const CampaignConfig& config, const std::vector<VerdictRow>& rows) {
  nlohmann::json out{{"config", config_json(config)}};
  long failed = 0, exceeded = 0;
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    if (!row.passed()) ++failed;
    if (row.budget_exceeded) ++exceeded;
    nlohmann::json j{{"instance", row.instance}, {"graph", row.graph_hash},
                     {"n", row.n},           {"d", row.d},
                     {"p", row.p},           {"q", row.q},
                     {"t", row.t},           {"forest_lb", row.forest_lb},
                     {"bonus_lb", row.bonus_lb}, {"dim_ub", row.dim_ub},
                     {"pass", row.passed()}};
    if (row.oracle_depth)
      j["oracle_depth"] = *row.oracle_depth;
    else if (row.budget_exceeded)
      j["oracle_depth"] = "budget-exceeded";
    if (!row.notes.empty()) j["notes"] = row.notes;
    jrows.push_back(j);
  }
  out["rows"] = jrows;
  out["summary"] = {{"rows", rows.size()}, {"failed", failed}, {"budget_exceeded", exceeded}};
  return out.dump(2) + "\n";
}

std::string to_json(const CampaignConfig& config, const std::vector<IdentityRow>& rows) {
  nlohmann::json out{{"config", config_json(config)}};
  long failed = 0;
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    if (!row.holds) ++failed;
    jrows.push_back({{"instance", row.instance},
                     {"graph", row.graph_hash},
                     {"n", row.n},
                     {"t", row.t},
                     {"check", row.check},
                     {"detail", row.detail},
                     {"pass", row.holds}});
  }
  out["rows"] = jrows;
  out["summary"] = {{"rows", rows.size()}, {"failed", failed}};
  return out.dump(2) + "\n";
}

std::string campaign_sidecar_json(const CampaignConfig& config, long total_rows,
                                  long failed_rows, long budget_exceeded_rows) {
  return nlohmann::json{{"config", config_json(config)},
                        {"summary",
                         {{"rows", total_rows},
                          {"failed", failed_rows},
                          {"budget_exceeded", budget_exceeded_rows}}}}
             .dump(2) +
         "\n";
}

}  // namespace eidepth
