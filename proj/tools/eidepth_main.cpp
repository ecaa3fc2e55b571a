// eidepth: depths of powers of edge ideals of forests, exact and desk-scale.
//
// Subcommands: depth, bounds, verify, identities, ass, paper-examples.
// Exit codes: 0 all checks hold, 1 a mathematical assertion failed,
// 2 usage or parse error, 3 budget exceeded in a mandatory check.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eidepth/bounds.hpp"
#include "eidepth/campaign.hpp"
#include "eidepth/depth_oracle.hpp"
#include "eidepth/field.hpp"
#include "eidepth/forest.hpp"
#include "eidepth/ideal.hpp"
#include "eidepth/primes.hpp"
#include "eidepth/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::string field = "Q";
  long long budget = eidepth::OracleOptions{}.candidate_budget;
  std::string out;
  std::string format = "tsv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--field", opts.field, "coefficient field: Q, F2 or Fp:P")
      ->default_val("Q");
  cmd->add_option("--budget", opts.budget, "candidate-degree cap for the oracle")
      ->default_val(eidepth::OracleOptions{}.candidate_budget);
  cmd->add_option("--out", opts.out, "write the report here instead of stdout");
  cmd->add_option("--format", opts.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->default_val("tsv");
}

eidepth::OracleOptions oracle_options(const CommonOpts& opts) {
  eidepth::OracleOptions o;
  o.candidate_budget = opts.budget;
  return o;
}

void emit(const CommonOpts& opts, const std::string& body,
          const std::string& sidecar = "") {
  if (opts.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(opts.out);
    if (!f) throw std::invalid_argument("cannot write output file: " + opts.out);
    f << body;
    if (!sidecar.empty()) {
      std::ofstream meta(opts.out + ".meta.json");
      meta << sidecar;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"depths of powers of edge ideals of forests (exact arithmetic)"};
  app.require_subcommand(1);

  // ---- depth ----
  auto* depth_cmd = app.add_subcommand("depth", "oracle depth of R/I(G)^t");
  std::string depth_graph;
  int depth_t = 1;
  bool depth_serial = false;
  std::string betti_out;
  CommonOpts depth_opts;
  depth_cmd->add_option("--graph", depth_graph, "edge-list file")->required();
  depth_cmd->add_option("--t", depth_t, "power")->default_val(1);
  depth_cmd->add_flag("--serial", depth_serial, "run the serial reference kernel");
  depth_cmd->add_option("--betti-out", betti_out, "dump the Betti table as TSV");
  add_common(depth_cmd, depth_opts);

  // ---- bounds ----
  auto* bounds_cmd = app.add_subcommand("bounds", "bound table for a forest");
  std::string bounds_graph;
  int bounds_tmax = 1;
  bool bounds_no_oracle = false;
  CommonOpts bounds_opts;
  bounds_cmd->add_option("--graph", bounds_graph, "edge-list file")->required();
  bounds_cmd->add_option("--t-max", bounds_tmax, "largest power")->default_val(1);
  bounds_cmd->add_flag("--no-oracle", bounds_no_oracle, "skip the oracle column");
  add_common(bounds_cmd, bounds_opts);

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "bound-vs-oracle campaign on random forests");
  eidepth::CampaignConfig verify_config;
  CommonOpts verify_opts;
  verify_cmd->add_option("--seed", verify_config.seed, "campaign seed")->default_val(1);
  verify_cmd->add_option("--count", verify_config.count, "instances")->default_val(100);
  verify_cmd->add_option("--max-vertices", verify_config.max_vertices,
                         "non-isolated vertex cap")->default_val(8);
  verify_cmd->add_option("--max-components", verify_config.max_components, "p cap")
      ->default_val(3);
  verify_cmd->add_option("--max-power", verify_config.max_power, "t cap")->default_val(2);
  verify_cmd->add_flag("--compare-f2", verify_config.compare_char2,
                       "also run over GF(2) and log depths that differ");
  add_common(verify_cmd, verify_opts);

  // ---- identities ----
  auto* ident_cmd = app.add_subcommand("identities", "exact ideal-identity campaign on random trees");
  eidepth::CampaignConfig ident_config;
  CommonOpts ident_opts;
  ident_cmd->add_option("--seed", ident_config.seed, "campaign seed")->default_val(1);
  ident_cmd->add_option("--count", ident_config.count, "instances")->default_val(200);
  ident_cmd->add_option("--max-vertices", ident_config.max_vertices, "tree size cap")
      ->default_val(12);
  ident_cmd->add_option("--max-power", ident_config.max_power, "t cap")->default_val(4);
  add_common(ident_cmd, ident_opts);

  // ---- ass ----
  auto* ass_cmd = app.add_subcommand("ass", "associated primes of powers");
  std::string ass_graph;
  int ass_tmax = 1;
  CommonOpts ass_opts;
  ass_cmd->add_option("--graph", ass_graph, "edge-list file")->required();
  ass_cmd->add_option("--t-max", ass_tmax, "largest power")->default_val(1);
  add_common(ass_cmd, ass_opts);

  // ---- paper-examples ----
  auto* ex_cmd = app.add_subcommand("paper-examples",
                                    "bound-vs-depth tables for the bundled example trees");
  CommonOpts ex_opts;
  add_common(ex_cmd, ex_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*depth_cmd) {
      const auto field = eidepth::parse_field(depth_opts.field);
      const auto f = eidepth::parse_edge_list_file(depth_graph);
      auto options = oracle_options(depth_opts);
      options.parallel = !depth_serial;
      const auto ideal = eidepth::power(eidepth::edge_ideal(f), depth_t);
      eidepth::DepthResult result;
      if (!betti_out.empty() && !ideal.is_zero()) {
        const auto table = eidepth::multigraded_betti(ideal, field, options);
        std::ofstream bf(betti_out);
        bf << table.to_tsv();
        const int pd = table.projective_dimension();
        result = {ideal.context().num_vars - pd, pd, field, table.witness_degree()};
      } else {
        result = eidepth::depth_of_quotient(ideal, field, options);
      }
      std::string body;
      if (depth_opts.format == "json") {
        nlohmann::json j{{"graph_hash", eidepth::graph_hash(f)},
                         {"t", depth_t},
                         {"depth", result.depth},
                         {"projective_dimension", result.projective_dimension},
                         {"field", field.name()},
                         {"min_gens", ideal.num_gens()}};
        body = j.dump(2) + "\n";
      } else {
        std::ostringstream os;
        os << "graph\t" << eidepth::graph_hash(f) << "\n"
           << "t\t" << depth_t << "\n"
           << "depth\t" << result.depth << "\n"
           << "projective_dimension\t" << result.projective_dimension << "\n"
           << "field\t" << field.name() << "\n"
           << "min_gens\t" << ideal.num_gens() << "\n";
        body = os.str();
      }
      emit(depth_opts, body);
      return kExitOk;
    }

    if (*bounds_cmd) {
      const auto field = eidepth::parse_field(bounds_opts.field);
      const auto f = eidepth::parse_edge_list_file(bounds_graph);
      const auto report = eidepth::bound_report(f, bounds_tmax, field,
                                                oracle_options(bounds_opts),
                                                !bounds_no_oracle);
      emit(bounds_opts, bounds_opts.format == "json" ? to_json(report) : to_tsv(report));
      // oracle rows never contradict the bounds by construction; still, honor
      // the exit contract if a filled row were to do so
      for (const auto& row : report.rows)
        if (row.oracle_depth && !report.edgeless &&
            (*row.oracle_depth < row.forest_lb || *row.oracle_depth > row.dim_ub))
          return kExitAssertionFailed;
      return kExitOk;
    }

    if (*verify_cmd) {
      verify_config.field = eidepth::parse_field(verify_opts.field);
      verify_config.budget = verify_opts.budget;
      verify_config.mode = "bounds";
      const auto rows = eidepth::run_verify_campaign(verify_config);
      long failed = 0, exceeded = 0;
      for (const auto& row : rows) {
        if (!row.passed()) ++failed;
        if (row.budget_exceeded) ++exceeded;
      }
      const auto sidecar = eidepth::campaign_sidecar_json(
          verify_config, static_cast<long>(rows.size()), failed, exceeded);
      if (verify_opts.format == "json")
        emit(verify_opts, to_json(verify_config, rows));
      else
        emit(verify_opts, to_tsv(rows), sidecar);
      return failed == 0 ? kExitOk : kExitAssertionFailed;
    }

    if (*ident_cmd) {
      ident_config.field = eidepth::parse_field(ident_opts.field);
      ident_config.budget = ident_opts.budget;
      ident_config.mode = "identities";
      const auto rows = eidepth::run_identities_campaign(ident_config);
      long failed = 0;
      for (const auto& row : rows)
        if (!row.holds) ++failed;
      const auto sidecar = eidepth::campaign_sidecar_json(
          ident_config, static_cast<long>(rows.size()), failed, 0);
      if (ident_opts.format == "json")
        emit(ident_opts, to_json(ident_config, rows));
      else
        emit(ident_opts, to_tsv(rows), sidecar);
      return failed == 0 ? kExitOk : kExitAssertionFailed;
    }

    if (*ass_cmd) {
      const auto field = eidepth::parse_field(ass_opts.field);
      const auto f = eidepth::parse_edge_list_file(ass_graph);
      const auto report = eidepth::ass_report(f, ass_tmax, field, oracle_options(ass_opts));
      emit(ass_opts, ass_opts.format == "json" ? to_json(report) : to_tsv(report));
      for (const auto& row : report.rows)
        if (!row.depth_zero_cross_check) return kExitAssertionFailed;
      return kExitOk;
    }

    if (*ex_cmd) {
      const auto field = eidepth::parse_field(ex_opts.field);
      const auto report = eidepth::examples_report(field, oracle_options(ex_opts));
      emit(ex_opts, ex_opts.format == "json" ? to_json(report) : to_tsv(report));
      return kExitOk;
    }
  } catch (const eidepth::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitAssertionFailed;
  }
  return kExitUsage;
}
