// Command-line front end: solve instances, run the polynomial special-case
// algorithms, generate synthetic elections, build reduction instances,
// export ILP models, run experiment sweeps and plot their results.

#include "isel/exact.hpp"
#include "isel/experiment.hpp"
#include "isel/generators.hpp"
#include "isel/greedy.hpp"
#include "isel/ilp.hpp"
#include "isel/io.hpp"
#include "isel/plot.hpp"
#include "isel/poly.hpp"
#include "isel/rational_text.hpp"
#include "isel/reductions.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace isel;

TieRule tie_from_name(const std::string& name) {
  if (name == "best") return TieRule::BestCase;
  if (name == "worst") return TieRule::WorstCase;
  throw UsageError("tie rule must be best or worst");
}

std::string issues_text(const IssueSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::string votes_text(const Eigen::VectorXi& votes) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < votes.size(); ++i) {
    if (i > 0) os << ' ';
    os << votes[i];
  }
  return os.str();
}

void print_outcome(const SolveOutcome& outcome, const std::string& format) {
  if (format == "csv") {
    std::string issues;
    for (int k : outcome.issue_set.members()) {
      if (!issues.empty()) issues += '+';
      issues += std::to_string(k);
    }
    std::string votes;
    for (Eigen::Index i = 0; i < outcome.votes.size(); ++i) {
      if (!votes.empty()) votes += '+';
      votes += std::to_string(outcome.votes[i]);
    }
    std::cout << issues << ',' << votes << ',' << outcome.target_support << ','
              << (outcome.target_wins ? 1 : 0) << '\n';
    return;
  }
  std::cout << "issues:  " << issues_text(outcome.issue_set) << '\n'
            << "votes:   " << votes_text(outcome.votes) << '\n'
            << "support: " << outcome.target_support << '\n'
            << "wins:    " << (outcome.target_wins ? "yes" : "no") << '\n';
}

struct CommonSolveArgs {
  std::string path;
  std::string tie = "worst";
  int p = 0;  // 0 = take p from the instance file
  int cap = 25;
  std::string format = "text";

  NormOrder norm(const ElectionFile& file) const {
    return p > 0 ? NormOrder{p} : file.norm;
  }
};

void add_common(CLI::App* cmd, CommonSolveArgs* args) {
  cmd->add_option("instance", args->path, "election instance file (JSON)")
      ->required();
  cmd->add_option("--tie", args->tie, "tie rule: best|worst");
  cmd->add_option("--p", args->p, "override the instance's norm order");
  cmd->add_option("--cap", args->cap, "enumeration cap (issues)");
  cmd->add_option("--format", args->format, "output format: text|csv");
}

int run(int argc, char** argv) {
  CLI::App app{
      "Election control through issue selection: exact, polynomial, "
      "approximate and heuristic solvers in the spatial voting model"};
  app.require_subcommand(1);

  // solve -------------------------------------------------------------------
  CommonSolveArgs solve_args;
  std::string solve_solver = "exhaustive";
  std::string solve_export_lp;
  auto* solve_cmd =
      app.add_subcommand("solve", "solve one instance with a chosen solver");
  add_common(solve_cmd, &solve_args);
  solve_cmd->add_option("--solver", solve_solver,
                        "exhaustive|greedy|best_single_issue");
  solve_cmd->add_option("--export-lp", solve_export_lp,
                        "also write the 0-1 model in LP format");

  // maxsupport ----------------------------------------------------------------
  CommonSolveArgs max_args;
  std::string max_export_lp;
  auto* max_cmd = app.add_subcommand(
      "maxsupport", "exhaustive Max Support optimum for one instance");
  add_common(max_cmd, &max_args);
  max_cmd->add_option("--export-lp", max_export_lp,
                      "also write the 0-1 model in LP format");

  // poly ----------------------------------------------------------------------
  CommonSolveArgs poly_args;
  std::string poly_algorithm;
  auto* poly_cmd = app.add_subcommand(
      "poly", "polynomial special-case algorithms for binary elections");
  add_common(poly_cmd, &poly_args);
  poly_cmd
      ->add_option("--algorithm", poly_algorithm,
                   "siw|aoi|2v-bc|2v-wc|3v-wc|bsi")
      ->required();

  // greedy ----------------------------------------------------------------------
  CommonSolveArgs greedy_args;
  auto* greedy_cmd =
      app.add_subcommand("greedy", "greedy Max Support heuristic");
  add_common(greedy_cmd, &greedy_args);

  // generate ------------------------------------------------------------------
  std::string gen_kind = "gaussian";
  GenConfig gen_cfg;
  int gen_p = 2;
  std::string gen_out;
  auto* gen_cmd =
      app.add_subcommand("generate", "write a synthetic election instance");
  gen_cmd->add_option("--kind", gen_kind, "gaussian|tree");
  gen_cmd->add_option("--m", gen_cfg.m, "candidates");
  gen_cmd->add_option("--n", gen_cfg.n, "voters");
  gen_cmd->add_option("--l", gen_cfg.l, "issues");
  gen_cmd->add_option("--seed", gen_cfg.seed, "generator seed");
  gen_cmd->add_option("--p", gen_p, "norm order stored in the instance");
  gen_cmd->add_option("--out", gen_out, "output instance file")->required();

  // reduce ----------------------------------------------------------------------
  std::string reduce_from, reduce_in, reduce_out;
  std::string reduce_to = "svis";
  std::string reduce_lift = "none";
  int reduce_realize_p = 0;
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "build a margin/election instance from a source problem");
  reduce_cmd
      ->add_option("--from", reduce_from, "ilp|mis|x3c|hittingset")
      ->required();
  reduce_cmd->add_option("--to", reduce_to,
                         "ilp target shape: svis (single voter) | tcis "
                         "(two candidates)");
  reduce_cmd->add_option("--lift", reduce_lift,
                         "none|worstcase (margin reductions only)");
  reduce_cmd->add_option("--realize", reduce_realize_p,
                         "also realize positions for this norm order");
  reduce_cmd->add_option("--in", reduce_in, "source instance file")->required();
  reduce_cmd->add_option("--out", reduce_out, "output file")->required();

  // export-lp ----------------------------------------------------------------
  CommonSolveArgs lp_args;
  std::string lp_out;
  auto* lp_cmd = app.add_subcommand(
      "export-lp", "write the Max Support 0-1 model in LP format");
  add_common(lp_cmd, &lp_args);
  lp_cmd->add_option("--out", lp_out, "output .lp file")->required();

  // experiment ----------------------------------------------------------------
  std::string exp_config;
  std::string exp_generator, exp_sweep, exp_tie, exp_solvers, exp_values;
  std::optional<Index> exp_m, exp_n, exp_l;
  std::optional<int> exp_instances, exp_p, exp_cap;
  std::optional<std::uint64_t> exp_seed;
  bool exp_timings = false;
  std::string exp_out;
  auto* exp_cmd = app.add_subcommand(
      "experiment", "run a sweep comparing solvers on generated instances");
  exp_cmd->add_option("--config", exp_config, "JSON config file");
  exp_cmd->add_option("--generator", exp_generator, "gaussian|tree");
  exp_cmd->add_option("--m", exp_m, "fixed candidate count");
  exp_cmd->add_option("--n", exp_n, "fixed voter count");
  exp_cmd->add_option("--l", exp_l, "fixed issue count");
  exp_cmd->add_option("--sweep", exp_sweep, "swept parameter: m|n|l");
  exp_cmd->add_option("--values", exp_values, "comma-separated sweep values");
  exp_cmd->add_option("--instances", exp_instances, "instances per point");
  exp_cmd->add_option("--p", exp_p, "norm order");
  exp_cmd->add_option("--tie", exp_tie, "best|worst");
  exp_cmd->add_option("--seed", exp_seed, "base seed");
  exp_cmd->add_option("--solvers", exp_solvers,
                      "comma-separated solver list");
  exp_cmd->add_option("--cap", exp_cap, "enumeration cap");
  exp_cmd->add_flag("--timings", exp_timings, "record wall-clock millis");
  exp_cmd->add_option("--out", exp_out, "output CSV file")->required();

  // plot ----------------------------------------------------------------------
  std::string plot_csv, plot_prefix;
  auto* plot_cmd =
      app.add_subcommand("plot", "render experiment CSV as SVG plots");
  plot_cmd->add_option("--csv", plot_csv, "experiment CSV file")->required();
  plot_cmd->add_option("--out-prefix", plot_prefix, "output path prefix")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    const ElectionFile file = read_election_file(solve_args.path);
    const NormOrder norm = solve_args.norm(file);
    const TieRule tie = tie_from_name(solve_args.tie);
    const EnumLimits limits{solve_args.cap};
    if (!solve_export_lp.empty())
      write_text_file(solve_export_lp, export_ilp(file.election, norm).text);
    SolveOutcome outcome = [&] {
      if (solve_solver == "exhaustive")
        return solve_maxsupport_exhaustive(file.election, norm, tie, limits);
      if (solve_solver == "greedy")
        return greedy_max_support(file.election, norm, tie);
      if (solve_solver == "best_single_issue" || solve_solver == "bsi")
        return best_single_issue(file.election, norm, tie);
      throw UsageError("unknown solver: " + solve_solver);
    }();
    print_outcome(outcome, solve_args.format);
    return 0;
  }

  if (max_cmd->parsed()) {
    const ElectionFile file = read_election_file(max_args.path);
    const NormOrder norm = max_args.norm(file);
    const TieRule tie = tie_from_name(max_args.tie);
    if (!max_export_lp.empty())
      write_text_file(max_export_lp, export_ilp(file.election, norm).text);
    print_outcome(solve_maxsupport_exhaustive(file.election, norm, tie,
                                              EnumLimits{max_args.cap}),
                  max_args.format);
    return 0;
  }

  if (poly_cmd->parsed()) {
    const ElectionFile file = read_election_file(poly_args.path);
    const TieRule tie = tie_from_name(poly_args.tie);
    if (poly_algorithm == "bsi") {
      print_outcome(
          best_single_issue(file.election, poly_args.norm(file), tie),
          poly_args.format);
      return 0;
    }
    const PolyAnswer answer = [&] {
      if (poly_algorithm == "siw") return single_issue_win(file.election);
      if (poly_algorithm == "aoi") return agree_on_issues(file.election);
      if (poly_algorithm == "2v-bc") return two_voter_best_case(file.election);
      if (poly_algorithm == "2v-wc")
        return two_voter_worst_case(file.election);
      if (poly_algorithm == "3v-wc")
        return three_voter_worst_case(file.election);
      throw UsageError("unknown algorithm: " + poly_algorithm);
    }();
    std::cout << "decision: " << (answer.decision ? "yes" : "no") << '\n';
    if (answer.witness)
      std::cout << "witness:  " << issues_text(*answer.witness) << '\n';
    return 0;
  }

  if (greedy_cmd->parsed()) {
    const ElectionFile file = read_election_file(greedy_args.path);
    print_outcome(greedy_max_support(file.election, greedy_args.norm(file),
                                     tie_from_name(greedy_args.tie)),
                  greedy_args.format);
    return 0;
  }

  if (gen_cmd->parsed()) {
    if (gen_kind == "gaussian")
      gen_cfg.kind = GenKind::Gaussian;
    else if (gen_kind == "tree")
      gen_cfg.kind = GenKind::TreeBinary;
    else
      throw UsageError("generator kind must be gaussian or tree");
    const Election e = generate(gen_cfg);
    write_election_file(gen_out, e, NormOrder{gen_p});
    std::cout << "wrote " << gen_out << '\n';
    return 0;
  }

  if (reduce_cmd->parsed()) {
    ReductionBundle bundle;
    if (reduce_from == "ilp") {
      const ZeroOneIlp src = read_ilp_file(reduce_in);
      bundle = reduce_to == "tcis" ? ilp_to_tcis(src) : ilp_to_svis(src);
    } else if (reduce_from == "mis") {
      bundle = mis_to_tcms(read_dimacs_file(reduce_in));
    } else if (reduce_from == "x3c") {
      bundle = x3c_to_3voter_bisc(read_x3c_file(reduce_in));
    } else if (reduce_from == "hittingset") {
      bundle = hitting_set_to_bisc(read_hitting_set_file(reduce_in));
    } else {
      throw UsageError("unknown reduction source: " + reduce_from);
    }

    if (reduce_lift == "worstcase") {
      if (!bundle.margin)
        throw UsageError("worst-case lift applies to margin reductions only");
      ReductionBundle lifted = bundle.margin->win_rule == WinRule::AllRows
                                   ? lift_svis_to_worstcase(*bundle.margin)
                                   : lift_tcis_to_worstcase(*bundle.margin);
      lifted.provenance.notes.insert(lifted.provenance.notes.begin(),
                                     "lift of: " +
                                         bundle.provenance.construction);
      bundle = std::move(lifted);
    } else if (reduce_lift != "none") {
      throw UsageError("lift must be none or worstcase");
    }

    if (bundle.election) {
      write_election_file(reduce_out, *bundle.election, NormOrder{1});
    } else if (reduce_realize_p > 0) {
      const NormOrder norm{reduce_realize_p};
      const Election realized =
          bundle.margin->win_rule == WinRule::AllRows
              ? realize_single_voter(*bundle.margin, norm)
              : realize_two_candidate(*bundle.margin, norm);
      bundle.provenance.params.emplace_back("realized_p",
                                            std::to_string(norm.p));
      write_election_file(reduce_out, realized, norm);
    } else {
      write_margin_file(reduce_out, *bundle.margin);
    }
    write_provenance_file(reduce_out + ".provenance.json", bundle.provenance);
    std::cout << "wrote " << reduce_out << " (+provenance sidecar)\n";
    return 0;
  }

  if (lp_cmd->parsed()) {
    const ElectionFile file = read_election_file(lp_args.path);
    write_text_file(lp_out,
                    export_ilp(file.election, lp_args.norm(file)).text);
    std::cout << "wrote " << lp_out << '\n';
    return 0;
  }

  if (exp_cmd->parsed()) {
    ExperimentSpec spec;
    if (!exp_config.empty())
      spec = spec_from_json_text(read_text_file(exp_config));
    if (!exp_generator.empty()) {
      if (exp_generator == "gaussian")
        spec.generator = GenKind::Gaussian;
      else if (exp_generator == "tree")
        spec.generator = GenKind::TreeBinary;
      else
        throw UsageError("generator must be gaussian or tree");
    }
    if (exp_m) spec.m = *exp_m;
    if (exp_n) spec.n = *exp_n;
    if (exp_l) spec.l = *exp_l;
    if (!exp_sweep.empty()) spec.sweep = exp_sweep;
    if (!exp_values.empty()) {
      spec.values.clear();
      std::istringstream in(exp_values);
      std::string token;
      while (std::getline(in, token, ','))
        spec.values.push_back(std::stoll(token));
    }
    if (exp_instances) spec.instances_per_point = *exp_instances;
    if (exp_p) spec.norm.p = *exp_p;
    if (!exp_tie.empty()) spec.tie = tie_from_name(exp_tie);
    if (exp_seed) spec.base_seed = *exp_seed;
    if (!exp_solvers.empty()) {
      spec.solvers.clear();
      std::istringstream in(exp_solvers);
      std::string token;
      while (std::getline(in, token, ','))
        spec.solvers.push_back(solver_from_name(token));
    }
    if (exp_cap) spec.limits.cap = *exp_cap;
    if (exp_timings) spec.timings = true;

    const ExperimentResult result = run_experiment(spec);
    write_text_file(exp_out, csv_text(result));
    std::cout << render_summary(result);
    std::cout << "wrote " << exp_out << '\n';
    return 0;
  }

  if (plot_cmd->parsed()) {
    for (const std::string& path : emit_plots(plot_csv, plot_prefix))
      std::cout << "wrote " << path << '\n';
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const isel::ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return 2;
  } catch (const isel::CapacityError& err) {
    std::cerr << "capacity error: " << err.what() << '\n';
    return 3;
  } catch (const isel::UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return 4;
  } catch (const isel::RealizationError& err) {
    std::cerr << "realization error: " << err.what() << '\n';
    return 5;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
