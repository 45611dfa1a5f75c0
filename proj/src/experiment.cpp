#include "isel/experiment.hpp"

#include "isel/exact.hpp"
#include "isel/greedy.hpp"
#include "isel/poly.hpp"
#include "isel/rational_text.hpp"
#include "isel/rng.hpp"

#include <json.hpp>

#include <chrono>
#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace isel {

const char kCsvHeader[] =
    "sweep_param,sweep_value,seed,solver,support,optimum,ratio,zero_opt_flag,"
    "millis";

const char* solver_name(SolverKind s) {
  switch (s) {
    case SolverKind::Exhaustive:
      return "exhaustive";
    case SolverKind::Greedy:
      return "greedy";
    case SolverKind::BestSingleIssue:
      return "best_single_issue";
  }
  return "unknown";
}

SolverKind solver_from_name(const std::string& name) {
  if (name == "exhaustive") return SolverKind::Exhaustive;
  if (name == "greedy") return SolverKind::Greedy;
  if (name == "best_single_issue") return SolverKind::BestSingleIssue;
  throw ParseError("unknown solver: " + name);
}

Rational support_ratio(int support, int optimum, bool* zero_opt) {
  if (zero_opt) *zero_opt = optimum == 0;
  if (optimum == 0) return Rational(1);  // nobody reachable; flagged
  return Rational(support, optimum);
}

namespace {

void check_spec(const ExperimentSpec& spec) {
  if (spec.sweep != "m" && spec.sweep != "n" && spec.sweep != "l")
    throw UsageError("sweep parameter must be one of m, n, l");
  if (spec.values.empty()) throw UsageError("sweep needs at least one value");
  if (spec.instances_per_point < 1)
    throw UsageError("instances_per_point must be >= 1");
  if (spec.solvers.empty()) throw UsageError("need at least one solver");
  if (spec.norm.p < 1) throw UsageError("p must be >= 1");
  // Refuse capacity breaches before any work.
  Index max_l = spec.l;
  if (spec.sweep == "l")
    max_l = *std::max_element(spec.values.begin(), spec.values.end());
  require_enumerable(max_l, spec.limits);
  for (Index v : spec.values)
    if (v < 1) throw UsageError("sweep values must be positive");
}

GenConfig config_for(const ExperimentSpec& spec, Index value,
                     std::uint64_t seed) {
  GenConfig cfg;
  cfg.m = spec.sweep == "m" ? value : spec.m;
  cfg.n = spec.sweep == "n" ? value : spec.n;
  cfg.l = spec.sweep == "l" ? value : spec.l;
  cfg.seed = seed;
  cfg.kind = spec.generator;
  return cfg;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  check_spec(spec);
  ExperimentResult result;
  result.spec = spec;

  struct Accumulator {
    Rational sum;
    int count = 0;
  };
  std::vector<std::vector<Accumulator>> acc(
      spec.values.size(), std::vector<Accumulator>(spec.solvers.size()));

  for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
    const Index value = spec.values[vi];
    for (int inst = 0; inst < spec.instances_per_point; ++inst) {
      const std::uint64_t seed =
          derive_instance_seed(spec.base_seed, value, inst);
      const Election e = generate(config_for(spec, value, seed));

      const auto solve_one = [&](SolverKind kind, long long* millis) {
        const auto start = std::chrono::steady_clock::now();
        int sup = 0;
        switch (kind) {
          case SolverKind::Exhaustive:
            sup = solve_maxsupport_exhaustive(e, spec.norm, spec.tie,
                                              spec.limits)
                      .target_support;
            break;
          case SolverKind::Greedy:
            sup = greedy_max_support(e, spec.norm, spec.tie).target_support;
            break;
          case SolverKind::BestSingleIssue:
            sup = best_single_issue(e, spec.norm, spec.tie).target_support;
            break;
        }
        if (millis) {
          const auto elapsed = std::chrono::steady_clock::now() - start;
          *millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        elapsed)
                        .count();
        }
        return sup;
      };

      long long opt_millis = 0;
      const int optimum =
          solve_one(SolverKind::Exhaustive, spec.timings ? &opt_millis : nullptr);

      for (std::size_t si = 0; si < spec.solvers.size(); ++si) {
        const SolverKind kind = spec.solvers[si];
        long long millis = 0;
        int sup = 0;
        if (kind == SolverKind::Exhaustive) {
          sup = optimum;
          millis = opt_millis;
        } else {
          sup = solve_one(kind, spec.timings ? &millis : nullptr);
        }
        ResultRow row;
        row.sweep_param = spec.sweep;
        row.sweep_value = value;
        row.seed = seed;
        row.solver = kind;
        row.support = sup;
        row.optimum = optimum;
        row.ratio = support_ratio(sup, optimum, &row.zero_opt);
        row.millis = spec.timings ? millis : 0;
        acc[vi][si].sum += row.ratio;
        acc[vi][si].count += 1;
        result.rows.push_back(std::move(row));
      }
    }
  }

  for (std::size_t vi = 0; vi < spec.values.size(); ++vi)
    for (std::size_t si = 0; si < spec.solvers.size(); ++si) {
      SummaryPoint point;
      point.sweep_value = spec.values[vi];
      point.solver = spec.solvers[si];
      point.instances = acc[vi][si].count;
      point.mean_ratio = acc[vi][si].sum / acc[vi][si].count;
      result.summary.push_back(std::move(point));
    }
  return result;
}

void write_csv(const ExperimentResult& result, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const ResultRow& row : result.rows) {
    os << row.sweep_param << ',' << row.sweep_value << ',' << row.seed << ','
       << solver_name(row.solver) << ',' << row.support << ',' << row.optimum
       << ',' << rational_to_decimal(row.ratio, 6) << ','
       << (row.zero_opt ? 1 : 0) << ',' << row.millis << '\n';
  }
}

std::string csv_text(const ExperimentResult& result) {
  std::ostringstream os;
  write_csv(result, os);
  return os.str();
}

std::string render_summary(const ExperimentResult& result) {
  std::ostringstream os;
  os << "sweep of " << result.spec.sweep << " ("
     << (result.spec.generator == GenKind::Gaussian ? "gaussian" : "tree")
     << ", m=" << result.spec.m << " n=" << result.spec.n
     << " l=" << result.spec.l << ", p=" << result.spec.norm.p << ", "
     << (result.spec.tie == TieRule::BestCase ? "best" : "worst")
     << "-case ties)\n";
  os << std::left << std::setw(12) << result.spec.sweep << std::setw(20)
     << "solver" << std::setw(12) << "mean_ratio" << "instances\n";
  for (const SummaryPoint& point : result.summary) {
    os << std::left << std::setw(12) << point.sweep_value << std::setw(20)
       << solver_name(point.solver) << std::setw(12)
       << rational_to_decimal(point.mean_ratio, 6) << point.instances << '\n';
  }
  return os.str();
}

ExperimentSpec spec_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed experiment config JSON");
  ExperimentSpec spec;
  if (j.contains("generator")) {
    const std::string g = j.at("generator").get<std::string>();
    if (g == "gaussian")
      spec.generator = GenKind::Gaussian;
    else if (g == "tree")
      spec.generator = GenKind::TreeBinary;
    else
      throw ParseError("generator must be \"gaussian\" or \"tree\"");
  }
  spec.m = j.value("m", spec.m);
  spec.n = j.value("n", spec.n);
  spec.l = j.value("l", spec.l);
  spec.sweep = j.value("sweep", spec.sweep);
  if (j.contains("values"))
    spec.values = j.at("values").get<std::vector<Index>>();
  spec.instances_per_point =
      j.value("instances_per_point", spec.instances_per_point);
  spec.norm.p = j.value("p", spec.norm.p);
  if (j.contains("tie")) {
    const std::string tie = j.at("tie").get<std::string>();
    if (tie == "best")
      spec.tie = TieRule::BestCase;
    else if (tie == "worst")
      spec.tie = TieRule::WorstCase;
    else
      throw ParseError("tie must be \"best\" or \"worst\"");
  }
  spec.base_seed = j.value("seed", spec.base_seed);
  if (j.contains("solvers")) {
    spec.solvers.clear();
    for (const auto& name : j.at("solvers"))
      spec.solvers.push_back(solver_from_name(name.get<std::string>()));
  }
  spec.timings = j.value("timings", spec.timings);
  spec.limits.cap = j.value("cap", spec.limits.cap);
  return spec;
}

}  // namespace isel
