#pragma once

#include "isel/election.hpp"
#include "isel/generators.hpp"
#include "isel/subsets.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isel {

enum class SolverKind { Exhaustive, Greedy, BestSingleIssue };

const char* solver_name(SolverKind s);
SolverKind solver_from_name(const std::string& name);

/// One sweep: fix two of {m, n, l}, vary the third over `values`, and solve
/// `instances_per_point` generated instances per value with every listed
/// solver.
struct ExperimentSpec {
  GenKind generator = GenKind::Gaussian;
  Index m = 3;
  Index n = 100;
  Index l = 10;
  std::string sweep = "m";  // one of "m", "n", "l"
  std::vector<Index> values;
  int instances_per_point = 100;
  NormOrder norm{2};
  TieRule tie = TieRule::WorstCase;
  std::uint64_t base_seed = 0;
  std::vector<SolverKind> solvers = {SolverKind::Exhaustive, SolverKind::Greedy,
                                     SolverKind::BestSingleIssue};
  bool timings = false;  // off by default so reruns are byte-identical
  EnumLimits limits{};
};

struct ResultRow {
  std::string sweep_param;
  Index sweep_value = 0;
  std::uint64_t seed = 0;
  SolverKind solver = SolverKind::Exhaustive;
  int support = 0;
  int optimum = 0;
  Rational ratio;  // support / optimum; 1 when the optimum is zero
  bool zero_opt = false;
  long long millis = 0;
};

struct SummaryPoint {
  Index sweep_value = 0;
  SolverKind solver = SolverKind::Exhaustive;
  Rational mean_ratio;
  int instances = 0;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<ResultRow> rows;
  std::vector<SummaryPoint> summary;
};

/// Support/optimum ratio under the zero-optimum convention.
Rational support_ratio(int support, int optimum, bool* zero_opt = nullptr);

/// Runs the sweep. Refuses (CapacityError) before any work when a sweep
/// point would exceed the exhaustive solver's cap.
ExperimentResult run_experiment(const ExperimentSpec& spec);

extern const char kCsvHeader[];  // pinned CSV schema

void write_csv(const ExperimentResult& result, std::ostream& os);
std::string csv_text(const ExperimentResult& result);
std::string render_summary(const ExperimentResult& result);

/// Spec from a JSON config body; CLI flags override individual fields.
ExperimentSpec spec_from_json_text(const std::string& text);

}  // namespace isel
