#include "isel/reductions.hpp"

#include "isel/rational_text.hpp"
#include "tables.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace isel {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

constexpr char kEpsilonHalf[] = "1/2";

// Common multiplier turning every entry integral. Row-sum sign tests are
// invariant under positive scaling.
RatMat scaled_to_integers(const RatMat& m, BigInt* scale_out) {
  BigInt scale = 1;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      scale = lcm(scale, denominator(m(r, c)));
  RatMat out = m;
  if (scale != 1)
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) out(r, c) *= Rational(scale);
  if (scale_out) *scale_out = scale;
  return out;
}

Rational nth_root_approx(const Rational& value, int p) {
  if (value < 0) throw UsageError("nth_root_approx expects a nonnegative value");
  if (p == 1) return value;
  return rational_from_double(std::pow(to_double(value), 1.0 / p));
}

void gate_residual(const MarginInstance& mi, const Election& e,
                   NormOrder norm) {
  const Rational residual = max_margin_residual(mi, e, norm);
  const Rational gate = rational_from_double(realization_tolerance(norm));
  if (residual > gate)
    throw RealizationError("realized election misses the margin matrix: "
                           "max residual " +
                           format_rational(residual));
}

}  // namespace

void validate(const ZeroOneIlp& src) {
  if (src.a.rows() < 1 || src.a.cols() < 1)
    throw UsageError("0-1 program needs a nonempty constraint matrix");
  if (src.b.size() != src.a.rows())
    throw UsageError("0-1 program right-hand side length mismatch");
}

void validate(const Graph& src) {
  if (src.num_vertices < 1) throw UsageError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : src.edges) {
    if (u < 1 || v < 1 || u > src.num_vertices || v > src.num_vertices)
      throw UsageError("edge endpoint out of range");
    if (u == v) throw UsageError("self-loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw UsageError("duplicate edge");
  }
}

void validate(const X3cInstance& src) {
  if (src.t < 3 || src.t % 3 != 0)
    throw UsageError("element count must be a positive multiple of 3");
  if (src.sets.empty()) throw UsageError("need at least one candidate triple");
  for (const auto& s : src.sets) {
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
      throw UsageError("triples must hold three distinct elements");
    for (int v : s)
      if (v < 1 || v > src.t) throw UsageError("triple element out of range");
  }
}

void validate(const HittingSetInstance& src) {
  if (src.num_elements < 1) throw UsageError("need at least one element");
  if (src.k < 1) throw UsageError("hitting-set budget must be >= 1");
  if (src.sets.empty()) throw UsageError("need at least one set");
  for (const auto& s : src.sets) {
    if (s.empty()) throw UsageError("sets must be nonempty");
    for (int v : s)
      if (v < 1 || v > src.num_elements)
        throw UsageError("set element out of range");
  }
}

bool all_rows_controllable(const MarginInstance& mi, EnumLimits limits) {
  MarginInstance decision = mi;
  decision.win_rule = WinRule::AllRows;
  return solve_margin(decision, limits).columns.has_value();
}

bool majority_controllable(const MarginInstance& mi, EnumLimits limits) {
  MarginInstance counting = mi;
  counting.win_rule = WinRule::CountRows;
  const int satisfied = solve_margin(counting, limits).satisfied_rows;
  const Index rows = mi.rows();
  // Weak satisfaction mirrors best-case ties: winning half the rows is
  // enough. Strict satisfaction needs a strict majority.
  const Index threshold = mi.satisfaction == Satisfaction::Weak
                              ? (rows + 1) / 2
                              : rows / 2 + 1;
  return satisfied >= static_cast<int>(threshold);
}

int max_satisfied_rows(const MarginInstance& mi, EnumLimits limits) {
  MarginInstance counting = mi;
  counting.win_rule = WinRule::CountRows;
  return solve_margin(counting, limits).satisfied_rows;
}

ReductionBundle ilp_to_svis(const ZeroOneIlp& src) {
  validate(src);
  const Index m = src.a.rows();
  const Index l = src.a.cols();
  RatMat entries = RatMat::Zero(m + 1, l + 1);
  for (Index i = 0; i < m; ++i) {
    for (Index k = 0; k < l; ++k) entries(i, k) = src.a(i, k);
    entries(i, l) = -src.b(i);
  }
  // The final row loses without the added column and cannot lose with it,
  // which forces the -b column into any winning selection.
  for (Index k = 0; k < l; ++k) entries(m, k) = Rational(-1, l + 1);
  entries(m, l) = 1;

  ReductionBundle bundle;
  bundle.margin = MarginInstance{std::move(entries), Satisfaction::Weak,
                                 WinRule::AllRows};
  bundle.provenance = Provenance{
      "ilp-to-single-voter-margin",
      {{"constraints", std::to_string(m)}, {"variables", std::to_string(l)}},
      {"selected columns among 1..l are the 1-entries of a feasible x"}};
  return bundle;
}

ReductionBundle ilp_to_tcis(const ZeroOneIlp& src) {
  validate(src);
  const Index m = src.a.rows();
  const Index l = src.a.cols();
  const Index rows = 2 * m + 1;
  RatMat entries = RatMat::Zero(rows, l + 1);
  for (Index i = 0; i < m; ++i) {
    for (Index k = 0; k < l; ++k) entries(i, k) = src.a(i, k);
    entries(i, l) = -src.b(i);
  }
  // m always-losing voters (negative everywhere, including the forced
  // column, so selecting only that column cannot recruit them) pin the
  // majority threshold to the m constraint rows plus the forcing row.
  for (Index i = m; i < 2 * m; ++i)
    for (Index k = 0; k <= l; ++k) entries(i, k) = -1;
  for (Index k = 0; k < l; ++k) entries(2 * m, k) = -1;
  entries(2 * m, l) = l + 1;

  ReductionBundle bundle;
  bundle.margin = MarginInstance{std::move(entries), Satisfaction::Weak,
                                 WinRule::CountRows};
  bundle.provenance = Provenance{
      "ilp-to-two-candidate-margin",
      {{"constraints", std::to_string(m)}, {"variables", std::to_string(l)}},
      {"majority of rows = all constraint rows plus the forcing row",
       "always-losing rows carry -1 in the forced column; a zero there "
       "would let the forced column alone reach a majority"}};
  return bundle;
}

ReductionBundle mis_to_tcms(const Graph& g) {
  validate(g);
  const Index v = g.num_vertices;
  RatMat entries = RatMat::Constant(v, v, Rational(-1));
  for (Index i = 0; i < v; ++i) entries(i, i) = v - 1;
  for (auto [a, b] : g.edges) {
    entries(a - 1, b - 1) = -v;
    entries(b - 1, a - 1) = -v;
  }
  ReductionBundle bundle;
  bundle.margin = MarginInstance{std::move(entries), Satisfaction::Weak,
                                 WinRule::CountRows};
  bundle.provenance = Provenance{
      "independent-set-to-two-candidate-max-support",
      {{"vertices", std::to_string(g.num_vertices)},
       {"edges", std::to_string(g.edges.size())}},
      {"max satisfied rows equals the maximum independent set size"}};
  return bundle;
}

ReductionBundle lift_svis_to_worstcase(const MarginInstance& mi) {
  BigInt scale = 1;
  const RatMat m = scaled_to_integers(mi.entries, &scale);
  const Index rows = m.rows();
  const Index l = m.cols();
  const Rational eps(1, 2);

  RatMat lifted = RatMat::Zero(rows + 2, l + 1);
  lifted.topLeftCorner(rows, l) = m;
  // Row rows: all zeros on the original columns; with the bias column it
  // forces that column into any strictly winning selection.
  for (Index r = 0; r <= rows; ++r) lifted(r, l) = eps / 2;
  // Final row blocks "bias column only": it needs an original column too.
  for (Index k = 0; k < l; ++k) lifted(rows + 1, k) = eps;
  lifted(rows + 1, l) = -eps / 2;

  ReductionBundle bundle;
  bundle.margin = MarginInstance{std::move(lifted), Satisfaction::Strict,
                                 WinRule::AllRows};
  bundle.provenance = Provenance{
      "single-voter-weak-to-strict-lift",
      {{"epsilon", kEpsilonHalf}, {"integral_scale", scale.str()}},
      {"integral entries make every nonzero row sum at least 1 in "
       "magnitude, so the +/- epsilon biases only move exact ties"}};
  return bundle;
}

ReductionBundle lift_tcis_to_worstcase(const MarginInstance& mi) {
  BigInt scale = 1;
  const RatMat m = scaled_to_integers(mi.entries, &scale);
  const Index n = m.rows();
  const Index l = m.cols();
  const Rational eps(1, 2);

  Rational magnitude = 1;  // at least 1, so the block rows stay decisive
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < l; ++k) {
      const Rational a = pow_abs(m(j, k), 1);
      if (a > magnitude) magnitude = a;
    }

  // A block of always-target rows and a block of always-rival rows flank
  // the original voters. For an even original count the target block gets
  // one extra row: with equal blocks the strict-majority threshold would
  // demand one more original row than the weak decision does.
  const Index target_block = n % 2 == 0 ? n + 1 : n;
  const Index rows = n + target_block + n;
  RatMat lifted = RatMat::Zero(rows, l + 1);
  lifted.topLeftCorner(n, l) = m;
  for (Index j = 0; j < n; ++j) lifted(j, l) = eps / 2;
  for (Index j = n; j < n + target_block; ++j) {
    for (Index k = 0; k < l; ++k) lifted(j, k) = magnitude;
    lifted(j, l) = -eps / 2;
  }
  for (Index j = n + target_block; j < rows; ++j) {
    for (Index k = 0; k < l; ++k) lifted(j, k) = -magnitude;
    lifted(j, l) = -eps / 2;
  }

  ReductionBundle bundle;
  bundle.margin = MarginInstance{std::move(lifted), Satisfaction::Strict,
                                 WinRule::CountRows};
  bundle.provenance = Provenance{
      "two-candidate-weak-to-strict-lift",
      {{"epsilon", kEpsilonHalf},
       {"integral_scale", scale.str()},
       {"block_magnitude", format_rational(magnitude)},
       {"target_block_rows", std::to_string(target_block)}},
      {"even voter counts get one extra always-target row to keep the "
       "strict-majority threshold aligned with the weak decision"}};
  return bundle;
}

ReductionBundle x3c_to_3voter_bisc(const X3cInstance& src) {
  validate(src);
  const Index t = src.t;
  const Index s = static_cast<Index>(src.sets.size());
  const Index issues = s + t + 2;
  const Index m = t + 4;

  // Candidate rows: target (all ones), one row per element, the two
  // complementary block candidates, and the all-zeros reference.
  RatMat cand = RatMat::Zero(m, issues);
  for (Index k = 0; k < issues; ++k) cand(0, k) = 1;
  for (Index set_index = 0; set_index < s; ++set_index)
    for (int element : src.sets[static_cast<std::size_t>(set_index)])
      cand(element, set_index) = 1;
  for (Index i = 1; i <= t; ++i) cand(i, s + t + 1) = 1;
  const Index comp_hi = t + 1;  // ones exactly on the last two issues
  const Index comp_lo = t + 2;  // ones exactly on the first s+t issues
  cand(comp_hi, s + t) = 1;
  cand(comp_hi, s + t + 1) = 1;
  for (Index k = 0; k < s + t; ++k) cand(comp_lo, k) = 1;
  // Row t+3 (the reference candidate) stays all zeros.

  RatMat voters = RatMat::Zero(3, issues);
  for (Index k = 0; k < s; ++k) voters(0, k) = 1;
  voters(0, s + t) = 1;
  for (Index k = s; k < s + t; ++k) voters(1, k) = 1;
  voters(1, s + t + 1) = 1;
  // Voter 3 stays all zeros and always follows the reference candidate.

  ReductionBundle bundle;
  bundle.election =
      Election{std::move(cand), std::move(voters), Domain::Binary};
  bundle.provenance = Provenance{
      "exact-cover-to-3-voter-binary-control",
      {{"elements", std::to_string(src.t)},
       {"sets", std::to_string(src.sets.size())},
       {"issues", std::to_string(issues)},
       {"candidates", std::to_string(m)}},
      {"equivalence verified for 3-element sources; larger unsatisfiable "
       "sources can still be controlled through a three-way winner tie "
       "that best-case breaking hands to the target"}};
  return bundle;
}

ReductionBundle hitting_set_to_bisc(const HittingSetInstance& src) {
  validate(src);
  const Index p = src.num_elements;
  const Index s = static_cast<Index>(src.sets.size());
  const Index k = src.k;
  const Index issues = p + k;
  const Index n = 2 * k * s + 4;

  RatMat cand = RatMat::Zero(2, issues);
  for (Index c = 0; c < issues; ++c) cand(0, c) = 1;

  RatMat voters = RatMat::Zero(n, issues);
  // Block 1: a complementary voter pair balancing element picks against
  // budget picks.
  for (Index c = p; c < issues; ++c) voters(0, c) = 1;
  for (Index c = 0; c < p; ++c) voters(1, c) = 1;
  // Block 2: k sub-blocks of the set system; sub-block f zeroes budget
  // issue f and raises the rest.
  for (Index f = 0; f < k; ++f)
    for (Index i = 0; i < s; ++i) {
      const Index row = 2 + f * s + i;
      for (int element : src.sets[static_cast<std::size_t>(i)])
        voters(row, element - 1) = 1;
      for (Index c = p; c < issues; ++c)
        voters(row, c) = (c == p + f) ? 0 : 1;
    }
  // Block 3: k*s + 2 all-zero voters forever lost to the rival.

  ReductionBundle bundle;
  bundle.election =
      Election{std::move(cand), std::move(voters), Domain::Binary};
  bundle.provenance = Provenance{
      "hitting-set-to-two-candidate-binary-control",
      {{"elements", std::to_string(src.num_elements)},
       {"sets", std::to_string(src.sets.size())},
       {"budget", std::to_string(src.k)},
       {"issues", std::to_string(issues)},
       {"voters", std::to_string(n)}},
      {"target wins iff every voter outside the all-zero block is captured"}};
  return bundle;
}

double realization_tolerance(NormOrder norm) {
  return norm.p <= 2 ? 1e-9 : 1e-6;
}

Election realize_single_voter(const MarginInstance& mi, NormOrder norm) {
  if (norm.p < 1) throw UsageError("norm order must be >= 1");
  const Index rows = mi.rows();
  const Index l = mi.cols();
  Election e;
  e.domain = Domain::Real;
  e.voters = RatMat::Zero(1, l);
  e.candidates = RatMat::Zero(rows + 1, l);
  for (Index k = 0; k < l; ++k) {
    Rational min_value = mi.entries(0, k);
    for (Index r = 1; r < rows; ++r)
      if (mi.entries(r, k) < min_value) min_value = mi.entries(r, k);
    if (norm.p == 1) {
      const Rational base = pow_abs(min_value, 1);
      e.candidates(0, k) = base;
      for (Index r = 0; r < rows; ++r)
        e.candidates(r + 1, k) = mi.entries(r, k) + base;
    } else {
      const Rational root = nth_root_approx(pow_abs(min_value, 1), norm.p);
      const Rational base = pow_abs(root, norm.p);  // exact power of the
      e.candidates(0, k) = root;                    // stored approximation
      for (Index r = 0; r < rows; ++r) {
        Rational shifted = mi.entries(r, k) + base;
        if (shifted < 0) shifted = 0;  // rounding at the column minimum
        e.candidates(r + 1, k) = nth_root_approx(shifted, norm.p);
      }
    }
  }
  gate_residual(mi, e, norm);
  return e;
}

Election realize_two_candidate(const MarginInstance& mi, NormOrder norm) {
  if (norm.p < 1) throw UsageError("norm order must be >= 1");
  const Index n = mi.rows();
  const Index l = mi.cols();
  Election e;
  e.domain = Domain::Real;
  e.candidates = RatMat::Zero(2, l);
  e.voters = RatMat::Zero(n, l);
  for (Index k = 0; k < l; ++k) {
    Rational bar = 0;
    for (Index j = 0; j < n; ++j) {
      const Rational a = pow_abs(mi.entries(j, k), 1);
      if (a > bar) bar = a;
    }
    if (bar == 0) continue;  // all-zero column realizes as all zeros

    if (norm.p == 1) {
      e.candidates(1, k) = bar;
      for (Index j = 0; j < n; ++j)
        e.voters(j, k) = (bar - mi.entries(j, k)) / 2;
    } else if (norm.p == 2) {
      const Rational c2 = nth_root_approx(bar, 2);
      e.candidates(1, k) = c2;
      // (c2 - v)^2 - v^2 = c2^2 - 2 c2 v, so this v reproduces the margin
      // exactly for the stored c2.
      for (Index j = 0; j < n; ++j)
        e.voters(j, k) = (c2 * c2 - mi.entries(j, k)) / (2 * c2);
    } else {
      const double c2 = std::pow(to_double(bar), 1.0 / norm.p);
      e.candidates(1, k) = rational_from_double(c2);
      for (Index j = 0; j < n; ++j) {
        const double target = to_double(mi.entries(j, k));
        double lo = 0.0, hi = c2;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double value =
              std::pow(c2 - mid, norm.p) - std::pow(mid, norm.p);
          if (value > target)
            lo = mid;
          else
            hi = mid;
          if (hi - lo <= 1e-15 * (1.0 + c2)) break;
        }
        e.voters(j, k) = rational_from_double(0.5 * (lo + hi));
      }
    }
  }
  gate_residual(mi, e, norm);
  return e;
}

Rational max_margin_residual(const MarginInstance& mi, const Election& e,
                             NormOrder norm) {
  const MarginTensor tensor = margin_tensor(e, norm);
  Rational worst = 0;
  auto track = [&worst](const Rational& delta) {
    const Rational a = pow_abs(delta, 1);
    if (a > worst) worst = a;
  };
  if (e.num_voters() == 1 &&
      static_cast<Index>(tensor.size()) == mi.rows()) {
    for (Index r = 0; r < mi.rows(); ++r)
      for (Index k = 0; k < mi.cols(); ++k)
        track(tensor[static_cast<std::size_t>(r)](0, k) - mi.entries(r, k));
    return worst;
  }
  if (e.num_candidates() == 2 && e.num_voters() == mi.rows()) {
    for (Index j = 0; j < mi.rows(); ++j)
      for (Index k = 0; k < mi.cols(); ++k)
        track(tensor[0](j, k) - mi.entries(j, k));
    return worst;
  }
  throw UsageError("election shape does not match the margin instance");
}

}  // namespace isel
