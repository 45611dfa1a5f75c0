#pragma once

#include "isel/election.hpp"
#include "isel/margin.hpp"
#include "isel/subsets.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isel {

/// 0-1 feasibility instance: does x in {0,1}^l satisfy A x >= b?
struct ZeroOneIlp {
  Mat<int> a;          // m x l integer matrix
  Vec<int> b;          // length m
};

/// Simple undirected graph, 1-based vertices, no loops or parallel edges.
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Exact cover by 3-sets: t elements (multiple of 3), s candidate triples.
struct X3cInstance {
  int t = 0;
  std::vector<std::array<int, 3>> sets;
};

/// Hitting set: choose at most k elements meeting every set.
struct HittingSetInstance {
  int num_elements = 0;
  std::vector<std::vector<int>> sets;
  int k = 1;
};

void validate(const ZeroOneIlp& src);
void validate(const Graph& src);
void validate(const X3cInstance& src);
void validate(const HittingSetInstance& src);

/// Construction metadata carried next to a reduced instance.
struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> notes;
};

/// A source instance reduced to a margin instance and/or an election.
struct ReductionBundle {
  std::optional<MarginInstance> margin;
  std::optional<Election> election;
  Provenance provenance;
};

// ---- Margin-instance decision semantics -----------------------------------
//
// Single-voter elections need every row satisfied; two-candidate elections
// need a majority of rows. Weak satisfaction mirrors best-case ties, strict
// satisfaction worst-case ties.

bool all_rows_controllable(const MarginInstance& mi, EnumLimits limits = {});
bool majority_controllable(const MarginInstance& mi, EnumLimits limits = {});
int max_satisfied_rows(const MarginInstance& mi, EnumLimits limits = {});

// ---- Constructions ---------------------------------------------------------

/// 0-1 program -> single-voter margin instance ((m+1) x (l+1), weak,
/// all-rows). Column l+1 carries -b and is forced by a row that loses
/// without it; x = characteristic vector of the chosen columns among 1..l.
ReductionBundle ilp_to_svis(const ZeroOneIlp& src);

/// 0-1 program -> two-candidate margin instance ((2m+1) x (l+1), weak,
/// majority). m always-losing rows pin the majority threshold to "all
/// constraint rows plus the forcing row".
ReductionBundle ilp_to_tcis(const ZeroOneIlp& src);

/// Graph -> two-candidate max-support margin instance (|V| x |V|, weak,
/// count-rows): diagonal |V|-1, -|V| across edges, -1 otherwise. The
/// maximum satisfied-row count equals the maximum independent set size.
ReductionBundle mis_to_tcms(const Graph& g);

/// Weak/all-rows margin instance -> strict/all-rows instance of one more
/// row and column deciding the same question. Entries are rescaled to
/// integers first; the appended column carries small +/- biases.
ReductionBundle lift_svis_to_worstcase(const MarginInstance& mi);

/// Weak/majority margin instance -> strict/majority instance over an
/// enlarged voter block deciding the same question.
ReductionBundle lift_tcis_to_worstcase(const MarginInstance& mi);

/// Exact 3-cover -> 3-voter binary election with t+4 candidates and s+t+2
/// issues; best-case control answers track exact-cover answers across the
/// verified source range.
ReductionBundle x3c_to_3voter_bisc(const X3cInstance& src);

/// Hitting set -> two-candidate binary election with p+k issues and 2ks+4
/// voters; best-case control holds iff a hitting set of size <= k exists.
ReductionBundle hitting_set_to_bisc(const HittingSetInstance& src);

// ---- Realizations ----------------------------------------------------------

/// Residual gate applied by the realization procedures: 1e-9 for p <= 2,
/// 1e-6 for the bisection path (p >= 3).
double realization_tolerance(NormOrder norm);

/// Margin rows as rival candidates of a one-voter election at the origin:
/// c_1k is the p-th root of |min_i M_ik| and each rival adds its margin
/// back. Exact for p = 1; otherwise stores double-precision roots and
/// verifies the recomputed margins against the tolerance gate.
Election realize_single_voter(const MarginInstance& mi, NormOrder norm);

/// Margin rows as voters of a two-candidate election: c_1 = 0, c_2k the
/// p-th root of the column's largest magnitude, and each voter position
/// solves |c_2 - v|^p - |v|^p = M_jk (closed forms for p = 1, 2; bisection
/// otherwise).
Election realize_two_candidate(const MarginInstance& mi, NormOrder norm);

/// Largest absolute difference between mi and the margin tensor recomputed
/// from a realized election (shape decides the rival/voter row mapping).
Rational max_margin_residual(const MarginInstance& mi, const Election& e,
                             NormOrder norm);

}  // namespace isel
