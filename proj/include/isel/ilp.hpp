#pragma once

#include "isel/election.hpp"
#include "isel/subsets.hpp"

#include <string>

namespace isel {

/// Textual 0-1 linear program in LP file format (Maximize / Subject To /
/// Bounds / Binary / End), variables x1..xL (issue picks) and y1..yN
/// (captured voters).
struct IlpModelText {
  std::string text;
};

/// Big-M constant: the sum of absolute margin-tensor entries. Any issue
/// selection keeps every per-voter margin sum within [-alpha, alpha].
Rational ilp_big_m(const Election& e, NormOrder norm);

/// Emits max sum_j y_j subject to sum_k A_ijk x_k + (1 - y_j) alpha >= 0
/// for every rival i and voter j, plus sum_k x_k >= 1 and binary bounds.
/// Every constraint is scaled by its least common denominator so the file
/// carries exact integers.
IlpModelText export_ilp(const Election& e, NormOrder norm);

/// Optimum of the exported model, by enumerating nonempty x and deriving
/// y_j as the indicator of "all rival margin sums nonnegative".
int ilp_optimum_by_enumeration(const Election& e, NormOrder norm,
                               EnumLimits limits = {});

/// True iff the model optimum equals the exhaustive best-case Max Support
/// optimum.
bool check_ilp_consistency(const Election& e, NormOrder norm,
                           EnumLimits limits = {});

}  // namespace isel
