#pragma once

#include "isel/errors.hpp"
#include "isel/types.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace isel {

struct EnumLimits {
  int cap = 25;  // largest column/issue count accepted for exhaustion
};

/// Throws CapacityError when 2^count subsets exceed the configured cap.
void require_enumerable(Index count, const EnumLimits& limits);

/// Canonical subset order: fewer members first, then lexicographically
/// smaller sorted member list. Deterministic witness selection everywhere.
bool canonical_subset_less(std::uint32_t a, std::uint32_t b);

/// Size-s subsets of {0..l-1} in lexicographic member-list order. The
/// visitor receives a bitmask and may return true to stop; returns whether
/// a visitor stopped the scan.
template <class Visit>
bool for_each_combination(int l, int s, Visit&& visit) {
  if (s < 1 || s > l) return false;
  std::vector<int> idx(static_cast<std::size_t>(s));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= (std::uint32_t{1} << i);
    if (visit(mask)) return true;
    int i = s - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == l - s + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace detail {
template <class Add, class Remove, class Visit>
void dfs_subsets_impl(int l, int start, std::uint32_t mask, Add& add,
                      Remove& remove, Visit& visit) {
  for (int k = start; k < l; ++k) {
    add(k);
    const std::uint32_t with_k = mask | (std::uint32_t{1} << k);
    visit(with_k);
    dfs_subsets_impl(l, k + 1, with_k, add, remove, visit);
    remove(k);
  }
}
}  // namespace detail

/// Visits every nonempty subset of {0..l-1} once, maintaining incremental
/// state: add(k) before a column enters the current subset, remove(k) when
/// it leaves, visit(mask) at each subset.
template <class Add, class Remove, class Visit>
void dfs_subsets(int l, Add&& add, Remove&& remove, Visit&& visit) {
  detail::dfs_subsets_impl(l, 0, 0, add, remove, visit);
}

}  // namespace isel
