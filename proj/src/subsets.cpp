#include "isel/subsets.hpp"

#include <bit>

namespace isel {

void require_enumerable(Index count, const EnumLimits& limits) {
  if (count > limits.cap)
    throw CapacityError("subset enumeration over " + std::to_string(count) +
                        " columns exceeds the cap of " +
                        std::to_string(limits.cap));
}

bool canonical_subset_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace isel
