#include "isel/rng.hpp"

#include <cmath>
#include <numbers>

namespace isel {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 mixer(seed ^ (tag * 0xD1B54A32D192ED03ull));
  return mixer.next();
}

std::uint64_t derive_instance_seed(std::uint64_t base,
                                   std::int64_t sweep_value,
                                   std::int64_t instance_index) {
  // base -> remix with the sweep value -> remix with the instance index.
  std::uint64_t s = mix_seed(base, static_cast<std::uint64_t>(sweep_value));
  return mix_seed(s, static_cast<std::uint64_t>(instance_index) + 0x51ED2701ull);
}

double NormalStream::next() {
  if (has_spare) {
    has_spare = false;
    return spare;
  }
  const double u1 = rng.next_unit_positive();
  const double u2 = rng.next_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare = radius * std::sin(angle);
  has_spare = true;
  return radius * std::cos(angle);
}

}  // namespace isel
