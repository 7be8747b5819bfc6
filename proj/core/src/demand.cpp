#include "btes/mpc/demand.hpp"

#include <cmath>

#include "btes/errors.hpp"

namespace btes {
namespace {

// splitmix64; hand-rolled so profiles are identical across platforms.
double next_unit(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

double DemandProfile::at(int step) const {
  if (step < 0 || step >= total_steps) {
    throw ArgumentError("demand: step out of range");
  }
  return levels[step / block_steps];
}

DemandProfile generate_demand(std::uint64_t seed, double hours, double block_minutes,
                              double lo, double hi, double dt, int lookahead_steps) {
  if (!(hours > 0) || !(block_minutes > 0) || !(dt > 0) || lookahead_steps < 0) {
    throw ArgumentError("demand: hours, block_minutes, and dt must be > 0");
  }
  if (!(lo < hi + 1e-12) || hi > 0) {
    throw ConfigError("demand: levels must satisfy lo < hi <= 0");
  }
  const double steps_per_block = block_minutes * 60.0 / dt;
  if (std::abs(steps_per_block - std::round(steps_per_block)) > 1e-9) {
    throw ConfigError("demand: block length must be divisible by dt");
  }

  DemandProfile profile;
  profile.seed = seed;
  profile.block_steps = static_cast<int>(std::round(steps_per_block));
  profile.total_steps =
      static_cast<int>(std::ceil(hours * 3600.0 / dt)) + lookahead_steps;
  const int n_blocks =
      (profile.total_steps + profile.block_steps - 1) / profile.block_steps;

  std::uint64_t state = seed;
  profile.levels.reserve(n_blocks);
  for (int b = 0; b < n_blocks; ++b) {
    profile.levels.push_back(lo + (hi - lo) * next_unit(state));
  }
  return profile;
}

}  // namespace btes
