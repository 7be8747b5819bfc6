#pragma once

#include <cstdint>
#include <vector>

namespace btes {

/// Piecewise-constant heat demand, one seeded uniform draw per block.
struct DemandProfile {
  int block_steps = 0;
  std::vector<double> levels;  // [W]
  int total_steps = 0;
  std::uint64_t seed = 0;

  double at(int step) const;
};

/// Blocks of `block_minutes` with levels drawn uniformly in [lo, hi]. The
/// profile covers `hours` plus `lookahead_steps` extra steps so a predictive
/// controller can read beyond the runtime window. block_minutes*60 must be
/// divisible by dt.
DemandProfile generate_demand(std::uint64_t seed, double hours, double block_minutes,
                              double lo, double hi, double dt, int lookahead_steps = 0);

}  // namespace btes
