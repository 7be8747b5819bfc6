#pragma once

#include <vector>

namespace btes {

enum class ConstrainedStates { All, None, List };

struct OcpConfig {
  int H = 0;        // prediction horizon [steps]
  double R = 0;     // tracking weight
  double Q = 0;     // input-rate weight
  double x_lo = 0;  // state bounds [K]
  double x_hi = 0;
  double u_lo = 0;  // input bounds [W]
  double u_hi = 0;
  ConstrainedStates constrained = ConstrainedStates::All;
  std::vector<int> constrained_list;

  void validate() const;
};

}  // namespace btes
