#pragma once

namespace btes {

struct ApuParams {
  int nu = 0;        // number of BHE
  double q_vol = 0;  // per-BHE volumetric flow [m^3/s]
  double c_w = 0;    // fluid volumetric heat capacity [J/(m^3 K)]
  double u_min = 0;  // input power bounds [W]
  double u_max = 0;

  void validate() const;
};

/// Two-state block [T_in, T_out]:
///   T_in(k+1)  = T_out(k) + b_coeff * u(k)
///   T_out(k+1) = mean over BHE of the top ascending fluid temperature
struct ApuBlock {
  double b_coeff = 0;      // 1 / (nu * q_vol * c_w) [K/W per step]
  double return_coeff = 0; // 1 / nu on each BHE's top ascending fluid state
};

ApuBlock assemble_apu(const ApuParams& params);

}  // namespace btes
