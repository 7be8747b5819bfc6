#include "btes/apu.hpp"

#include "btes/errors.hpp"

namespace btes {

void ApuParams::validate() const {
  if (nu < 1) throw ConfigError("apu.nu must be >= 1");
  if (!(q_vol > 0)) throw ConfigError("apu.q_vol must be > 0");
  if (!(c_w > 0)) throw ConfigError("apu.c_w must be > 0");
  if (!(u_min < u_max)) throw ConfigError("apu.u_min must be < apu.u_max");
}

ApuBlock assemble_apu(const ApuParams& params) {
  params.validate();
  return {1.0 / (params.nu * params.q_vol * params.c_w), 1.0 / params.nu};
}

}  // namespace btes
