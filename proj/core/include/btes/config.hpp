#pragma once

#include <string>
#include <vector>

#include "btes/apu.hpp"
#include "btes/bhe.hpp"
#include "btes/ground.hpp"
#include "btes/mesh.hpp"
#include "btes/mpc/ocp.hpp"

namespace btes {

struct Config {
  GroundParams ground;
  MeshSpec mesh;
  BheParams bhe;
  ApuParams apu;
  OcpConfig ocp;
  double fluid_density = 0;  // [kg/m^3]
  double mass_flow = 0;      // per-BHE process fluid flow [kg/s]
  // Explicit-Euler substeps per sampling interval dt. The sampled system
  // keeps dt; the generator integrates at dt / substeps so the stiff fluid
  // transport stays inside its stability limit.
  int substeps = 1;

  void validate() const;
};

/// Strict JSON config loader: unknown keys are rejected, violated invariants
/// are reported with their key path.
Config load_config(const std::string& path);
Config parse_config(const std::string& json_text);

/// Single-BHE, zero-groundwater-flow variant used by the thermal-response-test
/// validation workflow. The BHE sits at the domain center.
Config validation_variant(const Config& cfg);

}  // namespace btes
