#include "btes/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "btes/errors.hpp"

namespace btes {

using nlohmann::json;

void OcpConfig::validate() const {
  if (H < 1) throw ConfigError("ocp.H must be >= 1");
  if (R < 0 || Q < 0 || R + Q <= 0) throw ConfigError("ocp.R and ocp.Q must be >= 0 with R + Q > 0");
  if (!(x_lo < x_hi)) throw ConfigError("ocp.x_lo must be < ocp.x_hi");
  if (!(u_lo < u_hi)) throw ConfigError("ocp.u_lo must be < ocp.u_hi");
}

void Config::validate() const {
  ground.validate();
  mesh.validate();
  bhe.validate();
  apu.validate();
  ocp.validate();
  if (!(fluid_density > 0)) throw ConfigError("fluid_density must be > 0");
  if (!(mass_flow > 0)) throw ConfigError("mass_flow must be > 0");
  if (substeps < 1) throw ConfigError("substeps must be >= 1");
}

namespace {

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError("config: " + path + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("config: unknown key " + (path.empty() ? key : path + "." + key));
    }
  }
}

double num(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("config: missing key " + path + "." + key);
  if (!obj[key].is_number()) throw ConfigError("config: " + path + "." + key + " must be a number");
  return obj[key].get<double>();
}

int integer(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("config: missing key " + path + "." + key);
  if (!obj[key].is_number_integer()) {
    throw ConfigError("config: " + path + "." + key + " must be an integer");
  }
  return obj[key].get<int>();
}

}  // namespace

Config parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  check_keys(root, "", {"ground", "mesh", "bhe", "apu", "ocp", "fluid_density", "mass_flow",
                        "substeps"});

  Config cfg;
  cfg.fluid_density = num(root, "", "fluid_density");
  cfg.mass_flow = num(root, "", "mass_flow");
  if (root.contains("substeps")) cfg.substeps = integer(root, "", "substeps");
  if (!(cfg.fluid_density > 0)) throw ConfigError("config: fluid_density must be > 0");
  const double q_vol = cfg.mass_flow / cfg.fluid_density;

  if (!root.contains("ground")) throw ConfigError("config: missing key ground");
  const json& g = root["ground"];
  check_keys(g, "ground", {"c_g", "c_w", "lambda", "phi", "v_x", "v_y", "T_amb", "dt"});
  cfg.ground.c_g = num(g, "ground", "c_g");
  cfg.ground.c_w = num(g, "ground", "c_w");
  cfg.ground.lambda = num(g, "ground", "lambda");
  cfg.ground.phi = num(g, "ground", "phi");
  cfg.ground.v_x = num(g, "ground", "v_x");
  cfg.ground.v_y = num(g, "ground", "v_y");
  cfg.ground.T_amb = num(g, "ground", "T_amb");
  cfg.ground.dt = num(g, "ground", "dt");

  if (!root.contains("mesh")) throw ConfigError("config: missing key mesh");
  const json& m = root["mesh"];
  check_keys(m, "mesh", {"domain_size_x", "domain_size_y", "fine_edge", "coarse_edge",
                         "fine_region", "bhe_positions"});
  cfg.mesh.domain_size_x = num(m, "mesh", "domain_size_x");
  cfg.mesh.domain_size_y = num(m, "mesh", "domain_size_y");
  cfg.mesh.fine_edge = num(m, "mesh", "fine_edge");
  cfg.mesh.coarse_edge = num(m, "mesh", "coarse_edge");
  if (!m.contains("fine_region")) throw ConfigError("config: missing key mesh.fine_region");
  const json& fr = m["fine_region"];
  check_keys(fr, "mesh.fine_region", {"x0", "y0", "x1", "y1"});
  cfg.mesh.fine_region = {num(fr, "mesh.fine_region", "x0"), num(fr, "mesh.fine_region", "y0"),
                          num(fr, "mesh.fine_region", "x1"), num(fr, "mesh.fine_region", "y1")};
  if (!m.contains("bhe_positions") || !m["bhe_positions"].is_array()) {
    throw ConfigError("config: mesh.bhe_positions must be an array");
  }
  for (const auto& p : m["bhe_positions"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ConfigError("config: mesh.bhe_positions entries must be [x, y] pairs");
    }
    cfg.mesh.bhe_positions.push_back({p[0].get<double>(), p[1].get<double>()});
  }

  if (!root.contains("bhe")) throw ConfigError("config: missing key bhe");
  const json& b = root["bhe"];
  check_keys(b, "bhe", {"sigma", "l", "C_w", "C_b", "R_fb", "R_bb", "R_gb"});
  cfg.bhe.sigma = integer(b, "bhe", "sigma");
  cfg.bhe.l = num(b, "bhe", "l");
  cfg.bhe.C_w = num(b, "bhe", "C_w");
  cfg.bhe.C_b = num(b, "bhe", "C_b");
  cfg.bhe.R_fb = num(b, "bhe", "R_fb");
  cfg.bhe.R_bb = num(b, "bhe", "R_bb");
  cfg.bhe.R_gb = num(b, "bhe", "R_gb");
  cfg.bhe.q_vol = q_vol;
  cfg.bhe.c_w = cfg.ground.c_w;
  cfg.bhe.dt = cfg.ground.dt;

  if (!root.contains("apu")) throw ConfigError("config: missing key apu");
  const json& a = root["apu"];
  check_keys(a, "apu", {"u_min", "u_max"});
  cfg.apu.u_min = num(a, "apu", "u_min");
  cfg.apu.u_max = num(a, "apu", "u_max");
  cfg.apu.nu = static_cast<int>(cfg.mesh.bhe_positions.size());
  cfg.apu.q_vol = q_vol;
  cfg.apu.c_w = cfg.ground.c_w;

  if (!root.contains("ocp")) throw ConfigError("config: missing key ocp");
  const json& o = root["ocp"];
  check_keys(o, "ocp", {"H", "R", "Q", "x_lo", "x_hi", "constrained_states"});
  cfg.ocp.H = integer(o, "ocp", "H");
  cfg.ocp.R = num(o, "ocp", "R");
  cfg.ocp.Q = num(o, "ocp", "Q");
  cfg.ocp.x_lo = num(o, "ocp", "x_lo");
  cfg.ocp.x_hi = num(o, "ocp", "x_hi");
  cfg.ocp.u_lo = cfg.apu.u_min;
  cfg.ocp.u_hi = cfg.apu.u_max;
  if (o.contains("constrained_states")) {
    const json& cs = o["constrained_states"];
    if (cs.is_string() && cs.get<std::string>() == "all") {
      cfg.ocp.constrained = ConstrainedStates::All;
    } else if (cs.is_string() && cs.get<std::string>() == "none") {
      cfg.ocp.constrained = ConstrainedStates::None;
    } else if (cs.is_array()) {
      cfg.ocp.constrained = ConstrainedStates::List;
      for (const auto& idx : cs) {
        if (!idx.is_number_integer()) {
          throw ConfigError("config: ocp.constrained_states list entries must be integers");
        }
        cfg.ocp.constrained_list.push_back(idx.get<int>());
      }
    } else {
      throw ConfigError("config: ocp.constrained_states must be \"all\", \"none\", or a list");
    }
  }

  cfg.validate();
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Config validation_variant(const Config& cfg) {
  Config v = cfg;
  v.ground.v_x = 0;
  v.ground.v_y = 0;
  v.mesh.bhe_positions = {{0.5 * cfg.mesh.domain_size_x, 0.5 * cfg.mesh.domain_size_y}};
  v.apu.nu = 1;
  v.validate();
  return v;
}

}  // namespace btes
