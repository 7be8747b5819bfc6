#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "btes/apu.hpp"
#include "btes/bhe.hpp"
#include "btes/ground.hpp"
#include "btes/mesh.hpp"
#include "btes/sparse.hpp"

namespace btes {

/// Global state ordering: [T_in, T_out] ++ per-BHE 4*sigma states ++ ground
/// cells 0..n_x*n_y-1. A ground-only system has n_apu = 0 and nu = 0.
struct StateLayout {
  int n_apu = 2;
  int nu = 0;
  int sigma = 0;
  int n_ground = 0;

  int n() const { return n_apu + nu * 4 * sigma + n_ground; }
  int t_in() const { return 0; }
  int t_out() const { return 1; }
  int bhe_state(int j, int local) const { return n_apu + j * 4 * sigma + local; }
  int ground_state(int cell) const { return n_apu + nu * 4 * sigma + cell; }
};

/// x(k+1) = A x(k) + B u(k) + f over one sampling interval dt.
///
/// The stored (A, B, f) form the explicit-Euler generator at the internal
/// step dt / substeps; one call to step() composes the generator `substeps`
/// times under a zero-order hold on u. With substeps = 1 the generator and
/// the sampled map coincide. Sub-stepping keeps the sampled interval at dt
/// while honouring the generator's stability limit (the fluid advection
/// Courant number exceeds 1 at large dt).
struct AffineSystem {
  CsrMatrix A;
  std::vector<double> B;
  std::vector<double> f;
  StateLayout layout;
  double dt = 0;
  int substeps = 1;

  std::vector<double> step(std::span<const double> x, double u) const;
  void step_into(std::span<const double> x, double u, std::span<double> out) const;

  /// Linear part of the sampled map: out = A^substeps x.
  void apply_A_eff(std::span<const double> x, std::span<double> out) const;
  /// Input column of the sampled map: sum_{j<substeps} A^j B.
  std::vector<double> effective_B() const;
  /// Offset of the sampled map: sum_{j<substeps} A^j f.
  std::vector<double> effective_f() const;
};

AffineSystem assemble_system(const Mesh& mesh, const std::vector<CellClass>& classes,
                             const GroundParams& ground, const BheParams& bhe,
                             const ApuParams& apu, int substeps = 1);

/// Ground states only; the BHE source slots are omitted (no coupling targets).
AffineSystem assemble_ground_system(const Mesh& mesh, const GroundParams& ground,
                                    const std::vector<CellClass>& classes);

/// State vector with every temperature at T_amb.
std::vector<double> ambient_state(const AffineSystem& sys, double T_amb);

/// Power-iteration estimate of the spectral radius. Deterministic for a given
/// seed; the growth factor is averaged over a trailing window so complex
/// dominant pairs converge too.
double spectral_radius(const CsrMatrix& a, int iterations, std::uint64_t seed);
double spectral_radius(const AffineSystem& sys, int iterations, std::uint64_t seed);

}  // namespace btes
