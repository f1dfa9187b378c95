#pragma once

#include <vector>

#include "slx/constants.hpp"

namespace slx {

/// One-dimensional super-lattice with two identical two-level atoms per cell.
struct SuperLatticeConfig {
  double E_A = 1.5;      // atomic transition energy (eV)
  double a = 1000.0;     // distance between cell centers (Angstrom)
  double R = 100.0;      // on-cell atom separation (Angstrom)
  double mu = 2.5;       // transition dipole (e*Angstrom)
  double theta = 80.0 * kDegree;  // dipole angle to the lattice axis (rad)
  long N = 100001;       // number of cells, odd

  /// Throws ConfigError when an invariant is violated.
  void validate() const;
};

struct ExcitonLevels {
  double E_s;  // symmetric (bright) on-cell level
  double E_a;  // antisymmetric (dark) on-cell level
  double J0;   // intra-cell coupling
  double J;    // nearest-neighbor inter-cell coupling
};

struct IntercellCouplings {
  double J11;  // same-sublattice pair, distance a
  double J12;  // distance a + R
  double J21;  // distance a - R
};

/// Angle at which 1 - 3cos^2(theta) vanishes.
double magic_angle();

/// Resonant dipole-dipole coupling between two parallel dipoles at distance r.
/// Throws DomainError for r <= 0.
double dipole_coupling(double r, const SuperLatticeConfig& cfg);

ExcitonLevels exciton_levels(const SuperLatticeConfig& cfg);

/// Throws DomainError unless a > R.
IntercellCouplings intercell_couplings(const SuperLatticeConfig& cfg);

/// Map k into (-pi/a, pi/a].
double fold_to_zone(double k, double a);

/// E_A + J0 + 4 J cos(k a), nearest-neighbor band. k must lie in the first
/// zone (a relative slack of 1e-12 at the edge is tolerated).
double symmetric_band(double k, const SuperLatticeConfig& cfg);

/// Dispersion-less dark level E_A - J0.
double antisymmetric_energy(const SuperLatticeConfig& cfg);

/// 2 pi p / (N a), p = -M..M, ascending.
std::vector<double> allowed_wavenumbers(const SuperLatticeConfig& cfg);

}  // namespace slx
