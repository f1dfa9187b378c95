#pragma once

#include <cstdint>
#include <vector>

#include "slx/jacobi.hpp"
#include "slx/lattice.hpp"

namespace slx {

enum class CouplingMode { nearest_neighbor_cells, full_dipole_sum };
enum class Boundary { periodic, open };

/// Fixed-excitation-number sector of 2*n_cells two-level atoms. Atom 2n is
/// the left atom of cell n (z = a n - R/2), atom 2n+1 the right one.
struct PaulionBasis {
  int n_cells = 0;
  int n_exc = 0;
  std::vector<std::uint64_t> states;  // ascending bitmasks, popcount == n_exc

  static PaulionBasis build(int n_cells, int n_exc);
  /// Index of a bitmask in `states`, or -1.
  long index_of(std::uint64_t state) const;
  std::size_t size() const { return states.size(); }
};

struct SectorHamiltonian {
  PaulionBasis basis;
  DenseMatrix matrix;
  CouplingMode coupling_mode = CouplingMode::nearest_neighbor_cells;
  Boundary boundary = Boundary::periodic;
  double V_dyn = 0.0;
};

inline constexpr std::size_t kMaxSectorDimension = 10000;

/// Paulion Hamiltonian with resonant dipole hopping and an on-cell
/// dynamical shift 2 V_dyn for doubly excited cells. Periodic distances use
/// the minimum image on a ring of length n_cells * a.
/// Throws SizeError above kMaxSectorDimension, DomainError for bad arguments.
SectorHamiltonian build_sector(const SuperLatticeConfig& cfg, int n_cells, int n_exc,
                               CouplingMode coupling_mode, Boundary boundary, double V_dyn = 0.0);

/// Coupling between two atoms in the sector geometry; 0 when the pair is
/// dropped by the coupling mode.
double atom_pair_coupling(const SuperLatticeConfig& cfg, int n_cells, int atom_i, int atom_j,
                          CouplingMode coupling_mode, Boundary boundary);

Eigensystem diagonalize(const SectorHamiltonian& h);

struct BandReport {
  int n_cells = 0;
  double R_used = 0.0;
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> analytic;     // {E_a x n} U {E_s(k)}, ascending
  double max_deviation = 0.0;       // eV
  double J = 0.0;
  double deviation_over_J = 0.0;    // 0 when J = 0
  /// Leading correction of the a >> R truncation, |J| |c(a+R) + c(a-R) - 2| max|cos ka|
  /// with c(r) = (a/r)^3.
  double predicted_deviation = 0.0;
  int dark_count = 0;               // eigenvalues within 1e-3 |J| of E_a
  double residual = 0.0;
  bool within_contract = false;     // max_deviation < 1e-3 |J| (or 1e-12 E_A when J = 0)
};

/// Largest gap between the periodic single-excitation spectrum (using cfg.R
/// as given) and the analytic dark level plus nearest-neighbor band, in eV.
double band_deviation(const SuperLatticeConfig& cfg, int n_cells, CouplingMode coupling_mode);

/// Periodic nearest-neighbor single-excitation sector with R = a/100,
/// compared with the analytic dark level and symmetric band.
/// Throws DomainError unless n_cells is odd and in [3, 7].
BandReport validate_band(const SuperLatticeConfig& cfg, int n_cells);

struct BlockingReport {
  int n_cells = 0;
  std::size_t dimension = 0;
  bool structural_ok = false;     // no atom carries two excitations
  std::vector<double> cluster;    // eigenvalues dominated by doubly excited cells
  double cluster_offset = 0.0;    // mean(cluster) - 2 E_A
  double min_separation = 0.0;    // smallest gap between cluster and other levels
  double manifold_2Es = 0.0;
  double manifold_2Ea = 0.0;
  double manifold_EsEa = 0.0;
  bool resonant = true;           // cluster not separated by more than |J0|
};

/// Two-excitation periodic nearest-neighbor sector with the dynamical shift.
BlockingReport validate_blocking(const SuperLatticeConfig& cfg, int n_cells, double V_dyn);

}  // namespace slx
