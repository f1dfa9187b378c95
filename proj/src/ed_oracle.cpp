#include "slx/ed_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "slx/errors.hpp"

namespace slx {

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::size_t>(std::llround(r));
}

bool cell_doubly_excited(std::uint64_t s, int cell) {
  const std::uint64_t pair = std::uint64_t{3} << (2 * cell);
  return (s & pair) == pair;
}

int doubly_excited_cells(std::uint64_t s, int n_cells) {
  int count = 0;
  for (int c = 0; c < n_cells; ++c) count += cell_doubly_excited(s, c) ? 1 : 0;
  return count;
}

}  // namespace

PaulionBasis PaulionBasis::build(int n_cells, int n_exc) {
  if (n_cells < 1) throw DomainError("paulion basis: n_cells must be positive");
  if (n_exc < 0 || n_exc > 2) throw DomainError("paulion basis: n_exc must be 0, 1 or 2");
  const int atoms = 2 * n_cells;
  const std::size_t dim = binomial(atoms, n_exc);
  if (dim > kMaxSectorDimension) {
    std::ostringstream os;
    os << "paulion basis: sector dimension " << dim << " exceeds " << kMaxSectorDimension;
    throw SizeError(os.str());
  }
  // One bit per atom in a 64-bit mask.
  if (atoms > 64) throw DomainError("paulion basis: at most 32 cells fit the bitmask encoding");
  PaulionBasis b;
  b.n_cells = n_cells;
  b.n_exc = n_exc;
  b.states.reserve(dim);
  if (n_exc == 0) {
    b.states.push_back(0);
  } else if (n_exc == 1) {
    for (int i = 0; i < atoms; ++i) b.states.push_back(std::uint64_t{1} << i);
  } else {
    for (int i = 0; i < atoms; ++i)
      for (int j = i + 1; j < atoms; ++j)
        b.states.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
  }
  std::sort(b.states.begin(), b.states.end());
  return b;
}

long PaulionBasis::index_of(std::uint64_t state) const {
  const auto it = std::lower_bound(states.begin(), states.end(), state);
  if (it == states.end() || *it != state) return -1;
  return static_cast<long>(it - states.begin());
}

double atom_pair_coupling(const SuperLatticeConfig& cfg, int n_cells, int atom_i, int atom_j,
                          CouplingMode coupling_mode, Boundary boundary) {
  if (atom_i == atom_j) return 0.0;
  const int ci = atom_i / 2;
  const int cj = atom_j / 2;
  auto position = [&](int atom, int cell) {
    return cfg.a * cell + ((atom % 2) == 0 ? -0.5 : 0.5) * cfg.R;
  };
  double d = position(atom_j, cj) - position(atom_i, ci);
  int cell_sep = std::abs(cj - ci);
  if (boundary == Boundary::periodic) {
    const double ring = cfg.a * n_cells;
    d -= ring * std::round(d / ring);
    cell_sep = std::min(cell_sep, n_cells - cell_sep);
  }
  if (coupling_mode == CouplingMode::nearest_neighbor_cells && cell_sep > 1) return 0.0;
  return dipole_coupling(std::abs(d), cfg);
}

SectorHamiltonian build_sector(const SuperLatticeConfig& cfg, int n_cells, int n_exc,
                               CouplingMode coupling_mode, Boundary boundary, double V_dyn) {
  SectorHamiltonian h;
  h.basis = PaulionBasis::build(n_cells, n_exc);
  h.coupling_mode = coupling_mode;
  h.boundary = boundary;
  h.V_dyn = V_dyn;
  const std::size_t dim = h.basis.size();
  h.matrix = DenseMatrix(dim);

  const int atoms = 2 * n_cells;
  std::vector<double> pair(static_cast<std::size_t>(atoms * atoms), 0.0);
  for (int i = 0; i < atoms; ++i)
    for (int j = 0; j < atoms; ++j)
      pair[static_cast<std::size_t>(i * atoms + j)] =
          atom_pair_coupling(cfg, n_cells, i, j, coupling_mode, boundary);

  for (std::size_t s = 0; s < dim; ++s) {
    const std::uint64_t state = h.basis.states[s];
    h.matrix(s, s) = n_exc * cfg.E_A + 2.0 * V_dyn * doubly_excited_cells(state, n_cells);
    for (int i = 0; i < atoms; ++i) {
      if (!(state >> i & 1U)) continue;
      for (int j = 0; j < atoms; ++j) {
        if (state >> j & 1U) continue;
        const std::uint64_t moved = (state & ~(std::uint64_t{1} << i)) | (std::uint64_t{1} << j);
        const long t = h.basis.index_of(moved);
        h.matrix(s, static_cast<std::size_t>(t)) = pair[static_cast<std::size_t>(i * atoms + j)];
      }
    }
  }
  return h;
}

Eigensystem diagonalize(const SectorHamiltonian& h) { return jacobi_eigensystem(h.matrix); }

namespace {

std::vector<double> analytic_single_excitation(const SuperLatticeConfig& cfg, int n_cells) {
  SuperLatticeConfig ring = cfg;
  ring.N = n_cells;
  std::vector<double> out(static_cast<std::size_t>(n_cells), antisymmetric_energy(ring));
  for (double k : allowed_wavenumbers(ring)) out.push_back(symmetric_band(k, ring));
  std::sort(out.begin(), out.end());
  return out;
}

double max_gap(const std::vector<double>& x, const std::vector<double>& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

}  // namespace

double band_deviation(const SuperLatticeConfig& cfg, int n_cells, CouplingMode coupling_mode) {
  const SectorHamiltonian h = build_sector(cfg, n_cells, 1, coupling_mode, Boundary::periodic);
  return max_gap(diagonalize(h).values, analytic_single_excitation(cfg, n_cells));
}

BandReport validate_band(const SuperLatticeConfig& cfg, int n_cells) {
  if (n_cells < 3 || n_cells > 7 || n_cells % 2 == 0)
    throw DomainError("validate_band: n_cells must be odd and in [3, 7]");
  SuperLatticeConfig small = cfg;
  small.R = cfg.a / 100.0;
  small.N = n_cells;

  const SectorHamiltonian h =
      build_sector(small, n_cells, 1, CouplingMode::nearest_neighbor_cells, Boundary::periodic);
  const Eigensystem es = diagonalize(h);

  BandReport rep;
  rep.n_cells = n_cells;
  rep.R_used = small.R;
  rep.eigenvalues = es.values;
  rep.residual = eigen_residual(h.matrix, es);
  const double e_dark = antisymmetric_energy(small);
  rep.analytic = analytic_single_excitation(small, n_cells);
  rep.max_deviation = max_gap(rep.eigenvalues, rep.analytic);

  rep.J = dipole_coupling(small.a, small);
  const double x = small.R / small.a;
  const double c_plus = 1.0 / std::pow(1.0 + x, 3);
  const double c_minus = 1.0 / std::pow(1.0 - x, 3);
  rep.predicted_deviation = std::abs(rep.J) * std::abs(c_plus + c_minus - 2.0);

  const double window = rep.J != 0.0 ? 1e-3 * std::abs(rep.J) : 1e-12 * cfg.E_A;
  rep.deviation_over_J = rep.J != 0.0 ? rep.max_deviation / std::abs(rep.J) : 0.0;
  rep.within_contract = rep.max_deviation < window;
  for (double e : rep.eigenvalues) rep.dark_count += std::abs(e - e_dark) <= window ? 1 : 0;
  return rep;
}

BlockingReport validate_blocking(const SuperLatticeConfig& cfg, int n_cells, double V_dyn) {
  const SectorHamiltonian h = build_sector(cfg, n_cells, 2, CouplingMode::nearest_neighbor_cells,
                                           Boundary::periodic, V_dyn);
  const Eigensystem es = diagonalize(h);
  const ExcitonLevels lv = exciton_levels(cfg);

  BlockingReport rep;
  rep.n_cells = n_cells;
  rep.dimension = h.basis.size();
  rep.structural_ok = rep.dimension == binomial(2 * n_cells, 2);
  for (std::uint64_t s : h.basis.states) rep.structural_ok = rep.structural_ok && std::popcount(s) == 2;
  rep.manifold_2Es = 2.0 * lv.E_s;
  rep.manifold_2Ea = 2.0 * lv.E_a;
  rep.manifold_EsEa = lv.E_s + lv.E_a;

  std::vector<double> others;
  for (std::size_t j = 0; j < es.values.size(); ++j) {
    double weight = 0.0;
    for (std::size_t s = 0; s < rep.dimension; ++s)
      if (doubly_excited_cells(h.basis.states[s], n_cells) > 0)
        weight += es.vectors(s, j) * es.vectors(s, j);
    (weight > 0.5 ? rep.cluster : others).push_back(es.values[j]);
  }
  if (rep.cluster.empty()) return rep;

  double sum = 0.0;
  for (double e : rep.cluster) sum += e;
  rep.cluster_offset = sum / static_cast<double>(rep.cluster.size()) - 2.0 * cfg.E_A;
  rep.min_separation = std::numeric_limits<double>::infinity();
  for (double c : rep.cluster)
    for (double o : others) rep.min_separation = std::min(rep.min_separation, std::abs(c - o));
  rep.resonant = !(rep.min_separation > std::abs(lv.J0));
  return rep;
}

}  // namespace slx
