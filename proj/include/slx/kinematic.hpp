#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slx/lattice.hpp"
#include "slx/waveguide.hpp"

namespace slx {

/// Contact interaction constants of the bosonized excitons.
struct InteractionParams {
  double m_c2 = 0.0;         // polariton effective mass energy (eV)
  double U = 0.0;            // on-site kinematic potential 4 pi (hbar c)^2 / (m c^2 a^2)
  double Delta = 0.0;        // U / N
  double Delta_tilde = 0.0;  // Delta * X2
  double X2 = 0.0;           // |X_k|^2 at the pump wavenumber
};

/// Coefficients of the four interaction terms kept for a pump at one k.
struct VertexSet {
  double pol_pol;         // Delta X^4 / 2
  double pol_dark_pair;   // Delta X^2 / 2, two polaritons <-> two dark excitons
  double pol_dark_cross;  // 2 Delta X^2, polariton-dark density coupling
  double dark_dark;       // Delta / 2
};

/// m c^2 = hbar c q0 sqrt(eps).
double effective_mass(const WaveguideConfig& wg);

/// Throws DomainError unless 0 <= X2 <= 1.
InteractionParams interaction_params(const WaveguideConfig& wg, const SuperLatticeConfig& cfg,
                                     double X2);

VertexSet vertex_set(const InteractionParams& ip);

struct ExclusionChannel {
  std::string name;
  double energy;  // two-excitation reference energy
  double gap;     // |E_e - energy|
  bool off_resonant;
};

struct ExclusionReport {
  double E_bound;  // 2 E_A + 2 V_dyn
  std::vector<ExclusionChannel> channels;
  bool excluded;   // every channel off-resonant
};

/// Compares the bound on-cell two-excitation energy against 2E_s, 2E_a, 2E_A
/// and, when given, twice the pumped lower-polariton energy.
/// Throws DomainError for a non-positive tolerance.
ExclusionReport double_excitation_excluded(const SuperLatticeConfig& cfg, double V_dyn,
                                           double tolerance,
                                           std::optional<double> E_lower_pump = std::nullopt);

}  // namespace slx
