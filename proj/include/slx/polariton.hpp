#pragma once

#include "slx/lattice.hpp"
#include "slx/waveguide.hpp"

namespace slx {

enum class Branch { upper, lower };

/// Diagonalized bright-exciton/photon pair at one wavenumber. The state
/// vector of a branch in the (photon, exciton) basis is (Y, X).
struct HopfieldMode {
  double k = 0.0;
  double E_upper = 0.0;
  double E_lower = 0.0;
  double X_upper = 0.0;
  double Y_upper = 0.0;
  double X_lower = 0.0;
  double Y_lower = 0.0;
  double delta = 0.0;  // (E_ph - E_s(k)) / 2
  double D = 0.0;      // sqrt(delta^2 + f^2)
  double E_ph = 0.0;
  double E_s = 0.0;
  double f = 0.0;      // |f_k^s|

  double energy(Branch b) const { return b == Branch::upper ? E_upper : E_lower; }
  double exciton_fraction(Branch b) const {
    const double x = b == Branch::upper ? X_upper : X_lower;
    return x * x;
  }
  double photon_fraction(Branch b) const {
    const double y = b == Branch::upper ? Y_upper : Y_lower;
    return y * y;
  }
};

/// Throws DegenerateModeError when coupling and detuning both vanish.
HopfieldMode hopfield(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg);

/// Largest deviation of the rotated 2x2 Hamiltonian from diag(E_upper, E_lower).
double verify_diagonalization(const HopfieldMode& mode, const WaveguideConfig& wg,
                              const SuperLatticeConfig& cfg);

/// Wavenumber k >= 0 where the branch energy equals `target` (to 1e-12 eV).
/// A 1000-point scan on [0, pi/a] brackets the root, bisection refines it.
/// Throws NoSolutionError / AmbiguousSolutionError.
double find_resonance_k(double target, Branch branch, const WaveguideConfig& wg,
                        const SuperLatticeConfig& cfg);

}  // namespace slx
