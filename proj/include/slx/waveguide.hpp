#pragma once

#include "slx/lattice.hpp"

namespace slx {

/// Single guided photon mode. The atom-waveguide distance enters only
/// through the mode amplitude u_b.
struct WaveguideConfig {
  double epsilon = 2.0;  // effective dielectric constant
  double q0 = 0.0;       // confinement wavenumber (1/Angstrom)
  double u_b = 0.25;     // mode function at the lattice position
  double S_bar = 0.0;    // effective photon cross-section (Angstrom^2)
  double L = 0.0;        // waveguide length, N*a (Angstrom)

  /// Chooses q0 so that the photon energy at q = 0 equals E_ph0.
  static WaveguideConfig from_resonance(double epsilon, double E_ph0, double u_b,
                                        double S_bar, double L);

  /// Throws ConfigError when an invariant is violated, including L != N*a.
  void validate(const SuperLatticeConfig& lattice) const;

  /// Photon quantization volume S_bar * L.
  double photon_volume() const { return S_bar * L; }
};

/// (hbar c / sqrt(eps)) sqrt(q0^2 + q^2).
double photon_dispersion(double q, const WaveguideConfig& wg);

/// sqrt(E_ph(k) / (eps0 S_bar a)) u_b mu, the k-dependent coupling scale
/// shared by the bright and dark channels.
double coupling_prefactor(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg);

/// |f_k^s| = prefactor * |cos(k R / 2)|.
double coupling_bright(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg);

/// |f_k^a| = prefactor * |sin(k R / 2)|.
double coupling_dark(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg);

/// coupling_dark / coupling_bright; quantifies dropping the dark channel.
double dark_to_bright_ratio(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg);

}  // namespace slx
