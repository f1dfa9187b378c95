#pragma once

#include <numbers>
#include <stdexcept>

namespace slx {

// Unit system: energies in eV, lengths in Angstrom, dipoles in e*Angstrom,
// wavenumbers in 1/Angstrom, time in hbar/eV.
class PhysicalConstants {
 public:
  constexpr PhysicalConstants(double hbar_c, double coulomb_mu2_prefactor)
      : hbar_c_(hbar_c), coulomb_(coulomb_mu2_prefactor) {
    if (!(hbar_c > 0.0) || !(coulomb_mu2_prefactor > 0.0)) {
      throw std::invalid_argument("physical constants must be strictly positive");
    }
  }

  /// hbar*c in eV*Angstrom.
  constexpr double hbar_c() const { return hbar_c_; }
  /// 1/(4 pi eps0) in eV*Angstrom^3 per (e*Angstrom)^2.
  constexpr double coulomb_mu2_prefactor() const { return coulomb_; }
  /// 1/eps0 in the same units.
  constexpr double inverse_eps0() const { return 4.0 * std::numbers::pi * coulomb_; }

 private:
  double hbar_c_;
  double coulomb_;
};

inline constexpr PhysicalConstants kConstants{1973.269804, 14.399645};

inline constexpr double kDegree = std::numbers::pi / 180.0;

}  // namespace slx
