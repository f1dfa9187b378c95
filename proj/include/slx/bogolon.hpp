#pragma once

#include <complex>
#include <utility>

namespace slx {

/// Bogoliubov rotation of a correlated dark-exciton pair (k+p, k-p) driven by
/// the pump-induced anomalous coupling V_mf. Amplitudes stand in for the
/// operators throughout.
struct BogoliubovCoeffs {
  double u = 1.0;
  double v = 0.0;
  double E0_tilde = 0.0;  // half the bogolon energy
  double E0_bar = 0.0;    // bogolon energy sqrt((E_a~ - E)^2 - V^2)
  double E_a_tilde = 0.0;
  double V_mf = 0.0;
  double E_drive = 0.0;
  double ground_shift = 0.0;  // c-number 1/2 (E0_bar - E_a~ + E) per mode
};

/// Requires E_a~ - E > V_mf >= 0. Throws InstabilityError when the gap
/// closes, SignRegimeError when E lies above E_a~, DomainError for V_mf < 0.
BogoliubovCoeffs coefficients(double E_a_tilde, double V_mf, double E_drive);

/// Steady-state bogolon amplitudes for a single probe at k+q:
/// C+ = -u F / E0_bar, C- = v F / E0_bar.
std::pair<std::complex<double>, std::complex<double>> bogolon_steady_state(
    const BogoliubovCoeffs& coeffs, std::complex<double> F_probe);

/// Inverse rotation: B+ = u C+ - v conj(C-), B- = u C- - v conj(C+).
std::pair<std::complex<double>, std::complex<double>> reconstruct_dark_amplitudes(
    const BogoliubovCoeffs& coeffs, std::complex<double> C_plus, std::complex<double> C_minus);

/// Dispersion-less bogolon energy E0_bar.
double bogolon_spectrum_energy(const BogoliubovCoeffs& coeffs);

}  // namespace slx
