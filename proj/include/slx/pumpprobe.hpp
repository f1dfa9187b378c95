#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "slx/kinematic.hpp"
#include "slx/polariton.hpp"

namespace slx {

using cplx = std::complex<double>;

/// Pump at k_pump on the lower polariton branch, probes on the dark band at
/// k_pump +/- q. All fields share the rotating-frame energy E_drive. Damping
/// rates are carried as energies hbar*Gamma.
struct DriveConfig {
  double E_drive = 0.0;
  cplx F_pump{};
  cplx F_probe_plus{};
  cplx F_probe_minus{};
  double Gamma_ph = 1e-10;
  double Gamma_s = 1e-8;
  double Gamma_a = 1e-12;
  double k_pump = 0.0;
  double q = 0.0;
  /// When set, the pump occupation is taken as given and the pump amplitude
  /// magnitude is inferred from it; otherwise it is solved self-consistently.
  std::optional<double> N_prescribed;

  void validate() const;
};

/// Everything the mean-field model needs about the pumped system.
struct PumpProbeModel {
  HopfieldMode mode;              // at the pump wavenumber
  InteractionParams interaction;  // X2 taken from the lower branch of `mode`
  double E_dark = 0.0;            // bare antisymmetric level E_a
};

PumpProbeModel make_pump_probe_model(const SuperLatticeConfig& cfg, const WaveguideConfig& wg,
                                     double k_pump);

/// Lower-branch damping 1/2 |X|^2 Gamma_s + 1/2 |Y|^2 Gamma_ph.
double polariton_damping(const HopfieldMode& mode, const DriveConfig& drive);

struct PumpOccupation {
  double N = 0.0;
  double E_pol_tilde = 0.0;  // E_lower + Delta X^4 N
  double Gamma_pol = 0.0;
  cplx F_pump{};             // drive amplitude consistent with N
  int iterations = 0;
};

/// Solves the occupation by damped fixed-point iteration, falling back to the
/// bracketed cubic root when the iteration stalls. Throws BistabilityError
/// when it stalls and several occupations are steady.
PumpOccupation pump_occupation(const DriveConfig& drive, const PumpProbeModel& model);

struct SteadyState {
  cplx A_amp{};
  double N_pump = 0.0;
  cplx B_plus{};
  cplx B_minus{};
  double I_plus = 0.0;
  double I_minus = 0.0;
  double E_a_tilde = 0.0;
  double E_pol_tilde = 0.0;
  double V_mf = 0.0;
  double Gamma_pol = 0.0;
  double E_res_plus = 0.0;  // E_a~ +/- sqrt(V^2 - (hbar Gamma_a)^2)
  double E_res_minus = 0.0;
  bool split = false;       // false when damping merges the two resonances
};

/// Solves the coupled (B+, conj B-) steady state. Throws PoleError when the
/// drive sits exactly on a resonance of the undamped system.
SteadyState steady_state(const DriveConfig& drive, const PumpProbeModel& model);

struct SpectrumPoint {
  double E_offset;        // E - E_a
  double I_minus_scaled;  // I_{k-q} / I_probe
  double I_plus_scaled;   // I_{k+q} / I_probe
};

/// Intensities over drive energies E = E_a + offset. I_probe is the summed
/// probe intensity |F+|^2 + |F-|^2. A grid point landing exactly on a pole
/// yields +infinity.
std::vector<SpectrumPoint> spectrum(const DriveConfig& drive, const PumpProbeModel& model,
                                    std::span<const double> E_offsets);

/// Interior strict local maxima (v[i-1] < v[i] >= v[i+1]).
std::vector<std::size_t> local_maxima(std::span<const double> values);

struct TrajectorySample {
  double t;  // in hbar/eV
  cplx A;
  cplx B_plus;
  cplx B_minus;
};

/// Classical RK4 integration of the rotating-frame mean-field equations from
/// zero amplitudes. The coefficients are frozen at the steady-state pump
/// occupation. Returns at most `max_samples` evenly strided samples, always
/// including t = 0 and t = t_end. Throws StabilityError if dt exceeds 0.1
/// over the largest rate.
std::vector<TrajectorySample> time_evolve(const DriveConfig& drive, const PumpProbeModel& model,
                                          double t_end, double dt,
                                          std::size_t max_samples = 1000);

}  // namespace slx
