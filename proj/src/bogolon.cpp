#include "slx/bogolon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slx/errors.hpp"

namespace slx {

BogoliubovCoeffs coefficients(double E_a_tilde, double V_mf, double E_drive) {
  if (!(V_mf >= 0.0)) throw DomainError("bogolon: V_mf must be non-negative");
  const double x = E_a_tilde - E_drive;
  if (!(std::abs(x) > V_mf)) {
    std::ostringstream os;
    os << "bogolon: gap closed, |E_a~ - E| = " << std::abs(x) << " <= V = " << V_mf;
    throw InstabilityError(os.str());
  }
  if (x < 0.0) throw SignRegimeError("bogolon: E above the renormalized dark level is not supported");

  BogoliubovCoeffs c;
  c.E_a_tilde = E_a_tilde;
  c.V_mf = V_mf;
  c.E_drive = E_drive;
  c.E0_bar = std::sqrt((x - V_mf) * (x + V_mf));
  c.E0_tilde = 0.5 * c.E0_bar;
  // v^2 = (x - E0_bar) / (2 E0_bar), with x - E0_bar = V^2 / (x + E0_bar).
  const double v2 = 0.5 * V_mf * V_mf / ((x + c.E0_bar) * c.E0_bar);
  c.v = std::sqrt(v2);
  c.u = std::sqrt(1.0 + v2);
  c.ground_shift = 0.5 * (c.E0_bar - x);

  const double lhs = 0.5 * V_mf * (c.u * c.u + c.v * c.v);
  const double rhs = x * c.u * c.v;
  if (std::abs(lhs - rhs) > 1e-12 * std::max(std::abs(lhs), std::abs(rhs)))
    throw NumericalError("bogolon: anomalous-term cancellation failed");
  return c;
}

std::pair<std::complex<double>, std::complex<double>> bogolon_steady_state(
    const BogoliubovCoeffs& coeffs, std::complex<double> F_probe) {
  if (!(coeffs.E0_bar > 0.0)) throw PoleError("bogolon_steady_state: zero bogolon energy");
  return {-coeffs.u * F_probe / coeffs.E0_bar, coeffs.v * F_probe / coeffs.E0_bar};
}

std::pair<std::complex<double>, std::complex<double>> reconstruct_dark_amplitudes(
    const BogoliubovCoeffs& coeffs, std::complex<double> C_plus, std::complex<double> C_minus) {
  return {coeffs.u * C_plus - coeffs.v * std::conj(C_minus),
          coeffs.u * C_minus - coeffs.v * std::conj(C_plus)};
}

double bogolon_spectrum_energy(const BogoliubovCoeffs& coeffs) { return coeffs.E0_bar; }

}  // namespace slx
