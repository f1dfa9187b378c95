#include "slx/waveguide.hpp"

#include <cmath>
#include <limits>

#include "slx/errors.hpp"

namespace slx {

WaveguideConfig WaveguideConfig::from_resonance(double epsilon, double E_ph0, double u_b,
                                                double S_bar, double L) {
  WaveguideConfig wg;
  wg.epsilon = epsilon;
  wg.q0 = std::sqrt(epsilon) * E_ph0 / kConstants.hbar_c();
  wg.u_b = u_b;
  wg.S_bar = S_bar;
  wg.L = L;
  return wg;
}

void WaveguideConfig::validate(const SuperLatticeConfig& lattice) const {
  if (!(epsilon >= 1.0)) throw ConfigError("waveguide: epsilon must be >= 1");
  if (!(q0 > 0.0)) throw ConfigError("waveguide: q0 must be positive");
  if (!(u_b > 0.0) || !(u_b <= 1.0)) throw ConfigError("waveguide: require 0 < u_b <= 1");
  if (!(S_bar > 0.0)) throw ConfigError("waveguide: S_bar must be positive");
  const double expected = static_cast<double>(lattice.N) * lattice.a;
  if (!(std::abs(L - expected) <= 1e-12 * expected))
    throw ConfigError("waveguide: L must equal N*a");
}

double photon_dispersion(double q, const WaveguideConfig& wg) {
  return kConstants.hbar_c() / std::sqrt(wg.epsilon) * std::hypot(wg.q0, q);
}

double coupling_prefactor(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg) {
  const double e_ph = photon_dispersion(k, wg);
  return std::sqrt(e_ph * kConstants.inverse_eps0() / (wg.S_bar * cfg.a)) * wg.u_b * cfg.mu;
}

double coupling_bright(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg) {
  return coupling_prefactor(k, wg, cfg) * std::abs(std::cos(0.5 * k * cfg.R));
}

double coupling_dark(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg) {
  return coupling_prefactor(k, wg, cfg) * std::abs(std::sin(0.5 * k * cfg.R));
}

double dark_to_bright_ratio(double k, const WaveguideConfig& /*wg*/, const SuperLatticeConfig& cfg) {
  const double c = std::abs(std::cos(0.5 * k * cfg.R));
  if (c == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(std::sin(0.5 * k * cfg.R)) / c;
}

}  // namespace slx
