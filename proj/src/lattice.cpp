#include "slx/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slx/errors.hpp"

namespace slx {

namespace {

double angular_factor(double theta) {
  const double c = std::cos(theta);
  return 1.0 - 3.0 * c * c;
}

}  // namespace

void SuperLatticeConfig::validate() const {
  if (!(a > 0.0)) throw ConfigError("lattice: a must be positive");
  if (!(R > 0.0) || !(R < a)) throw ConfigError("lattice: require 0 < R < a");
  if (!(mu > 0.0)) throw ConfigError("lattice: mu must be positive");
  if (!(E_A > 0.0)) throw ConfigError("lattice: E_A must be positive");
  if (!(theta >= 0.0) || !(theta <= std::numbers::pi / 2.0 + 1e-15))
    throw ConfigError("lattice: theta must lie in [0, pi/2]");
  if (N < 3 || N % 2 == 0)
    throw ConfigError("lattice: N must be odd and >= 3 (got " + std::to_string(N) + ")");
}

double magic_angle() { return std::acos(1.0 / std::sqrt(3.0)); }

double dipole_coupling(double r, const SuperLatticeConfig& cfg) {
  if (!(r > 0.0)) throw DomainError("dipole_coupling: distance must be positive");
  return kConstants.coulomb_mu2_prefactor() * cfg.mu * cfg.mu * angular_factor(cfg.theta) /
         (r * r * r);
}

ExcitonLevels exciton_levels(const SuperLatticeConfig& cfg) {
  const double J0 = dipole_coupling(cfg.R, cfg);
  const double J = dipole_coupling(cfg.a, cfg);
  return {cfg.E_A + J0, cfg.E_A - J0, J0, J};
}

IntercellCouplings intercell_couplings(const SuperLatticeConfig& cfg) {
  if (!(cfg.a > cfg.R)) throw DomainError("intercell_couplings: require a > R");
  return {dipole_coupling(cfg.a, cfg), dipole_coupling(cfg.a + cfg.R, cfg),
          dipole_coupling(cfg.a - cfg.R, cfg)};
}

double fold_to_zone(double k, double a) {
  const double g = 2.0 * std::numbers::pi / a;
  double folded = k - g * std::floor(k / g);  // [0, g)
  if (folded > 0.5 * g) folded -= g;
  return folded;
}

double symmetric_band(double k, const SuperLatticeConfig& cfg) {
  const double edge = std::numbers::pi / cfg.a;
  if (std::abs(k) > edge * (1.0 + 1e-12))
    throw DomainError("symmetric_band: k outside the first Brillouin zone");
  const ExcitonLevels lv = exciton_levels(cfg);
  return cfg.E_A + lv.J0 + 4.0 * lv.J * std::cos(k * cfg.a);
}

double antisymmetric_energy(const SuperLatticeConfig& cfg) {
  return cfg.E_A - dipole_coupling(cfg.R, cfg);
}

std::vector<double> allowed_wavenumbers(const SuperLatticeConfig& cfg) {
  const long M = (cfg.N - 1) / 2;
  const double step = 2.0 * std::numbers::pi / (static_cast<double>(cfg.N) * cfg.a);
  std::vector<double> ks;
  ks.reserve(static_cast<std::size_t>(cfg.N));
  for (long p = -M; p <= M; ++p) ks.push_back(step * static_cast<double>(p));
  return ks;
}

}  // namespace slx
