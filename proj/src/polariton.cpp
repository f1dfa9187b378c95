#include "slx/polariton.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "slx/errors.hpp"

namespace slx {

HopfieldMode hopfield(double k, const WaveguideConfig& wg, const SuperLatticeConfig& cfg) {
  HopfieldMode m;
  m.k = k;
  m.E_ph = photon_dispersion(k, wg);
  m.E_s = symmetric_band(k, cfg);
  m.f = coupling_bright(k, wg, cfg);
  m.delta = 0.5 * (m.E_ph - m.E_s);
  m.D = std::hypot(m.delta, m.f);
  if (m.D == 0.0)
    throw DegenerateModeError("hopfield: zero coupling at zero detuning, amplitudes undefined");

  const double mean = 0.5 * (m.E_ph + m.E_s);
  m.E_upper = mean + m.D;
  m.E_lower = mean - m.D;

  // D - delta and D + delta without cancellation: their product is f^2.
  double d_minus = 0.0;
  double d_plus = 0.0;
  if (m.delta >= 0.0) {
    d_plus = m.D + m.delta;
    d_minus = m.f * m.f / d_plus;
  } else {
    d_minus = m.D - m.delta;
    d_plus = m.f * m.f / d_minus;
  }
  const double two_d = 2.0 * m.D;
  m.X_upper = std::sqrt(d_minus / two_d);
  m.Y_upper = std::sqrt(d_plus / two_d);
  m.X_lower = -std::sqrt(d_plus / two_d);
  m.Y_lower = std::sqrt(d_minus / two_d);
  return m;
}

double verify_diagonalization(const HopfieldMode& mode, const WaveguideConfig& wg,
                              const SuperLatticeConfig& cfg) {
  const double e_ph = photon_dispersion(mode.k, wg);
  const double e_s = symmetric_band(mode.k, cfg);
  const double f = coupling_bright(mode.k, wg, cfg);
  const std::array<std::array<double, 2>, 2> h{{{e_ph, f}, {f, e_s}}};
  const std::array<std::array<double, 2>, 2> u{
      {{mode.Y_upper, mode.X_upper}, {mode.Y_lower, mode.X_lower}}};

  std::array<std::array<double, 2>, 2> rotated{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double s = 0.0;
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) s += u[i][p] * h[p][q] * u[j][q];
      rotated[i][j] = s;
    }
  return std::max({std::abs(rotated[0][1]), std::abs(rotated[1][0]),
                   std::abs(rotated[0][0] - mode.E_upper),
                   std::abs(rotated[1][1] - mode.E_lower)});
}

double find_resonance_k(double target, Branch branch, const WaveguideConfig& wg,
                        const SuperLatticeConfig& cfg) {
  constexpr int kScan = 1000;
  constexpr double kTol = 1e-12;
  const double k_max = std::numbers::pi / cfg.a;
  auto g = [&](double k) { return hopfield(k, wg, cfg).energy(branch) - target; };

  std::vector<double> ks(kScan + 1);
  std::vector<double> gs(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    ks[i] = k_max * static_cast<double>(i) / kScan;
    gs[i] = g(ks[i]);
  }

  std::vector<double> roots;
  int i = 0;
  while (i <= kScan) {
    if (std::abs(gs[i]) < kTol) {
      roots.push_back(ks[i]);
      // Skip the rest of a flat run touching the target.
      while (i <= kScan && std::abs(gs[i]) < kTol) ++i;
      continue;
    }
    if (i < kScan && std::abs(gs[i + 1]) >= kTol && (gs[i] < 0.0) != (gs[i + 1] < 0.0)) {
      double lo = ks[i];
      double hi = ks[i + 1];
      double g_lo = gs[i];
      double mid = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double g_mid = g(mid);
        if (std::abs(g_mid) < kTol || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi)
          break;
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
          lo = mid;
          g_lo = g_mid;
        } else {
          hi = mid;
        }
      }
      if (std::abs(g(mid)) >= kTol)
        throw NoSolutionError("find_resonance_k: bisection stalled above 1e-12 eV");
      roots.push_back(mid);
    }
    ++i;
  }

  if (roots.empty()) {
    const auto [mn, mx] = std::minmax_element(gs.begin(), gs.end());
    std::ostringstream os;
    os << "find_resonance_k: target " << target << " eV outside branch range ["
       << *mn + target << ", " << *mx + target << "] eV on [0, pi/a]";
    throw NoSolutionError(os.str());
  }
  if (roots.size() > 1) {
    std::ostringstream os;
    os << "find_resonance_k: " << roots.size() << " candidate wavenumbers:";
    for (double r : roots) os << ' ' << r;
    throw AmbiguousSolutionError(os.str(), roots);
  }
  return roots.front();
}

}  // namespace slx
