#include "slx/kinematic.hpp"

#include <cmath>
#include <numbers>

#include "slx/errors.hpp"

namespace slx {

double effective_mass(const WaveguideConfig& wg) {
  return kConstants.hbar_c() * wg.q0 * std::sqrt(wg.epsilon);
}

InteractionParams interaction_params(const WaveguideConfig& wg, const SuperLatticeConfig& cfg,
                                     double X2) {
  if (!(X2 >= 0.0) || !(X2 <= 1.0)) throw DomainError("interaction_params: X2 must lie in [0, 1]");
  InteractionParams ip;
  ip.m_c2 = effective_mass(wg);
  const double hc = kConstants.hbar_c();
  ip.U = 4.0 * std::numbers::pi * hc * hc / (ip.m_c2 * cfg.a * cfg.a);
  ip.Delta = ip.U / static_cast<double>(cfg.N);
  ip.X2 = X2;
  ip.Delta_tilde = ip.Delta * X2;
  return ip;
}

VertexSet vertex_set(const InteractionParams& ip) {
  const double pair = 0.5 * ip.Delta * ip.X2;
  return {pair * ip.X2, pair, 4.0 * pair, 0.5 * ip.Delta};
}

ExclusionReport double_excitation_excluded(const SuperLatticeConfig& cfg, double V_dyn,
                                           double tolerance, std::optional<double> E_lower_pump) {
  if (!(tolerance > 0.0)) throw DomainError("double_excitation_excluded: tolerance must be positive");
  const ExcitonLevels lv = exciton_levels(cfg);
  ExclusionReport rep;
  rep.E_bound = 2.0 * cfg.E_A + 2.0 * V_dyn;

  auto add = [&](const char* name, double e) {
    const double gap = std::abs(rep.E_bound - e);
    rep.channels.push_back({name, e, gap, gap > tolerance});
  };
  add("2E_s", 2.0 * lv.E_s);
  add("2E_a", 2.0 * lv.E_a);
  add("2E_A", 2.0 * cfg.E_A);
  if (E_lower_pump) add("2E_lower", 2.0 * *E_lower_pump);

  rep.excluded = true;
  for (const auto& c : rep.channels) rep.excluded = rep.excluded && c.off_resonant;
  return rep;
}

}  // namespace slx
