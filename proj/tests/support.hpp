#pragma once

#include <cmath>
#include <numbers>

#include "slx/lattice.hpp"
#include "slx/waveguide.hpp"

namespace slx::test {

inline SuperLatticeConfig paper_lattice() { return SuperLatticeConfig{}; }

inline WaveguideConfig paper_waveguide(const SuperLatticeConfig& cfg = paper_lattice()) {
  return WaveguideConfig::from_resonance(2.0, cfg.E_A, 0.25, std::numbers::pi * cfg.a * cfg.a,
                                         static_cast<double>(cfg.N) * cfg.a);
}

inline double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace slx::test
