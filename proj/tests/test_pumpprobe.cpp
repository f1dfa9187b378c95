#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "slx/errors.hpp"
#include "slx/pumpprobe.hpp"
#include "support.hpp"

using namespace slx;
using slx::test::paper_lattice;
using slx::test::paper_waveguide;
using slx::test::rel;

namespace {

struct Paper {
  SuperLatticeConfig cfg = paper_lattice();
  WaveguideConfig wg = paper_waveguide(cfg);
  double k_star = find_resonance_k(antisymmetric_energy(cfg), Branch::lower, wg, cfg);
  PumpProbeModel model = make_pump_probe_model(cfg, wg, k_star);

  DriveConfig drive(double N = 1.0) const {
    DriveConfig d;
    d.E_drive = model.E_dark;
    d.F_pump = 1.0;
    d.F_probe_plus = 1.0;
    d.k_pump = k_star;
    d.q = 1e-6;
    d.N_prescribed = N;
    return d;
  }
};

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

HopfieldMode mode_with(double X2) {
  HopfieldMode m;
  m.X_lower = -std::sqrt(X2);
  m.Y_lower = std::sqrt(1.0 - X2);
  return m;
}

}  // namespace

TEST_CASE("polariton damping") {
  DriveConfig d;
  d.Gamma_s = 1e-8;
  d.Gamma_ph = 1e-10;
  CHECK(rel(polariton_damping(mode_with(0.56), d), 2.822e-9) < 1e-12);
  CHECK(polariton_damping(mode_with(0.0), d) == doctest::Approx(0.5e-10).epsilon(1e-15));
  CHECK(polariton_damping(mode_with(1.0), d) == doctest::Approx(0.5e-8).epsilon(1e-15));
}

TEST_CASE("pump occupation") {
  const Paper p;
  DriveConfig d = p.drive();
  PumpOccupation occ = pump_occupation(d, p.model);
  CHECK(occ.N == 1.0);
  CHECK(steady_state(d, p.model).V_mf == doctest::Approx(p.model.interaction.Delta_tilde).epsilon(1e-15));
  CHECK(steady_state(d, p.model).V_mf == doctest::Approx(9.1e-5).epsilon(0.05));

  d.N_prescribed.reset();
  d.F_pump = 0.0;
  CHECK(pump_occupation(d, p.model).N == 0.0);

  // Lorentzian peak: no Hartree shift, drive on the bare polariton.
  PumpProbeModel flat = p.model;
  flat.interaction.Delta = 0.0;
  d.E_drive = flat.mode.E_lower;
  d.F_pump = cplx{3e-9, 4e-9};
  occ = pump_occupation(d, flat);
  const double g = polariton_damping(flat.mode, d);
  CHECK(rel(occ.N, std::norm(d.F_pump) / (g * g)) < 1e-12);

  // Self-consistent solution satisfies the cubic.
  d = p.drive();
  d.N_prescribed.reset();
  d.E_drive = p.model.mode.E_lower - 2e-5;
  d.F_pump = 2e-5;
  occ = pump_occupation(d, p.model);
  const double s = d.E_drive - occ.E_pol_tilde;
  CHECK(rel(occ.N, std::norm(d.F_pump) / (s * s + occ.Gamma_pol * occ.Gamma_pol)) < 1e-11);
  CHECK(occ.E_pol_tilde == doctest::Approx(p.model.mode.E_lower + p.model.interaction.Delta *
                                                                       std::pow(p.model.interaction.X2, 2) * occ.N));
}

TEST_CASE("prescribed occupation implies a consistent pump amplitude") {
  const Paper p;
  DriveConfig d = p.drive(0.7);
  d.F_pump = cplx{0.0, 2.0};
  const PumpOccupation occ = pump_occupation(d, p.model);
  CHECK(std::arg(occ.F_pump) == doctest::Approx(std::arg(d.F_pump)));
  DriveConfig solved = d;
  solved.N_prescribed.reset();
  solved.F_pump = occ.F_pump;
  const PumpOccupation back = pump_occupation(solved, p.model);
  CHECK(rel(back.N, 0.7) < 1e-9);
}

TEST_CASE("steady state without pump is a single driven mode") {
  const Paper p;
  DriveConfig d = p.drive(0.0);
  d.E_drive = p.model.E_dark + 3e-5;
  d.F_probe_plus = cplx{0.4, -0.2};
  d.Gamma_a = 2e-6;
  const SteadyState ss = steady_state(d, p.model);
  CHECK(ss.V_mf == 0.0);
  CHECK(std::abs(ss.B_minus) == 0.0);
  const cplx want = d.F_probe_plus / cplx{d.E_drive - ss.E_a_tilde, d.Gamma_a};
  CHECK(std::abs(ss.B_plus - want) <= 1e-12 * std::abs(want));
}

TEST_CASE("undamped closed forms for a real probe") {
  const Paper p;
  DriveConfig d = p.drive();
  d.Gamma_a = 0.0;
  d.F_probe_plus = 0.8;
  for (double off : {-4e-4, -1e-4, 5e-5, 1.5e-4, 3.5e-4, 8e-4}) {
    d.E_drive = p.model.E_dark + off;
    const SteadyState ss = steady_state(d, p.model);
    const double x = d.E_drive - ss.E_a_tilde;
    const double V = ss.V_mf;
    const double den = x * x - V * V;
    CHECK(std::abs(ss.B_plus - cplx{x * 0.8 / den, 0.0}) <= 1e-12 * std::abs(ss.B_plus));
    CHECK(std::abs(ss.B_minus - cplx{V * 0.8 / den, 0.0}) <= 1e-12 * std::abs(ss.B_minus));
    CHECK(ss.I_plus == doctest::Approx(std::norm(ss.B_plus)).epsilon(1e-12));
    CHECK(ss.I_minus == doctest::Approx(std::norm(ss.B_minus)).epsilon(1e-12));
  }
}

TEST_CASE("resonance structure") {
  const Paper p;
  DriveConfig d = p.drive();
  d.Gamma_a = 0.0;
  const SteadyState ref = steady_state(d, p.model);
  CHECK(ref.E_a_tilde - p.model.E_dark == doctest::Approx(2.0 * p.model.interaction.Delta_tilde).epsilon(1e-12));

  SUBCASE("a single probe has poles at E_a~ -+ V") {
    for (double E : {ref.E_a_tilde - ref.V_mf, ref.E_a_tilde + ref.V_mf}) {
      d.E_drive = E;
      CHECK_THROWS_AS(steady_state(d, p.model), PoleError);
    }
  }
  SUBCASE("equal probes leave only the pole at E_a~ + V") {
    d.F_probe_minus = d.F_probe_plus;
    d.E_drive = ref.E_a_tilde - ref.V_mf * (1.0 - 1e-9);
    CHECK(std::abs(steady_state(d, p.model).B_plus) < 1e6);
    d.E_drive = ref.E_a_tilde + ref.V_mf * (1.0 - 1e-9);
    CHECK(std::abs(steady_state(d, p.model).B_plus) > 1e8);
  }
  SUBCASE("damped resonance positions") {
    d.Gamma_a = 1e-12;
    const SteadyState ss = steady_state(d, p.model);
    const double half = std::sqrt(ss.V_mf * ss.V_mf - 1e-24);
    CHECK(ss.split);
    CHECK(ss.E_res_plus - ss.E_a_tilde == doctest::Approx(half).epsilon(1e-14));
    CHECK(ss.E_a_tilde - ss.E_res_minus == doctest::Approx(half).epsilon(1e-14));
  }
}

TEST_CASE("reference spectrum has two blue-shifted peaks") {
  const Paper p;
  const DriveConfig d = p.drive();
  const auto offsets = grid(0.0, 4e-4, 10001);
  const auto pts = spectrum(d, p.model, offsets);
  std::vector<double> idler;
  for (const auto& pt : pts) {
    CHECK(pt.I_minus_scaled >= 0.0);
    CHECK(pt.I_plus_scaled >= 0.0);
    idler.push_back(pt.I_minus_scaled);
  }
  const auto peaks = local_maxima(idler);
  REQUIRE(peaks.size() == 2);
  const double dt = p.model.interaction.Delta_tilde;
  const double lo = offsets[peaks[0]];
  const double hi = offsets[peaks[1]];
  CHECK(lo == doctest::Approx(dt).epsilon(0.05));
  CHECK(hi == doctest::Approx(3.0 * dt).epsilon(0.05));
  CHECK(lo > 0.0);
  CHECK(hi - lo == doctest::Approx(2.0 * std::sqrt(dt * dt - 1e-24)).epsilon(0.01));
}

TEST_CASE("halving the occupation halves the splitting") {
  const Paper p;
  const auto offsets = grid(0.0, 4e-4, 40001);
  auto split = [&](double N) {
    const auto pts = spectrum(p.drive(N), p.model, offsets);
    std::vector<double> idler;
    for (const auto& pt : pts) idler.push_back(pt.I_minus_scaled);
    const auto peaks = local_maxima(idler);
    REQUIRE(peaks.size() == 2);
    return offsets[peaks[1]] - offsets[peaks[0]];
  };
  CHECK(split(0.5) == doctest::Approx(0.5 * split(1.0)).epsilon(0.01));
}

TEST_CASE("overdamped dark excitons merge into one peak at E_a~") {
  const Paper p;
  DriveConfig d = p.drive();
  d.Gamma_a = 2.0 * p.model.interaction.Delta_tilde;
  const auto offsets = grid(0.0, 4e-4, 4001);
  const auto pts = spectrum(d, p.model, offsets);
  std::vector<double> idler;
  for (const auto& pt : pts) idler.push_back(pt.I_minus_scaled);
  const auto peaks = local_maxima(idler);
  REQUIRE(peaks.size() == 1);
  CHECK(offsets[peaks[0]] == doctest::Approx(2.0 * p.model.interaction.Delta_tilde).epsilon(1e-3));
  CHECK_FALSE(steady_state(d, p.model).split);
}

TEST_CASE("probe intensity scales quadratically and probe sides are reciprocal") {
  const Paper p;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    DriveConfig d = p.drive(0.2 + 1.5 * std::abs(u(rng)));
    d.E_drive = p.model.E_dark + 4e-4 * u(rng);
    d.F_probe_plus = cplx{u(rng), u(rng)};
    d.Gamma_a = 1e-9 * (1.0 + u(rng));
    const SteadyState a = steady_state(d, p.model);
    DriveConfig twice = d;
    twice.F_probe_plus *= 2.0;
    const SteadyState b = steady_state(twice, p.model);
    CHECK(std::abs(b.I_plus - 4.0 * a.I_plus) <= 1e-12 * b.I_plus);
    CHECK(std::abs(b.I_minus - 4.0 * a.I_minus) <= 1e-12 * b.I_minus);

    DriveConfig swapped = d;
    std::swap(swapped.F_probe_plus, swapped.F_probe_minus);
    const SteadyState s = steady_state(swapped, p.model);
    CHECK(s.I_plus == a.I_minus);
    CHECK(s.I_minus == a.I_plus);
  }
}

TEST_CASE("time evolution") {
  const Paper p;

  SUBCASE("zero drive stays at zero") {
    DriveConfig d = p.drive();
    d.N_prescribed.reset();
    d.F_pump = 0.0;
    d.F_probe_plus = 0.0;
    d.Gamma_a = d.Gamma_s = d.Gamma_ph = 1e-6;
    for (const auto& s : time_evolve(d, p.model, 1e6, 100.0, 50)) {
      CHECK(std::abs(s.A) == 0.0);
      CHECK(std::abs(s.B_plus) == 0.0);
      CHECK(std::abs(s.B_minus) == 0.0);
    }
  }

  SUBCASE("single mode relaxes as the closed form") {
    DriveConfig d = p.drive(0.0);
    d.E_drive = p.model.E_dark - 5e-5;
    d.F_probe_plus = cplx{0.3, 0.1};
    d.Gamma_a = 2e-6;
    d.Gamma_s = d.Gamma_ph = 1e-6;
    const SteadyState ss = steady_state(d, p.model);
    const cplx rate{d.Gamma_a, ss.E_a_tilde - d.E_drive};
    const auto traj = time_evolve(d, p.model, 2e6, 50.0, 101);
    for (const auto& s : traj) {
      const cplx want = ss.B_plus * (1.0 - std::exp(-rate * s.t));
      CHECK(std::abs(s.B_plus - want) <= 1e-8 * std::abs(ss.B_plus));
    }
  }

  SUBCASE("reference numbers with scaled dark damping reach the steady state") {
    DriveConfig d = p.drive();
    d.Gamma_a = 1e-6;
    const SteadyState ss = steady_state(d, p.model);
    const double t_end = 20.0 / d.Gamma_a;
    const auto traj = time_evolve(d, p.model, t_end, 200.0, 10);
    REQUIRE(traj.back().t == doctest::Approx(t_end));
    CHECK(std::abs(traj.back().B_plus - ss.B_plus) <= 1e-6 * std::abs(ss.B_plus));
    CHECK(std::abs(traj.back().B_minus - ss.B_minus) <= 1e-6 * std::abs(ss.B_minus));
  }

  SUBCASE("step size guard") {
    DriveConfig d = p.drive();
    CHECK_THROWS_AS(time_evolve(d, p.model, 1e6, 1e4), StabilityError);
    CHECK_THROWS_AS(time_evolve(d, p.model, 1e30, 1.0), StabilityError);
    CHECK_THROWS_AS(time_evolve(d, p.model, -1.0, 1.0), DomainError);
  }

  SUBCASE("sampling keeps both ends") {
    DriveConfig d = p.drive();
    d.Gamma_a = 1e-6;
    const auto traj = time_evolve(d, p.model, 1e5, 100.0, 7);
    CHECK(traj.size() <= 7);
    CHECK(traj.front().t == 0.0);
    CHECK(traj.back().t == doctest::Approx(1e5));
  }
}

TEST_CASE("overdamped approach is monotone") {
  const Paper p;
  DriveConfig d = p.drive(0.0);
  d.F_probe_plus = 1.0;
  d.E_drive = p.model.E_dark;
  d.Gamma_a = 1.0;  // far above every detuning
  d.Gamma_s = d.Gamma_ph = 1.0;
  const auto traj = time_evolve(d, p.model, 40.0, 0.01, 400);
  for (std::size_t i = 1; i < traj.size(); ++i) CHECK(std::norm(traj[i].B_plus) >= std::norm(traj[i - 1].B_plus));
}

TEST_CASE("drive validation") {
  DriveConfig d;
  d.E_drive = 1.5;
  CHECK_NOTHROW(d.validate());
  d.Gamma_a = -1.0;
  CHECK_THROWS_AS(d.validate(), ConfigError);
  d.Gamma_a = 0.0;
  d.E_drive = 0.0;
  CHECK_THROWS_AS(d.validate(), ConfigError);
  d.E_drive = 1.5;
  d.N_prescribed = -1.0;
  CHECK_THROWS_AS(d.validate(), ConfigError);
}

TEST_CASE("local maxima") {
  const std::vector<double> v{0, 1, 0, 2, 2, 1, 3};
  const auto m = local_maxima(v);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == 1);
  CHECK(m[1] == 3);
}
