// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slx/bogolon.hpp"
#include "slx/datasets.hpp"
#include "slx/ed_oracle.hpp"
#include "slx/errors.hpp"
#include "slx/kinematic.hpp"
#include "slx/polariton.hpp"
#include "slx/pumpprobe.hpp"
#include "slx/run_config.hpp"

using namespace slx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool within(double got, double want, double rel_tol) {
  return std::abs(got - want) <= rel_tol * std::abs(want);
}

std::size_t col(const Dataset& ds, const std::string& name) {
  for (std::size_t c = 0; c < ds.cols(); ++c)
    if (ds.columns[c] == name) return c;
  throw std::runtime_error("missing column " + name);
}

// Linear zero crossings of f over the rows of a dataset.
std::vector<double> crossings(const Dataset& ds, std::size_t x, const std::function<double(std::size_t)>& f) {
  std::vector<double> out;
  for (std::size_t r = 1; r < ds.rows(); ++r) {
    const double f0 = f(r - 1), f1 = f(r);
    if (f0 == 0.0) out.push_back(ds.at(r - 1, x));
    else if (f0 * f1 < 0.0)
      out.push_back(ds.at(r - 1, x) + (ds.at(r, x) - ds.at(r - 1, x)) * f0 / (f0 - f1));
  }
  return out;
}

struct Context {
  RunConfig rc = paper_preset();
  ResolvedRun run = resolve(rc);
  PumpProbeModel model = make_pump_probe_model(run.lattice, run.waveguide, run.drive.k_pump);
};

Outcome constants_chain(const Context& c) {
  Outcome o;
  const InteractionParams& ip = c.model.interaction;
  const double q0 = c.run.waveguide.q0;
  o.detail << "q0=" << q0 << " 1/A, mc2=" << ip.m_c2 << " eV, Delta=" << ip.Delta
           << " eV, Delta~=" << ip.Delta_tilde << " eV";
  o.require(within(q0, 1.07e-3, 0.02), "q0 within 2%");
  o.require(within(ip.m_c2, 3.0, 0.02), "mc2 within 2%");
  o.require(within(ip.Delta, 1.6e-4, 0.05), "Delta within 5%");
  o.require(within(ip.Delta_tilde, 9.1e-5, 0.05), "Delta~ within 5%");
  return o;
}

Outcome operating_point(const Context& c) {
  Outcome o;
  const double k = find_resonance_k(antisymmetric_energy(c.run.lattice), Branch::lower, c.run.waveguide,
                                    c.run.lattice);
  const double X2 = hopfield(k, c.run.waveguide, c.run.lattice).exciton_fraction(Branch::lower);
  o.detail << "k*=" << k << " 1/A, |X|^2=" << X2;
  o.require(within(k, 1.4e-5, 0.10), "k* within 10%");
  o.require(std::abs(X2 - 0.56) <= 0.02, "|X|^2 within 0.02");
  return o;
}

Outcome level_structure(const Context& c) {
  Outcome o;
  RunConfig rc = c.rc;
  rc.sweep = parse_sweep("theta:0:90:1000");
  const Dataset lv = cmd_levels(rc);
  const std::size_t es = col(lv, "E_s"), ea = col(lv, "E_a");
  const auto cross = crossings(lv, 0, [&](std::size_t r) { return lv.at(r, es) - lv.at(r, ea); });
  o.require(cross.size() == 1, "single E_s = E_a crossing");
  const double theta_m = cross.empty() ? NAN : cross.front();
  o.detail << "E_s=E_a at theta=" << theta_m << " deg";
  o.require(std::abs(theta_m - 54.74) <= 0.05, "crossing within 0.05 deg of 54.74");

  // At the crossing both levels sit on E_A: the intra-cell coupling vanishes.
  SuperLatticeConfig at = c.run.lattice;
  at.theta = theta_m * kDegree;
  const ExcitonLevels lev = exciton_levels(at);
  o.require(std::abs(lev.E_s - at.E_A) <= 1e-3 * std::abs(exciton_levels(c.run.lattice).J0) &&
                std::abs(lev.E_a - at.E_A) <= 1e-3 * std::abs(exciton_levels(c.run.lattice).J0),
            "E_s = E_a = E_A at the crossing");

  rc = c.rc;
  rc.sweep = parse_sweep("k:0:5e-5:1000");
  const Dataset disp = cmd_dispersion(rc);
  const std::size_t lo = col(disp, "E_minus"), da = col(disp, "E_a");
  const double gap0 = disp.at(0, da) - disp.at(0, lo);
  const auto k_cross = crossings(disp, 0, [&](std::size_t r) { return disp.at(r, lo) - disp.at(r, da); });
  o.detail << "; at 80 deg E_a - E_lower(0)=" << gap0 << " eV, E_lower(k) - E_a changes sign at k="
           << (k_cross.empty() ? NAN : k_cross.front()) << " 1/A";
  o.require(gap0 > 0.0, "dark level above E_lower(0)");
  o.require(k_cross.size() == 1 && k_cross.front() > 0.0, "one sign change at finite k");
  return o;
}

Outcome two_peak_spectrum(const Context& c) {
  Outcome o;
  RunConfig rc = c.rc;
  rc.N_pump = 1.0;
  rc.sweep = parse_sweep("E_drive:0:4e-4:10000");
  const Dataset sp = cmd_spectrum(rc);
  const std::vector<double> I = sp.column(col(sp, "I_minus_scaled"));
  const auto peaks = local_maxima(I);
  const double dt = c.model.interaction.Delta_tilde;
  const double G = c.run.drive.Gamma_a;
  o.detail << peaks.size() << " peaks at E-E_a =";
  for (std::size_t p : peaks) o.detail << " " << sp.at(p, 0);
  o.require(peaks.size() == 2, "exactly two peaks");
  if (peaks.size() == 2) {
    const double lo = sp.at(peaks[0], 0), hi = sp.at(peaks[1], 0);
    const double split_want = 2.0 * std::sqrt(dt * dt - G * G);
    o.detail << " eV (expected " << dt << ", " << 3.0 * dt << "), splitting " << hi - lo << " vs " << split_want;
    o.require(within(lo, dt, 0.05), "lower peak at Delta~ within 5%");
    o.require(within(hi, 3.0 * dt, 0.05), "upper peak at 3 Delta~ within 5%");
    o.require(within(hi - lo, split_want, 0.02), "splitting within 2%");
    o.require(lo > 0.0 && hi > 0.0, "both peaks blue shifted");
  }
  return o;
}

Outcome bogoliubov_equivalence(const Context& c) {
  Outcome o;
  std::mt19937_64 rng(20260501);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst_amp = 0.0, worst_norm = 0.0;
  for (int i = 0; i < 1000; ++i) {
    DriveConfig d = c.run.drive;
    d.N_prescribed = 0.05 + 2.0 * u01(rng);
    d.F_probe_plus = -1.0 + 2.0 * u01(rng);
    d.F_probe_minus = 0.0;
    d.Gamma_a = 0.0;
    const double V = c.model.interaction.Delta_tilde * *d.N_prescribed;
    const double E_a_tilde = c.model.E_dark + 2.0 * V;
    d.E_drive = E_a_tilde - V * (1.0 + 1e-3 + 5.0 * u01(rng));
    const SteadyState ss = steady_state(d, c.model);
    const BogoliubovCoeffs bc = coefficients(ss.E_a_tilde, ss.V_mf, d.E_drive);
    const auto [cp, cm] = bogolon_steady_state(bc, d.F_probe_plus);
    const auto [bp, bm] = reconstruct_dark_amplitudes(bc, cp, cm);
    worst_amp = std::max({worst_amp, std::abs(bp - ss.B_plus) / std::abs(ss.B_plus),
                          std::abs(bm - ss.B_minus) / std::abs(ss.B_minus)});
    worst_norm = std::max(worst_norm, std::abs(bc.u * bc.u - bc.v * bc.v - 1.0));
  }
  o.detail << "1000 sets: max relative amplitude difference " << worst_amp << ", max |u^2 - v^2 - 1| "
           << worst_norm;
  o.require(worst_amp <= 1e-10, "amplitudes within 1e-10");
  o.require(worst_norm <= 1e-12, "u^2 - v^2 = 1 within 1e-12");
  return o;
}

Outcome ode_convergence(const Context& c) {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double Gamma = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    DriveConfig d = c.run.drive;
    d.Gamma_a = Gamma;
    d.Gamma_s = std::max(d.Gamma_s, Gamma);
    d.Gamma_ph = std::max(d.Gamma_ph, Gamma);
    d.N_prescribed = 0.1 + 1.9 * u01(rng);
    d.F_pump = std::polar(0.5 + u01(rng), 6.283185307179586 * u01(rng));
    d.F_probe_plus = cplx{u01(rng) - 0.5, u01(rng) - 0.5};
    d.F_probe_minus = (i % 2) ? cplx{u01(rng) - 0.5, u01(rng) - 0.5} : cplx{};
    // Outside the parametric window so a steady state exists.
    const double V = c.model.interaction.Delta_tilde * *d.N_prescribed;
    const double side = (i % 3 == 0) ? 1.0 : -1.0;
    d.E_drive = c.model.E_dark + 2.0 * V + side * V * (1.05 + 2.0 * u01(rng));
    const SteadyState ss = steady_state(d, c.model);
    // The pump mode relaxes at Gamma_pol, which can be slower than the dark damping.
    const double slowest = std::min(Gamma, polariton_damping(c.model.mode, d));
    const auto traj = time_evolve(d, c.model, 25.0 / slowest, 25.0, 2);
    const auto& last = traj.back();
    const double scale = std::max(std::abs(ss.B_plus), std::abs(ss.B_minus));
    worst = std::max({worst, std::abs(last.B_plus - ss.B_plus) / scale,
                      std::abs(last.B_minus - ss.B_minus) / scale,
                      std::abs(last.A - ss.A_amp) / std::abs(ss.A_amp)});
  }
  o.detail << "20 drives, Gamma = 1e-6 eV: max relative deviation " << worst;
  o.require(worst <= 1e-6, "within 1e-6");
  return o;
}

Outcome oracle_equivalence(const Context& c) {
  Outcome o;
  const double V_dyn = 1e-3;
  for (int n : {3, 5, 7}) {
    const BandReport band = validate_band(c.run.lattice, n);
    const BlockingReport blk = validate_blocking(c.run.lattice, n, V_dyn);
    const std::size_t dim_want = static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(2 * n - 1) / 2;
    o.detail << (n > 3 ? "; " : "") << "N=" << n << ": band dev " << band.deviation_over_J << "|J| (limit 1e-3), dark count "
             << band.dark_count << ", dim " << blk.dimension << ", cluster offset " << blk.cluster_offset
             << " eV";
    const std::string tag = " (N=" + std::to_string(n) + ")";
    o.require(band.within_contract, "band within 1e-3|J|" + tag);
    o.require(band.dark_count == n, "dark degeneracy equals N" + tag);
    o.require(blk.dimension == dim_want, "two-excitation dimension" + tag);
    o.require(blk.structural_ok, "no doubly occupied atom" + tag);
    o.require(within(blk.cluster_offset, 2.0 * V_dyn, 0.10), "cluster at 2 V_dyn within 10%" + tag);
  }
  return o;
}

Outcome property_suite(const Context& c) {
  Outcome o;
  const auto& wg = c.run.waveguide;
  const auto& lat = c.run.lattice;
  double worst_norm = 0.0, worst_orth = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double k = 5e-5 * i / 2000.0;
    const HopfieldMode m = hopfield(k, wg, lat);
    worst_norm = std::max({worst_norm, std::abs(m.X_upper * m.X_upper + m.Y_upper * m.Y_upper - 1.0),
                           std::abs(m.X_lower * m.X_lower + m.Y_lower * m.Y_lower - 1.0)});
    worst_orth = std::max(worst_orth, std::abs(m.X_upper * m.X_lower + m.Y_upper * m.Y_lower));
  }
  double worst_r3 = 0.0;
  for (double r : {50.0, 100.0, 333.0, 1000.0, 4321.0}) {
    const double ratio = dipole_coupling(2.0 * r, lat) / dipole_coupling(r, lat);
    worst_r3 = std::max(worst_r3, std::abs(ratio - 0.125) / 0.125);
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_quad = 0.0;
  bool swap_exact = true;
  for (int i = 0; i < 200; ++i) {
    DriveConfig d = c.run.drive;
    d.N_prescribed = 0.2 + 1.5 * std::abs(u(rng));
    d.E_drive = c.model.E_dark + 4e-4 * u(rng);
    d.F_probe_plus = cplx{u(rng), u(rng)};
    d.F_probe_minus = 0.0;
    d.Gamma_a = 1e-9 * (1.0 + u(rng));
    const SteadyState a = steady_state(d, c.model);
    DriveConfig scaled = d;
    scaled.F_probe_plus *= 3.0;
    const SteadyState b = steady_state(scaled, c.model);
    worst_quad = std::max({worst_quad, std::abs(b.I_plus - 9.0 * a.I_plus) / b.I_plus,
                           std::abs(b.I_minus - 9.0 * a.I_minus) / b.I_minus});
    DriveConfig swapped = d;
    std::swap(swapped.F_probe_plus, swapped.F_probe_minus);
    const SteadyState s = steady_state(swapped, c.model);
    swap_exact = swap_exact && s.I_plus == a.I_minus && s.I_minus == a.I_plus;
  }
  o.detail << "Hopfield norm " << worst_norm << ", orthogonality " << worst_orth << ", r^-3 " << worst_r3
           << ", quadratic " << worst_quad << ", swap " << (swap_exact ? "exact" : "inexact");
  o.require(worst_norm <= 1e-12, "normalization");
  o.require(worst_orth <= 1e-12, "orthogonality");
  o.require(worst_r3 <= 1e-12, "r^-3 scaling");
  o.require(worst_quad <= 1e-12, "quadratic probe scaling");
  o.require(swap_exact, "exact probe-side swap");
  return o;
}

}  // namespace

int main() {
  const Context ctx;
  struct Item {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)(const Context&);
  };
  const Item items[] = {
      {1, "constants chain", 0.1, constants_chain},
      {2, "operating point", 0.1, operating_point},
      {3, "level structure", 1.0, level_structure},
      {4, "two-peak dark spectrum", 1.0, two_peak_spectrum},
      {5, "Bogoliubov equivalence", 1.0, bogoliubov_equivalence},
      {6, "ODE versus steady state", 30.0, ode_convergence},
      {7, "exact-diagonalization oracle", 60.0, oracle_equivalence},
      {8, "property suite", 10.0, property_suite},
  };
  int failures = 0;
  for (const Item& it : items) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = it.run(ctx);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= it.budget_s, "runtime budget");
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", it.id, it.name,
                o.detail.str().c_str(), secs);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
