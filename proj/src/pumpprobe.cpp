#include "slx/pumpprobe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "slx/errors.hpp"

namespace slx {

namespace {

constexpr int kMaxFixedPointIterations = 10000;
constexpr double kFixedPointTol = 1e-12;

struct Coefficients {
  double pol_detuning;  // E_pol~ - E
  double Gamma_pol;
  double dark_detuning;  // E_a~ - E
  double Gamma_a;
  double V;
  cplx F_pump;
  cplx F_plus;
  cplx F_minus;
};

Coefficients coefficients_for(const DriveConfig& drive, const PumpProbeModel& model,
                              PumpOccupation* occ_out = nullptr) {
  const PumpOccupation occ = pump_occupation(drive, model);
  if (occ_out) *occ_out = occ;
  const double dt = model.interaction.Delta_tilde;
  Coefficients c;
  c.pol_detuning = occ.E_pol_tilde - drive.E_drive;
  c.Gamma_pol = occ.Gamma_pol;
  c.dark_detuning = model.E_dark + 2.0 * dt * occ.N - drive.E_drive;
  c.Gamma_a = drive.Gamma_a;
  c.V = dt * occ.N;
  c.F_pump = occ.F_pump;
  c.F_plus = drive.F_probe_plus;
  c.F_minus = drive.F_probe_minus;
  return c;
}

// Positive roots of N((d - kappa N)^2 + g^2) = F2, located by a log scan.
std::vector<double> occupation_roots(double d, double kappa, double g, double F2) {
  auto h = [&](double n) {
    const double s = d - kappa * n;
    return n * (s * s + g * g) - F2;
  };
  std::vector<double> roots;
  const double n_max = g > 0.0 ? F2 / (g * g) : 1e30;
  const double n_min = n_max * 1e-18;
  constexpr int kScan = 4000;
  double prev_n = 0.0;
  double prev_h = h(0.0);
  for (int i = 0; i <= kScan; ++i) {
    const double n = n_min * std::pow(n_max / n_min, static_cast<double>(i) / kScan);
    const double hv = h(n);
    if ((prev_h < 0.0) != (hv < 0.0)) {
      double lo = prev_n;
      double hi = n;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((h(mid) < 0.0) == (h(lo) < 0.0)) lo = mid; else hi = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_n = n;
    prev_h = hv;
  }
  return roots;
}

}  // namespace

void DriveConfig::validate() const {
  if (!(E_drive > 0.0)) throw ConfigError("drive: E_drive must be positive");
  if (!(Gamma_ph >= 0.0) || !(Gamma_s >= 0.0) || !(Gamma_a >= 0.0))
    throw ConfigError("drive: damping rates must be non-negative");
  if (N_prescribed && !(*N_prescribed >= 0.0))
    throw ConfigError("drive: prescribed occupation must be non-negative");
}

PumpProbeModel make_pump_probe_model(const SuperLatticeConfig& cfg, const WaveguideConfig& wg,
                                     double k_pump) {
  PumpProbeModel m;
  m.mode = hopfield(k_pump, wg, cfg);
  m.interaction = interaction_params(wg, cfg, m.mode.exciton_fraction(Branch::lower));
  m.E_dark = antisymmetric_energy(cfg);
  return m;
}

double polariton_damping(const HopfieldMode& mode, const DriveConfig& drive) {
  return 0.5 * mode.exciton_fraction(Branch::lower) * drive.Gamma_s +
         0.5 * mode.photon_fraction(Branch::lower) * drive.Gamma_ph;
}

PumpOccupation pump_occupation(const DriveConfig& drive, const PumpProbeModel& model) {
  PumpOccupation out;
  out.Gamma_pol = polariton_damping(model.mode, drive);
  const double kappa = model.interaction.Delta * model.interaction.X2 * model.interaction.X2;
  const double e_pol = model.mode.E_lower;
  const double g = out.Gamma_pol;

  if (drive.N_prescribed) {
    out.N = *drive.N_prescribed;
    out.E_pol_tilde = e_pol + kappa * out.N;
    const double det = drive.E_drive - out.E_pol_tilde;
    const double magnitude = std::sqrt(out.N * (det * det + g * g));
    const cplx phase = std::abs(drive.F_pump) > 0.0 ? drive.F_pump / std::abs(drive.F_pump)
                                                    : cplx{1.0, 0.0};
    out.F_pump = magnitude * phase;
    return out;
  }

  out.F_pump = drive.F_pump;
  const double F2 = std::norm(drive.F_pump);
  const double d = drive.E_drive - e_pol;
  auto G = [&](double n) {
    const double s = d - kappa * n;
    return F2 / (s * s + g * g);
  };
  if (F2 == 0.0) {
    out.E_pol_tilde = e_pol;
    return out;
  }
  if (d == 0.0 && g == 0.0 && kappa == 0.0)
    throw PoleError("pump_occupation: undamped pump exactly on the polariton resonance");

  // Damped iteration; the relaxation weight follows a secant estimate of G'.
  double n = G(0.0);
  double lambda = 1.0;
  double prev_n = n;
  double prev_g = G(n);
  for (int it = 1; it <= kMaxFixedPointIterations; ++it) {
    const double gn = it == 1 ? prev_g : G(n);
    if (it > 1 && n != prev_n) {
      const double slope = (gn - prev_g) / (n - prev_n);
      lambda = std::clamp(1.0 / (1.0 - slope), 1e-3, 1.0);
      if (!std::isfinite(lambda)) lambda = 1e-3;
    }
    const double next = (1.0 - lambda) * n + lambda * gn;
    prev_n = n;
    prev_g = gn;
    n = next;
    if (std::abs(n - prev_n) <= kFixedPointTol * std::abs(n) &&
        std::abs(G(n) - n) <= 10.0 * kFixedPointTol * std::abs(n)) {
      out.N = n;
      out.E_pol_tilde = e_pol + kappa * n;
      out.iterations = it;
      return out;
    }
  }
  // Near a sharp resonance the iteration can cycle even though the cubic has a
  // single positive root; that root is then the steady state.
  const std::vector<double> roots = occupation_roots(d, kappa, g, F2);
  if (roots.size() == 1) {
    out.N = roots.front();
    out.E_pol_tilde = e_pol + kappa * out.N;
    out.iterations = kMaxFixedPointIterations;
    return out;
  }
  std::ostringstream os;
  os << "pump_occupation: fixed point did not converge in " << kMaxFixedPointIterations
     << " iterations; steady-state occupations:";
  for (double r : roots) os << ' ' << r;
  throw BistabilityError(os.str(), roots);
}

SteadyState steady_state(const DriveConfig& drive, const PumpProbeModel& model) {
  PumpOccupation occ;
  const Coefficients c = coefficients_for(drive, model, &occ);
  SteadyState ss;
  ss.N_pump = occ.N;
  ss.E_pol_tilde = occ.E_pol_tilde;
  ss.Gamma_pol = occ.Gamma_pol;
  ss.E_a_tilde = model.E_dark + 2.0 * model.interaction.Delta_tilde * occ.N;
  ss.V_mf = c.V;

  const cplx pol{c.pol_detuning, -c.Gamma_pol};
  if (std::abs(pol) == 0.0) {
    if (std::abs(c.F_pump) != 0.0)
      throw PoleError("steady_state: undamped pump exactly on the renormalized polariton");
    ss.A_amp = 0.0;
  } else {
    ss.A_amp = -c.F_pump / pol;
  }

  // eps B+ + V conj(B-) = -F+,  V B+ + conj(eps) conj(B-) = -conj(F-)
  const cplx eps{c.dark_detuning, -c.Gamma_a};
  const double det = std::norm(eps) - c.V * c.V;
  const double scale = std::norm(eps) + c.V * c.V;
  // The detuning is a difference of eV-sized energies; a determinant below its
  // rounding floor cannot be told apart from a pole.
  const double rounding = 4.0 * std::numeric_limits<double>::epsilon() *
                          std::max(std::abs(drive.E_drive), std::abs(model.E_dark));
  if (scale == 0.0 || std::abs(det) <= 2.0 * std::sqrt(scale) * rounding) {
    std::ostringstream os;
    os << "steady_state: drive at E = " << drive.E_drive << " eV sits on a dark-exciton pole";
    throw PoleError(os.str());
  }
  const cplx fm_conj = std::conj(c.F_minus);
  ss.B_plus = (-std::conj(eps) * c.F_plus + c.V * fm_conj) / det;
  const cplx bm_conj = (-eps * fm_conj + c.V * c.F_plus) / det;
  ss.B_minus = std::conj(bm_conj);
  ss.I_plus = std::norm(ss.B_plus);
  ss.I_minus = std::norm(ss.B_minus);

  const double radicand = c.V * c.V - c.Gamma_a * c.Gamma_a;
  ss.split = radicand > 0.0;
  const double half = ss.split ? std::sqrt(radicand) : 0.0;
  ss.E_res_plus = ss.E_a_tilde + half;
  ss.E_res_minus = ss.E_a_tilde - half;
  return ss;
}

std::vector<SpectrumPoint> spectrum(const DriveConfig& drive, const PumpProbeModel& model,
                                    std::span<const double> E_offsets) {
  const double probe = std::norm(drive.F_probe_plus) + std::norm(drive.F_probe_minus);
  std::vector<SpectrumPoint> out;
  out.reserve(E_offsets.size());
  DriveConfig d = drive;
  for (double off : E_offsets) {
    d.E_drive = model.E_dark + off;
    SpectrumPoint p{off, 0.0, 0.0};
    try {
      const SteadyState ss = steady_state(d, model);
      if (probe > 0.0) {
        p.I_minus_scaled = ss.I_minus / probe;
        p.I_plus_scaled = ss.I_plus / probe;
      }
    } catch (const PoleError&) {
      p.I_minus_scaled = std::numeric_limits<double>::infinity();
      p.I_plus_scaled = std::numeric_limits<double>::infinity();
    }
    out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> local_maxima(std::span<const double> v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i - 1] < v[i] && v[i] >= v[i + 1]) idx.push_back(i);
  return idx;
}

std::vector<TrajectorySample> time_evolve(const DriveConfig& drive, const PumpProbeModel& model,
                                          double t_end, double dt, std::size_t max_samples) {
  if (!(t_end > 0.0) || !(dt > 0.0)) throw DomainError("time_evolve: t_end and dt must be positive");
  const Coefficients c = coefficients_for(drive, model);
  const double rate = std::max({std::abs(c.pol_detuning), c.Gamma_pol, std::abs(c.dark_detuning),
                                c.V, c.Gamma_a});
  if (rate > 0.0 && !(dt < 0.1 / rate)) {
    std::ostringstream os;
    os << "time_evolve: dt = " << dt << " violates dt < 0.1 hbar/" << rate << " eV";
    throw StabilityError(os.str());
  }
  const double steps_real = std::ceil(t_end / dt);
  if (steps_real > 2e9) throw StabilityError("time_evolve: t_end/dt requires more than 2e9 steps");
  const auto steps = static_cast<std::size_t>(steps_real);
  const double h = t_end / static_cast<double>(steps);

  using State = std::array<cplx, 3>;
  const cplx minus_i{0.0, -1.0};
  const cplx pol{c.pol_detuning, -c.Gamma_pol};
  const cplx dark{c.dark_detuning, -c.Gamma_a};
  auto rhs = [&](const State& z) -> State {
    return {minus_i * (pol * z[0] + c.F_pump),
            minus_i * (dark * z[1] + c.V * std::conj(z[2]) + c.F_plus),
            minus_i * (dark * z[2] + c.V * std::conj(z[1]) + c.F_minus)};
  };
  auto axpy = [](const State& z, double s, const State& k) {
    return State{z[0] + s * k[0], z[1] + s * k[1], z[2] + s * k[2]};
  };

  const std::size_t slots = std::max<std::size_t>(max_samples, 2) - 1;
  const std::size_t stride = (steps + slots - 1) / slots;
  std::vector<TrajectorySample> traj;
  State z{};
  traj.push_back({0.0, z[0], z[1], z[2]});
  for (std::size_t n = 1; n <= steps; ++n) {
    const State k1 = rhs(z);
    const State k2 = rhs(axpy(z, 0.5 * h, k1));
    const State k3 = rhs(axpy(z, 0.5 * h, k2));
    const State k4 = rhs(axpy(z, h, k3));
    for (int j = 0; j < 3; ++j) z[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    if (n % stride == 0 || n == steps) {
      if (n == steps && n % stride != 0 && traj.size() > slots) traj.pop_back();
      traj.push_back({h * static_cast<double>(n), z[0], z[1], z[2]});
    }
  }
  return traj;
}

}  // namespace slx
