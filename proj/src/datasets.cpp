#include "slx/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "slx/ed_oracle.hpp"
#include "slx/errors.hpp"
#include "slx/kinematic.hpp"
#include "slx/polariton.hpp"
#include "slx/pumpprobe.hpp"

namespace slx {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> Dataset::column(std::size_t col) const {
  std::vector<double> out(rows());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = at(r, col);
  return out;
}

std::optional<std::string> Dataset::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return std::nullopt;
}

std::string Dataset::to_csv() const {
  std::string out;
  for (const auto& [k, v] : metadata) out += "# " + k + ": " + v + "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + columns[c];
  out += "\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      if (c) out += ',';
      out += format_number(at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string Dataset::gnuplot_script(const std::string& data_path) const {
  std::ostringstream os;
  os << "set datafile separator \",\"\n"
     << "set datafile commentschars \"#\"\n"
     << "set key autotitle columnhead\n"
     << "set xlabel \"" << (columns.empty() ? "" : columns[0]) << "\"\n"
     << "set title \"" << command << "\"\n"
     << "plot ";
  for (std::size_t c = 1; c < columns.size(); ++c)
    os << (c > 1 ? ", \\\n     " : "") << "'" << data_path << "' using 1:" << c + 1 << " with lines";
  os << "\n";
  return os.str();
}

void Dataset::write(const std::string& path, bool plot_script) const {
  auto dump = [](const std::string& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError(p, "cannot open for writing");
    out << text;
    out.close();
    if (!out) throw IoError(p, "write failed");
  };
  dump(path, to_csv());
  if (plot_script) dump(path + ".gp", gnuplot_script(path));
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::levels, Command::dispersion, Command::fractions, Command::spectrum,
                    Command::evolve, Command::oracle})
    if (command_name(c) == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::levels: return "levels";
    case Command::dispersion: return "dispersion";
    case Command::fractions: return "fractions";
    case Command::spectrum: return "spectrum";
    case Command::evolve: return "evolve";
    case Command::oracle: return "oracle";
  }
  return "";
}

namespace {

Dataset start(Command c, std::vector<std::string> columns, const RunConfig& rc, const ResolvedRun& run) {
  Dataset ds;
  ds.command = std::string(command_name(c));
  ds.columns = std::move(columns);
  ds.metadata = {{"command", ds.command},
                 {"config", resolved_json(rc, run)},
                 {"hbar_c_eV_A", format_number(kConstants.hbar_c())},
                 {"coulomb_eV_A", format_number(kConstants.coulomb_mu2_prefactor())},
                 {"units", "eV, Angstrom, 1/Angstrom, degrees, hbar/eV"}};
  return ds;
}

SweepSpec axis(const RunConfig& rc, std::string_view command, std::string_view variable, SweepSpec fallback) {
  if (!rc.sweep) return fallback;
  if (rc.sweep->variable != variable)
    throw ConfigError(std::string(command) + ": sweep variable must be " + std::string(variable));
  return *rc.sweep;
}

void push_row(Dataset& ds, std::initializer_list<double> row) {
  ds.values.insert(ds.values.end(), row.begin(), row.end());
}

void add_k_star(Dataset& ds, const ResolvedRun& run) {
  try {
    const double e_dark = antisymmetric_energy(run.lattice);
    const double k = find_resonance_k(e_dark, Branch::lower, run.waveguide, run.lattice);
    ds.metadata.emplace_back("k_star", format_number(k));
    const HopfieldMode m = hopfield(k, run.waveguide, run.lattice);
    ds.metadata.emplace_back("X2_lower_at_k_star", format_number(m.exciton_fraction(Branch::lower)));
  } catch (const NumericalError& e) {
    ds.metadata.emplace_back("k_star", std::string("none (") + e.what() + ")");
  }
}

}  // namespace

Dataset cmd_levels(const RunConfig& rc) {
  const ResolvedRun run = resolve(rc);
  const SweepSpec s = axis(rc, "levels", "theta", {"theta", 0.0, 90.0, 1001});
  Dataset ds = start(Command::levels, {"theta_deg", "E_plus", "E_minus", "E_s", "E_a"}, rc, run);
  ds.metadata.emplace_back("magic_angle_deg", format_number(magic_angle() / kDegree));
  ds.metadata.emplace_back("energies", "offsets from E_A at k = 0; E_s is the bare on-cell level");
  ds.values.reserve(static_cast<std::size_t>(s.points) * 5);
  SuperLatticeConfig cfg = run.lattice;
  for (long i = 0; i < s.points; ++i) {
    const double deg = s.at(i);
    cfg.theta = deg * kDegree;
    cfg.validate();
    const ExcitonLevels lv = exciton_levels(cfg);
    const HopfieldMode m = hopfield(0.0, run.waveguide, cfg);
    push_row(ds, {deg, m.E_upper - cfg.E_A, m.E_lower - cfg.E_A, lv.E_s - cfg.E_A, lv.E_a - cfg.E_A});
  }
  return ds;
}

Dataset cmd_dispersion(const RunConfig& rc) {
  const ResolvedRun run = resolve(rc);
  const SweepSpec s = axis(rc, "dispersion", "k", {"k", 0.0, 5e-5, 1001});
  Dataset ds = start(Command::dispersion, {"k", "E_plus", "E_minus", "E_ph", "E_s", "E_a"}, rc, run);
  ds.metadata.emplace_back("energies", "offsets from E_A; E_s is the symmetric band E_s(k)");
  add_k_star(ds, run);
  const double e_A = run.lattice.E_A;
  const double e_dark = antisymmetric_energy(run.lattice) - e_A;
  for (long i = 0; i < s.points; ++i) {
    const double k = s.at(i);
    const HopfieldMode m = hopfield(k, run.waveguide, run.lattice);
    push_row(ds, {k, m.E_upper - e_A, m.E_lower - e_A, m.E_ph - e_A, m.E_s - e_A, e_dark});
  }
  return ds;
}

Dataset cmd_fractions(const RunConfig& rc) {
  const ResolvedRun run = resolve(rc);
  const SweepSpec s = axis(rc, "fractions", "k", {"k", 0.0, 5e-5, 1001});
  Dataset ds = start(Command::fractions, {"k", "X2_upper", "Y2_upper", "X2_lower", "Y2_lower"}, rc, run);
  add_k_star(ds, run);
  for (long i = 0; i < s.points; ++i) {
    const double k = s.at(i);
    const HopfieldMode m = hopfield(k, run.waveguide, run.lattice);
    push_row(ds, {k, m.exciton_fraction(Branch::upper), m.photon_fraction(Branch::upper),
                  m.exciton_fraction(Branch::lower), m.photon_fraction(Branch::lower)});
  }
  return ds;
}

Dataset cmd_spectrum(const RunConfig& rc) {
  const ResolvedRun run = resolve(rc);
  const SweepSpec s = axis(rc, "spectrum", "E_drive", {"E_drive", 0.0, 4e-4, 10001});
  Dataset ds = start(Command::spectrum, {"E_offset", "I_minus_scaled", "I_plus_scaled"}, rc, run);
  const PumpProbeModel model = make_pump_probe_model(run.lattice, run.waveguide, run.drive.k_pump);
  ds.metadata.emplace_back("E_offset", "E - E_a (eV); intensities over |F+|^2 + |F-|^2");
  ds.metadata.emplace_back("X2", format_number(model.interaction.X2));
  ds.metadata.emplace_back("Delta", format_number(model.interaction.Delta));
  ds.metadata.emplace_back("Delta_tilde", format_number(model.interaction.Delta_tilde));
  if (run.drive.N_prescribed) {
    try {
      const SteadyState ss = steady_state(run.drive, model);
      ds.metadata.emplace_back("E_res_minus_offset", format_number(ss.E_res_minus - model.E_dark));
      ds.metadata.emplace_back("E_res_plus_offset", format_number(ss.E_res_plus - model.E_dark));
      ds.metadata.emplace_back("split", ss.split ? "true" : "false");
    } catch (const PoleError&) {
      ds.metadata.emplace_back("E_res", "unavailable: reference drive on a pole");
    }
  }

  std::vector<double> offsets(static_cast<std::size_t>(s.points));
  for (long i = 0; i < s.points; ++i) offsets[static_cast<std::size_t>(i)] = s.at(i);
  const std::vector<SpectrumPoint> pts = spectrum(run.drive, model, offsets);
  ds.values.reserve(pts.size() * 3);
  std::vector<double> idler;
  idler.reserve(pts.size());
  for (const SpectrumPoint& p : pts) {
    push_row(ds, {p.E_offset, p.I_minus_scaled, p.I_plus_scaled});
    idler.push_back(p.I_minus_scaled);
  }
  std::string peaks;
  for (std::size_t i : local_maxima(idler)) peaks += (peaks.empty() ? "" : " ") + format_number(offsets[i]);
  ds.metadata.emplace_back("I_minus_peaks", peaks.empty() ? "none" : peaks);
  return ds;
}

Dataset cmd_evolve(const RunConfig& rc) {
  RunConfig floored = rc;
  const double floor = rc.evolve.damping_floor;
  floored.Gamma_ph = std::max(rc.Gamma_ph, floor);
  floored.Gamma_s = std::max(rc.Gamma_s, floor);
  floored.Gamma_a = std::max(rc.Gamma_a, floor);
  const ResolvedRun run = resolve(floored);
  if (rc.sweep) throw ConfigError("evolve: sweeps are not supported");

  Dataset ds = start(Command::evolve, {"t", "A_abs2", "B_plus_abs2", "B_minus_abs2"}, floored, run);
  const PumpProbeModel model = make_pump_probe_model(run.lattice, run.waveguide, run.drive.k_pump);
  const SteadyState ss = steady_state(run.drive, model);
  const double E = run.drive.E_drive;
  const double rate = std::max({std::abs(ss.E_pol_tilde - E), ss.Gamma_pol, std::abs(ss.E_a_tilde - E),
                                ss.V_mf, run.drive.Gamma_a});
  const double dt = rc.evolve.dt ? *rc.evolve.dt : (rate > 0.0 ? 0.05 / rate : rc.evolve.t_end);
  const auto traj = time_evolve(run.drive, model, rc.evolve.t_end, dt,
                                static_cast<std::size_t>(rc.evolve.samples));
  for (const TrajectorySample& p : traj)
    push_row(ds, {p.t, std::norm(p.A), std::norm(p.B_plus), std::norm(p.B_minus)});

  auto rel = [](cplx got, cplx want) {
    const double d = std::abs(got - want);
    return std::abs(want) > 0.0 ? d / std::abs(want) : d;
  };
  const TrajectorySample& last = traj.back();
  const double dev = std::max({rel(last.A, ss.A_amp), rel(last.B_plus, ss.B_plus), rel(last.B_minus, ss.B_minus)});
  ds.metadata.emplace_back("dt", format_number(dt));
  ds.metadata.emplace_back("steady_A_abs2", format_number(std::norm(ss.A_amp)));
  ds.metadata.emplace_back("steady_B_plus_abs2", format_number(ss.I_plus));
  ds.metadata.emplace_back("steady_B_minus_abs2", format_number(ss.I_minus));
  ds.metadata.emplace_back("final_relative_deviation", format_number(dev));
  return ds;
}

Dataset cmd_oracle(const RunConfig& rc) {
  const ResolvedRun run = resolve(rc);
  if (rc.sweep) throw ConfigError("oracle: sweeps are not supported");
  Dataset ds = start(Command::oracle,
                     {"n_cells", "band_max_deviation", "band_deviation_over_J", "band_predicted_deviation",
                      "dark_count", "band_within_contract", "two_exc_dimension", "structural_ok",
                      "cluster_size", "cluster_offset", "min_separation", "resonant"},
                     rc, run);
  const ExcitonLevels lv = exciton_levels(run.lattice);
  ds.metadata.emplace_back("J0", format_number(lv.J0));
  ds.metadata.emplace_back("V_dyn", format_number(rc.oracle.V_dyn));
  ds.metadata.emplace_back("band_check", "single excitation, periodic, nearest-neighbor cells, R = a/100");
  for (int n : rc.oracle.n_cells) {
    const BandReport b = validate_band(run.lattice, n);
    const BlockingReport k = validate_blocking(run.lattice, n, rc.oracle.V_dyn);
    push_row(ds, {static_cast<double>(n), b.max_deviation, b.deviation_over_J, b.predicted_deviation,
                  static_cast<double>(b.dark_count), b.within_contract ? 1.0 : 0.0,
                  static_cast<double>(k.dimension), k.structural_ok ? 1.0 : 0.0,
                  static_cast<double>(k.cluster.size()), k.cluster_offset, k.min_separation,
                  k.resonant ? 1.0 : 0.0});
  }
  return ds;
}

Dataset run_command(Command c, const RunConfig& rc) {
  switch (c) {
    case Command::levels: return cmd_levels(rc);
    case Command::dispersion: return cmd_dispersion(rc);
    case Command::fractions: return cmd_fractions(rc);
    case Command::spectrum: return cmd_spectrum(rc);
    case Command::evolve: return cmd_evolve(rc);
    case Command::oracle: return cmd_oracle(rc);
  }
  throw ConfigError("unknown command");
}

}  // namespace slx
