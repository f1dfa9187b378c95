#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slx/lattice.hpp"
#include "slx/pumpprobe.hpp"
#include "slx/waveguide.hpp"

namespace slx {

struct SweepSpec {
  std::string variable;  // theta (degrees), k (1/Angstrom) or E_drive (offset from E_a, eV)
  double min = 0.0;
  double max = 0.0;
  long points = 0;

  double at(long i) const;
};

/// Parses "<var>:<min>:<max>:<n>". Throws ConfigError.
SweepSpec parse_sweep(std::string_view text);

struct EvolveSpec {
  double t_end = 4e7;           // hbar/eV
  std::optional<double> dt;     // default 0.05 over the fastest rate
  long samples = 1000;
  double damping_floor = 1e-6;  // lower bound applied to every damping rate (eV)
};

struct OracleSpec {
  std::vector<int> n_cells{3, 5, 7};
  double V_dyn = 1e-3;
};

/// User-facing run parameters. Quantities left empty are derived when the
/// run is resolved: q0 from zero photon detuning, S_bar = pi a^2, L = N a,
/// E_drive = E_a and k_pump where the lower branch meets E_a.
struct RunConfig {
  SuperLatticeConfig lattice;

  double epsilon = 2.0;
  double u_b = 0.25;
  std::optional<double> q0;
  std::optional<double> E_ph0;
  std::optional<double> S_bar;
  std::optional<double> L;

  std::optional<double> E_drive;
  std::optional<double> k_pump;
  cplx F_pump{1.0, 0.0};
  cplx F_probe_plus{1.0, 0.0};
  cplx F_probe_minus{0.0, 0.0};
  double Gamma_ph = 1e-10;
  double Gamma_s = 1e-8;
  double Gamma_a = 1e-12;
  double q = 1e-6;
  double N_pump = 1.0;
  bool self_consistent = false;  // solve N from F_pump instead of prescribing it

  std::optional<SweepSpec> sweep;
  EvolveSpec evolve;
  OracleSpec oracle;
  std::string output_path;

  /// Checks field ranges that do not need derived quantities.
  void validate() const;
};

/// Concrete configs with every derived quantity filled in.
struct ResolvedRun {
  SuperLatticeConfig lattice;
  WaveguideConfig waveguide;
  DriveConfig drive;
};

RunConfig paper_preset();

/// Overlays a JSON document on `base`. Unknown keys and wrong types throw
/// ConfigError. Angles are in degrees.
RunConfig load_run_config(std::string_view json_text, const RunConfig& base = paper_preset());

/// Reads and parses a file; IoError on read failure.
RunConfig load_run_config_file(const std::string& path, const RunConfig& base = paper_preset());

/// Throws ConfigError for invalid input and NumericalError when a derived
/// quantity (the default pump wavenumber) does not exist.
ResolvedRun resolve(const RunConfig& rc);

/// Compact JSON of the resolved parameter set, sorted keys.
std::string resolved_json(const RunConfig& rc, const ResolvedRun& run);

}  // namespace slx
