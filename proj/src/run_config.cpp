#include "slx/run_config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "slx/errors.hpp"
#include "slx/polariton.hpp"

namespace slx {

using nlohmann::json;

namespace {

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto k : allowed) known = known || item.key() == k;
    if (!known) throw ConfigError(std::string(where) + ": unknown key '" + item.key() + "'");
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + ": must be finite");
  return x;
}

void read(const json& obj, const char* key, const std::string& where, double& out) {
  if (obj.contains(key)) out = number(obj.at(key), where + "." + key);
}

// null clears the value so that it is derived again.
void read(const json& obj, const char* key, const std::string& where, std::optional<double>& out) {
  if (!obj.contains(key)) return;
  if (obj.at(key).is_null()) {
    out.reset();
    return;
  }
  out = number(obj.at(key), where + "." + key);
}

void read_complex(const json& obj, const char* key, const std::string& where, cplx& out) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  const std::string name = where + "." + key;
  if (v.is_number()) {
    out = {number(v, name), 0.0};
  } else if (v.is_array() && v.size() == 2) {
    out = {number(v[0], name + "[0]"), number(v[1], name + "[1]")};
  } else {
    throw ConfigError(name + ": expected a number or [re, im]");
  }
}

long integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
  return v.get<long>();
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

double SweepSpec::at(long i) const {
  if (i == points - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
}

SweepSpec parse_sweep(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw ConfigError("sweep: expected <var>:<min>:<max>:<n>");

  auto to_double = [](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ConfigError("sweep: bad number '" + s + "'");
    return x;
  };
  SweepSpec s;
  s.variable = parts[0];
  s.min = to_double(parts[1]);
  s.max = to_double(parts[2]);
  std::size_t used = 0;
  try {
    s.points = std::stol(parts[3], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != parts[3].size()) throw ConfigError("sweep: bad point count '" + parts[3] + "'");
  return s;
}

void RunConfig::validate() const {
  lattice.validate();
  if (!(epsilon >= 1.0)) throw ConfigError("waveguide.epsilon must be >= 1");
  if (!(u_b > 0.0) || !(u_b <= 1.0)) throw ConfigError("waveguide.u_b must lie in (0, 1]");
  if (q0 && E_ph0) throw ConfigError("waveguide: give q0 or E_ph0, not both");
  if (q0 && !(*q0 > 0.0)) throw ConfigError("waveguide.q0 must be positive");
  if (E_ph0 && !(*E_ph0 > 0.0)) throw ConfigError("waveguide.E_ph0 must be positive");
  if (S_bar && !(*S_bar > 0.0)) throw ConfigError("waveguide.S_bar must be positive");
  if (E_drive && !(*E_drive > 0.0)) throw ConfigError("drive.E_drive must be positive");
  if (k_pump && !(*k_pump >= 0.0)) throw ConfigError("drive.k_pump must be non-negative");
  if (!(Gamma_ph >= 0.0) || !(Gamma_s >= 0.0) || !(Gamma_a >= 0.0))
    throw ConfigError("drive: damping rates must be non-negative");
  if (!(N_pump >= 0.0)) throw ConfigError("drive.N_pump must be non-negative");

  if (sweep) {
    if (sweep->variable != "theta" && sweep->variable != "k" && sweep->variable != "E_drive")
      throw ConfigError("sweep: variable must be theta, k or E_drive");
    if (sweep->points < 2 || sweep->points > 10'000'000)
      throw ConfigError("sweep: point count must lie in [2, 1e7]");
    if (!std::isfinite(sweep->min) || !std::isfinite(sweep->max))
      throw ConfigError("sweep: bounds must be finite");
  }
  if (!(evolve.t_end > 0.0)) throw ConfigError("evolve.t_end must be positive");
  if (evolve.dt && !(*evolve.dt > 0.0)) throw ConfigError("evolve.dt must be positive");
  if (evolve.samples < 2) throw ConfigError("evolve.samples must be at least 2");
  if (!(evolve.damping_floor >= 0.0)) throw ConfigError("evolve.damping_floor must be non-negative");
  if (oracle.n_cells.empty()) throw ConfigError("oracle.n_cells must not be empty");
  for (int n : oracle.n_cells)
    if (n < 3 || n > 7 || n % 2 == 0) throw ConfigError("oracle.n_cells entries must be odd and in [3, 7]");
}

RunConfig paper_preset() { return RunConfig{}; }

RunConfig load_run_config(std::string_view json_text, const RunConfig& base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  check_keys(doc, "config", {"lattice", "waveguide", "drive", "sweep", "evolve", "oracle", "output_path"});
  RunConfig rc = base;

  if (doc.contains("lattice")) {
    const json& j = doc.at("lattice");
    check_keys(j, "lattice", {"E_A", "a", "R", "mu", "theta_deg", "N"});
    read(j, "E_A", "lattice", rc.lattice.E_A);
    read(j, "a", "lattice", rc.lattice.a);
    read(j, "R", "lattice", rc.lattice.R);
    read(j, "mu", "lattice", rc.lattice.mu);
    if (j.contains("theta_deg")) rc.lattice.theta = number(j.at("theta_deg"), "lattice.theta_deg") * kDegree;
    if (j.contains("N")) rc.lattice.N = integer(j.at("N"), "lattice.N");
  }
  if (doc.contains("waveguide")) {
    const json& j = doc.at("waveguide");
    check_keys(j, "waveguide", {"epsilon", "u_b", "q0", "E_ph0", "S_bar", "L"});
    read(j, "epsilon", "waveguide", rc.epsilon);
    read(j, "u_b", "waveguide", rc.u_b);
    read(j, "q0", "waveguide", rc.q0);
    read(j, "E_ph0", "waveguide", rc.E_ph0);
    read(j, "S_bar", "waveguide", rc.S_bar);
    read(j, "L", "waveguide", rc.L);
  }
  if (doc.contains("drive")) {
    const json& j = doc.at("drive");
    check_keys(j, "drive", {"E_drive", "k_pump", "F_pump", "F_probe_plus", "F_probe_minus", "Gamma_ph",
                            "Gamma_s", "Gamma_a", "q", "N_pump", "self_consistent"});
    read(j, "E_drive", "drive", rc.E_drive);
    read(j, "k_pump", "drive", rc.k_pump);
    read_complex(j, "F_pump", "drive", rc.F_pump);
    read_complex(j, "F_probe_plus", "drive", rc.F_probe_plus);
    read_complex(j, "F_probe_minus", "drive", rc.F_probe_minus);
    read(j, "Gamma_ph", "drive", rc.Gamma_ph);
    read(j, "Gamma_s", "drive", rc.Gamma_s);
    read(j, "Gamma_a", "drive", rc.Gamma_a);
    read(j, "q", "drive", rc.q);
    read(j, "N_pump", "drive", rc.N_pump);
    if (j.contains("self_consistent")) {
      if (!j.at("self_consistent").is_boolean()) throw ConfigError("drive.self_consistent: expected a boolean");
      rc.self_consistent = j.at("self_consistent").get<bool>();
    }
  }
  if (doc.contains("sweep")) {
    const json& j = doc.at("sweep");
    if (j.is_null()) {
      rc.sweep.reset();
    } else {
      check_keys(j, "sweep", {"variable", "min", "max", "points"});
      for (const char* k : {"variable", "min", "max", "points"})
        if (!j.contains(k)) throw ConfigError(std::string("sweep: missing '") + k + "'");
      if (!j.at("variable").is_string()) throw ConfigError("sweep.variable: expected a string");
      SweepSpec s;
      s.variable = j.at("variable").get<std::string>();
      s.min = number(j.at("min"), "sweep.min");
      s.max = number(j.at("max"), "sweep.max");
      s.points = integer(j.at("points"), "sweep.points");
      rc.sweep = s;
    }
  }
  if (doc.contains("evolve")) {
    const json& j = doc.at("evolve");
    check_keys(j, "evolve", {"t_end", "dt", "samples", "damping_floor"});
    read(j, "t_end", "evolve", rc.evolve.t_end);
    read(j, "dt", "evolve", rc.evolve.dt);
    if (j.contains("samples")) rc.evolve.samples = integer(j.at("samples"), "evolve.samples");
    read(j, "damping_floor", "evolve", rc.evolve.damping_floor);
  }
  if (doc.contains("oracle")) {
    const json& j = doc.at("oracle");
    check_keys(j, "oracle", {"n_cells", "V_dyn"});
    if (j.contains("n_cells")) {
      const json& n = j.at("n_cells");
      rc.oracle.n_cells.clear();
      if (n.is_array()) {
        for (const auto& x : n) rc.oracle.n_cells.push_back(static_cast<int>(integer(x, "oracle.n_cells")));
      } else {
        rc.oracle.n_cells.push_back(static_cast<int>(integer(n, "oracle.n_cells")));
      }
    }
    read(j, "V_dyn", "oracle", rc.oracle.V_dyn);
  }
  if (doc.contains("output_path")) {
    if (!doc.at("output_path").is_string()) throw ConfigError("output_path: expected a string");
    rc.output_path = doc.at("output_path").get<std::string>();
  }
  rc.validate();
  return rc;
}

RunConfig load_run_config_file(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return load_run_config(buf.str(), base);
}

ResolvedRun resolve(const RunConfig& rc) {
  rc.validate();
  ResolvedRun run;
  run.lattice = rc.lattice;
  const double a = rc.lattice.a;
  run.waveguide = WaveguideConfig::from_resonance(
      rc.epsilon, rc.E_ph0.value_or(rc.lattice.E_A), rc.u_b,
      rc.S_bar.value_or(std::numbers::pi * a * a),
      rc.L.value_or(static_cast<double>(rc.lattice.N) * a));
  if (rc.q0) run.waveguide.q0 = *rc.q0;
  run.waveguide.validate(run.lattice);

  const double e_dark = antisymmetric_energy(run.lattice);
  DriveConfig& d = run.drive;
  d.E_drive = rc.E_drive.value_or(e_dark);
  d.k_pump = rc.k_pump ? *rc.k_pump
                       : find_resonance_k(e_dark, Branch::lower, run.waveguide, run.lattice);
  d.F_pump = rc.F_pump;
  d.F_probe_plus = rc.F_probe_plus;
  d.F_probe_minus = rc.F_probe_minus;
  d.Gamma_ph = rc.Gamma_ph;
  d.Gamma_s = rc.Gamma_s;
  d.Gamma_a = rc.Gamma_a;
  d.q = rc.q;
  if (!rc.self_consistent) d.N_prescribed = rc.N_pump;
  d.validate();
  return run;
}

std::string resolved_json(const RunConfig& rc, const ResolvedRun& run) {
  json j;
  j["lattice"] = {{"E_A", run.lattice.E_A},     {"a", run.lattice.a},
                  {"R", run.lattice.R},         {"mu", run.lattice.mu},
                  {"theta_deg", run.lattice.theta / kDegree}, {"N", run.lattice.N}};
  j["waveguide"] = {{"epsilon", run.waveguide.epsilon}, {"q0", run.waveguide.q0},
                    {"u_b", run.waveguide.u_b},         {"S_bar", run.waveguide.S_bar},
                    {"L", run.waveguide.L}};
  const DriveConfig& d = run.drive;
  j["drive"] = {{"E_drive", d.E_drive},
                {"k_pump", d.k_pump},
                {"F_pump", complex_json(d.F_pump)},
                {"F_probe_plus", complex_json(d.F_probe_plus)},
                {"F_probe_minus", complex_json(d.F_probe_minus)},
                {"Gamma_ph", d.Gamma_ph},
                {"Gamma_s", d.Gamma_s},
                {"Gamma_a", d.Gamma_a},
                {"q", d.q},
                {"N_pump", d.N_prescribed ? json(*d.N_prescribed) : json(nullptr)},
                {"self_consistent", rc.self_consistent}};
  if (rc.sweep)
    j["sweep"] = {{"variable", rc.sweep->variable}, {"min", rc.sweep->min},
                  {"max", rc.sweep->max},           {"points", rc.sweep->points}};
  j["evolve"] = {{"t_end", rc.evolve.t_end},
                 {"dt", rc.evolve.dt ? json(*rc.evolve.dt) : json(nullptr)},
                 {"samples", rc.evolve.samples},
                 {"damping_floor", rc.evolve.damping_floor}};
  j["oracle"] = {{"n_cells", rc.oracle.n_cells}, {"V_dyn", rc.oracle.V_dyn}};
  j["output_path"] = rc.output_path;
  return j.dump();
}

}  // namespace slx
