#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slx/run_config.hpp"

namespace slx {

/// Numeric table plus "key: value" metadata, written as CSV with '#' header
/// lines. Formatting is fixed ("%.17g") so equal inputs give equal bytes.
struct Dataset {
  std::string command;
  std::vector<std::string> columns;
  std::vector<double> values;  // row-major
  std::vector<std::pair<std::string, std::string>> metadata;

  std::size_t cols() const { return columns.size(); }
  std::size_t rows() const { return columns.empty() ? 0 : values.size() / columns.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * columns.size() + col]; }
  std::vector<double> column(std::size_t col) const;
  /// Metadata value for `key`, if present.
  std::optional<std::string> meta(std::string_view key) const;

  std::string to_csv() const;
  /// Companion gnuplot script plotting every column against the first.
  std::string gnuplot_script(const std::string& data_path) const;
  /// Writes the CSV and, when asked, `path + ".gp"`. Throws IoError.
  void write(const std::string& path, bool plot_script) const;
};

enum class Command { levels, dispersion, fractions, spectrum, evolve, oracle };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

/// E_plus, E_minus, E_s (bare), E_a minus E_A at k = 0 versus theta in degrees.
Dataset cmd_levels(const RunConfig& rc);
/// Branch, photon and exciton energies minus E_A versus k.
Dataset cmd_dispersion(const RunConfig& rc);
/// Exciton and photon fractions of both branches versus k.
Dataset cmd_fractions(const RunConfig& rc);
/// Scaled dark intensities versus E - E_a.
Dataset cmd_spectrum(const RunConfig& rc);
/// RK4 traces of |A|^2 and |B+-|^2 with all damping rates floored.
Dataset cmd_evolve(const RunConfig& rc);
/// One row per cell count: band and two-excitation oracle checks.
Dataset cmd_oracle(const RunConfig& rc);

Dataset run_command(Command c, const RunConfig& rc);

std::string format_number(double x);

}  // namespace slx
