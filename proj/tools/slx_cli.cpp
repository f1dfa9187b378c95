// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "slx/slx_c.h"

namespace {

int exit_code(slx_status s) {
  switch (s) {
    case SLX_OK: return 0;
    case SLX_ERR_NUMERIC: return 3;
    case SLX_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

int report(slx_status s) {
  std::fprintf(stderr, "slx: %s: %s\n", slx_status_string(s), slx_last_error());
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dark-exciton super-lattice polaritons: figure datasets and oracle checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  std::string sweep;
  std::string preset = "paper";
  bool plot_script = false;
  app.add_option("--config", config_path, "JSON config overlaid on the preset");
  app.add_option("--out", out_path, "output CSV path (stdout when omitted)");
  app.add_option("--sweep", sweep, "<var>:<min>:<max>:<n>, var in {theta, k, E_drive}");
  app.add_flag("--plot-script", plot_script, "also write <out>.gp for gnuplot");
  app.add_option("--preset", preset, "base parameter set")->check(CLI::IsMember({"paper"}));

  const char* commands[][2] = {
      {"levels", "E_+-, E_s, E_a minus E_A versus theta at k = 0"},
      {"dispersion", "polariton, photon and exciton energies versus k"},
      {"fractions", "exciton and photon fractions of both branches versus k"},
      {"spectrum", "scaled dark-exciton intensities versus E - E_a"},
      {"evolve", "time traces of |A|^2 and |B+-|^2"},
      {"oracle", "exact-diagonalization band and two-excitation checks"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  slx_context* ctx = nullptr;
  slx_status s = slx_context_create(preset.c_str(), &ctx);
  if (s != SLX_OK) return report(s);
  auto finish = [&](slx_status st) {
    slx_context_destroy(ctx);
    return st == SLX_OK ? 0 : report(st);
  };

  if (!config_path.empty() && (s = slx_context_load_file(ctx, config_path.c_str())) != SLX_OK) return finish(s);
  if (!sweep.empty() && (s = slx_context_set_sweep(ctx, sweep.c_str())) != SLX_OK) return finish(s);
  if (!out_path.empty() && (s = slx_context_set_output_path(ctx, out_path.c_str())) != SLX_OK) return finish(s);

  const std::string target = slx_context_output_path(ctx);
  if (plot_script && target.empty()) {
    std::fprintf(stderr, "slx: --plot-script needs an output path\n");
    slx_context_destroy(ctx);
    return 2;
  }

  slx_dataset* ds = nullptr;
  if ((s = slx_run(ctx, command.c_str(), &ds)) != SLX_OK) return finish(s);
  if (target.empty()) {
    std::fputs(slx_dataset_csv(ds), stdout);
  } else {
    s = slx_dataset_write(ds, target.c_str(), plot_script ? 1 : 0);
  }
  slx_dataset_destroy(ds);
  return finish(s);
}
