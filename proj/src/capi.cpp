#include "slx/slx_c.h"

#include <cstring>
#include <new>
#include <string>

#include "slx/datasets.hpp"
#include "slx/errors.hpp"
#include "slx/kinematic.hpp"
#include "slx/polariton.hpp"
#include "slx/run_config.hpp"

struct slx_context {
  slx::RunConfig config;
  std::string resolved;
};

struct slx_dataset {
  slx::Dataset data;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

slx_status fail(slx_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Every entry point funnels exceptions through here so nothing escapes the C boundary.
template <class F>
slx_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SLX_OK;
  } catch (const slx::ConfigError& e) {
    return fail(SLX_ERR_CONFIG, e.what());
  } catch (const slx::IoError& e) {
    return fail(SLX_ERR_IO, e.what());
  } catch (const slx::NumericalError& e) {
    return fail(SLX_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SLX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SLX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SLX_ERR_INTERNAL, "unknown exception");
  }
}

slx_status null_arg(const char* fn) { return fail(SLX_ERR_ARGUMENT, std::string(fn) + ": null argument"); }

}  // namespace

extern "C" {

const char* slx_last_error(void) { return g_last_error.c_str(); }

const char* slx_status_string(slx_status status) {
  switch (status) {
    case SLX_OK: return "ok";
    case SLX_ERR_ARGUMENT: return "invalid argument";
    case SLX_ERR_CONFIG: return "configuration error";
    case SLX_ERR_NUMERIC: return "numerical error";
    case SLX_ERR_IO: return "i/o error";
    case SLX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

slx_status slx_context_create(const char* preset, slx_context** out) {
  if (!out) return null_arg("slx_context_create");
  *out = nullptr;
  if (preset && std::strcmp(preset, "paper") != 0)
    return fail(SLX_ERR_ARGUMENT, std::string("unknown preset '") + preset + "'");
  return guarded([&] { *out = new slx_context{slx::paper_preset(), {}}; });
}

void slx_context_destroy(slx_context* ctx) { delete ctx; }

slx_status slx_context_load_json(slx_context* ctx, const char* json_text) {
  if (!ctx || !json_text) return null_arg("slx_context_load_json");
  return guarded([&] { ctx->config = slx::load_run_config(json_text, ctx->config); });
}

slx_status slx_context_load_file(slx_context* ctx, const char* path) {
  if (!ctx || !path) return null_arg("slx_context_load_file");
  return guarded([&] { ctx->config = slx::load_run_config_file(path, ctx->config); });
}

slx_status slx_context_set_sweep(slx_context* ctx, const char* spec) {
  if (!ctx) return null_arg("slx_context_set_sweep");
  return guarded([&] {
    slx::RunConfig next = ctx->config;
    if (spec)
      next.sweep = slx::parse_sweep(spec);
    else
      next.sweep.reset();
    next.validate();
    ctx->config = std::move(next);
  });
}

slx_status slx_context_set_output_path(slx_context* ctx, const char* path) {
  if (!ctx || !path) return null_arg("slx_context_set_output_path");
  return guarded([&] { ctx->config.output_path = path; });
}

const char* slx_context_output_path(const slx_context* ctx) {
  return ctx ? ctx->config.output_path.c_str() : "";
}

slx_status slx_context_resolved_json(slx_context* ctx, const char** out) {
  if (!ctx || !out) return null_arg("slx_context_resolved_json");
  return guarded([&] {
    ctx->resolved = slx::resolved_json(ctx->config, slx::resolve(ctx->config));
    *out = ctx->resolved.c_str();
  });
}

slx_status slx_operating_point(const slx_context* ctx, double* k_star, double* X2_lower) {
  if (!ctx || !k_star || !X2_lower) return null_arg("slx_operating_point");
  return guarded([&] {
    const slx::ResolvedRun run = slx::resolve(ctx->config);
    const double e_dark = slx::antisymmetric_energy(run.lattice);
    const double k = slx::find_resonance_k(e_dark, slx::Branch::lower, run.waveguide, run.lattice);
    *k_star = k;
    *X2_lower = slx::hopfield(k, run.waveguide, run.lattice).exciton_fraction(slx::Branch::lower);
  });
}

slx_status slx_interaction_constants(const slx_context* ctx, double* q0, double* m_c2, double* Delta,
                                     double* Delta_tilde) {
  if (!ctx || !q0 || !m_c2 || !Delta || !Delta_tilde) return null_arg("slx_interaction_constants");
  return guarded([&] {
    const slx::ResolvedRun run = slx::resolve(ctx->config);
    const slx::HopfieldMode m = slx::hopfield(run.drive.k_pump, run.waveguide, run.lattice);
    const slx::InteractionParams ip =
        slx::interaction_params(run.waveguide, run.lattice, m.exciton_fraction(slx::Branch::lower));
    *q0 = run.waveguide.q0;
    *m_c2 = ip.m_c2;
    *Delta = ip.Delta;
    *Delta_tilde = ip.Delta_tilde;
  });
}

slx_status slx_run(const slx_context* ctx, const char* command, slx_dataset** out) {
  if (!ctx || !command || !out) return null_arg("slx_run");
  *out = nullptr;
  const auto cmd = slx::parse_command(command);
  if (!cmd) return fail(SLX_ERR_ARGUMENT, std::string("unknown command '") + command + "'");
  return guarded([&] { *out = new slx_dataset{slx::run_command(*cmd, ctx->config), {}}; });
}

size_t slx_dataset_rows(const slx_dataset* ds) { return ds ? ds->data.rows() : 0; }
size_t slx_dataset_cols(const slx_dataset* ds) { return ds ? ds->data.cols() : 0; }

const char* slx_dataset_column_name(const slx_dataset* ds, size_t col) {
  if (!ds || col >= ds->data.cols()) return nullptr;
  return ds->data.columns[col].c_str();
}

slx_status slx_dataset_value(const slx_dataset* ds, size_t row, size_t col, double* out) {
  if (!ds || !out) return null_arg("slx_dataset_value");
  if (row >= ds->data.rows() || col >= ds->data.cols())
    return fail(SLX_ERR_ARGUMENT, "slx_dataset_value: index out of range");
  *out = ds->data.at(row, col);
  g_last_error.clear();
  return SLX_OK;
}

const char* slx_dataset_metadata(const slx_dataset* ds, const char* key) {
  if (!ds || !key) return nullptr;
  for (const auto& [k, v] : ds->data.metadata)
    if (k == key) return v.c_str();
  return nullptr;
}

const char* slx_dataset_csv(slx_dataset* ds) {
  if (!ds) return nullptr;
  if (ds->csv.empty()) ds->csv = ds->data.to_csv();
  return ds->csv.c_str();
}

slx_status slx_dataset_write(const slx_dataset* ds, const char* path, int plot_script) {
  if (!ds || !path) return null_arg("slx_dataset_write");
  return guarded([&] { ds->data.write(path, plot_script != 0); });
}

void slx_dataset_destroy(slx_dataset* ds) { delete ds; }

}  // extern "C"
