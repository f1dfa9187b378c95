#ifndef SLX_C_H
#define SLX_C_H

#include <stddef.h>

#if defined(_WIN32)
#define SLX_API __declspec(dllexport)
#else
#define SLX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct slx_context slx_context;
typedef struct slx_dataset slx_dataset;

typedef enum slx_status {
  SLX_OK = 0,
  SLX_ERR_ARGUMENT = 1, /* null pointer, unknown command or preset */
  SLX_ERR_CONFIG = 2,
  SLX_ERR_NUMERIC = 3,
  SLX_ERR_IO = 4,
  SLX_ERR_INTERNAL = 5
} slx_status;

/* Message of the last failed call on this thread; "" after success. */
SLX_API const char* slx_last_error(void);
SLX_API const char* slx_status_string(slx_status status);

/* preset: "paper" or NULL (same parameter set). */
SLX_API slx_status slx_context_create(const char* preset, slx_context** out);
SLX_API void slx_context_destroy(slx_context* ctx);

/* Overlay a JSON document on the current parameters. On failure the
   context is left unchanged. */
SLX_API slx_status slx_context_load_json(slx_context* ctx, const char* json_text);
SLX_API slx_status slx_context_load_file(slx_context* ctx, const char* path);

/* "<var>:<min>:<max>:<n>", or NULL to fall back to each command's default axis. */
SLX_API slx_status slx_context_set_sweep(slx_context* ctx, const char* spec);
SLX_API slx_status slx_context_set_output_path(slx_context* ctx, const char* path);
/* Borrowed; valid until the context changes. Empty when unset. */
SLX_API const char* slx_context_output_path(const slx_context* ctx);

/* Resolved config as compact JSON; the string belongs to the context. */
SLX_API slx_status slx_context_resolved_json(slx_context* ctx, const char** out);

/* Pump wavenumber where the lower branch meets the dark level, and the
   lower-branch exciton fraction there. */
SLX_API slx_status slx_operating_point(const slx_context* ctx, double* k_star, double* X2_lower);
SLX_API slx_status slx_interaction_constants(const slx_context* ctx, double* q0, double* m_c2,
                                             double* Delta, double* Delta_tilde);

/* command: levels, dispersion, fractions, spectrum, evolve, oracle. */
SLX_API slx_status slx_run(const slx_context* ctx, const char* command, slx_dataset** out);

SLX_API size_t slx_dataset_rows(const slx_dataset* ds);
SLX_API size_t slx_dataset_cols(const slx_dataset* ds);
SLX_API const char* slx_dataset_column_name(const slx_dataset* ds, size_t col);
SLX_API slx_status slx_dataset_value(const slx_dataset* ds, size_t row, size_t col, double* out);
/* NULL when the key is absent. */
SLX_API const char* slx_dataset_metadata(const slx_dataset* ds, const char* key);
/* Full CSV text, owned by the dataset. */
SLX_API const char* slx_dataset_csv(slx_dataset* ds);
SLX_API slx_status slx_dataset_write(const slx_dataset* ds, const char* path, int plot_script);
SLX_API void slx_dataset_destroy(slx_dataset* ds);

#ifdef __cplusplus
}
#endif

#endif
