/* C interface to the closure-EnKF library.
 *
 * All entry points return a ce_status; CE_OK means success. On failure,
 * ce_last_error() returns a thread-local description of the most recent
 * error. Objects are opaque handles owned by the caller and released with
 * their matching *_free function. Strings returned through out-parameters
 * are heap-allocated and must be released with ce_string_free.
 */
#ifndef CLOSURE_ENKF_H
#define CLOSURE_ENKF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ce_config ce_config;

typedef enum ce_status {
    CE_OK = 0,
    CE_ERR_INVALID_ARGUMENT = 1,
    CE_ERR_UNKNOWN_PRESET = 2,
    CE_ERR_UNKNOWN_KEY = 3,
    CE_ERR_CONFIG = 4,
    CE_ERR_IO = 5,
    CE_ERR_NUMERIC = 6,
    CE_ERR_INTERNAL = 7
} ce_status;

const char* ce_version(void);

/* Description of the last error on this thread; empty string if none. */
const char* ce_last_error(void);

/* Newline-separated list of built-in preset names. */
ce_status ce_preset_names(char** out_names);

ce_status ce_config_from_preset(const char* name, ce_config** out_config);
ce_status ce_config_from_file(const char* path, ce_config** out_config);
void ce_config_free(ce_config* config);

/* Applies a "dotted.key" override; the value string is parsed to the key's
 * type. Unknown keys fail with CE_ERR_UNKNOWN_KEY. */
ce_status ce_config_set(ce_config* config, const char* dotted_key, const char* value);

/* Deterministic reduction to desk scale (small grids/ensembles, same physics). */
ce_status ce_config_desk_scale(ce_config* config);

/* Canonical JSON serialization; round-trips through ce_config_from_file. */
ce_status ce_config_to_json(const ce_config* config, char** out_json);

/* Runs one pipeline stage, writing artifacts under out_dir.
 * stage is one of: "truth", "observe", "filter", "search", "experiment". */
ce_status ce_run(const ce_config* config, const char* stage, uint64_t seed,
                 const char* out_dir, int threads);

/* Derives plot-ready data files from a completed run directory. */
ce_status ce_report(const char* run_dir);

void ce_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CLOSURE_ENKF_H */
