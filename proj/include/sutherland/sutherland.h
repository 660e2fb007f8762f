#ifndef SUTHERLAND_SUTHERLAND_H
#define SUTHERLAND_SUTHERLAND_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SL_API __declspec(dllexport)
#else
#define SL_API __attribute__((visibility("default")))
#endif

/* Status codes double as process exit codes. */
typedef enum sl_status {
  SL_OK = 0,
  SL_VERIFY_FAILED = 1,
  SL_USAGE = 2,
  SL_INTERNAL = 3
} sl_status;

typedef struct sl_config sl_config;
typedef struct sl_result sl_result;

SL_API sl_config* sl_config_new(void);
SL_API void sl_config_free(sl_config* config);

/* Sets one option by its command-line name (without dashes):
 * "N", "n", "algo", "lambda", "basis", "suite", "seed", "tolerance",
 * "output", "degree", "N-max", "deg-max".
 * Values use the command-line syntax. On SL_USAGE, sl_config_error explains why. */
SL_API sl_status sl_config_set(sl_config* config, const char* key, const char* value);
SL_API const char* sl_config_error(const sl_config* config);

/* Runs "jack", "pn", "verify" or "spectrum". *out is always set (free with sl_result_free)
 * unless out is NULL. The return value equals sl_result_status(*out). */
SL_API sl_status sl_run(const char* command, const sl_config* config, sl_result** out);

SL_API sl_status sl_result_status(const sl_result* result);
/* Output text (JSON lines or a table); empty on error. Owned by the result. */
SL_API const char* sl_result_output(const sl_result* result);
/* Diagnostic message; empty on success. Owned by the result. */
SL_API const char* sl_result_error(const sl_result* result);
SL_API void sl_result_free(sl_result* result);

/* Convenience wrappers. lambda may be NULL or "sym" for the symbolic coupling. */
SL_API sl_status sl_jack(const int* n, size_t N, const char* algo, const char* lambda, sl_result** out);
SL_API sl_status sl_pfun(const int* n, size_t N, const char* lambda, sl_result** out);
SL_API sl_status sl_spectrum(size_t N, int degree, const char* lambda, sl_result** out);

SL_API const char* sl_version(void);

#ifdef __cplusplus
}
#endif

#endif
