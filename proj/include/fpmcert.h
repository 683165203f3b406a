#ifndef FPMCERT_H
#define FPMCERT_H

/*
 * C interface to the filtered phi-module certification library.
 *
 * All functions return FPMCERT_OK (0) on success, FPMCERT_INPUT_ERROR (2)
 * for malformed configs/parameters, FPMCERT_INTERNAL_ERROR (3) for internal
 * failures (precision exhaustion, unsupported structure). On failure,
 * fpmcert_last_error() describes the problem for the current thread.
 *
 * All returned strings are heap-allocated and must be released with
 * fpmcert_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

#define FPMCERT_OK 0
#define FPMCERT_INPUT_ERROR 2
#define FPMCERT_INTERNAL_ERROR 3

/* Opaque handle for a parsed module. */
typedef struct fpmcert_module fpmcert_module;

const char* fpmcert_version(void);

/* Parse a JSON module config (prime, cyclo_order, precision, frobenius,
 * filtration; entries are integers or expressions over p and z). */
int fpmcert_module_parse(const char* config_json, fpmcert_module** out);

void fpmcert_module_free(fpmcert_module* m);

/* Run the full certification pipeline, producing the report JSON. */
int fpmcert_module_run(const fpmcert_module* m, char** report_json);

/* Re-verify every witness embedded in a report against the module, through
 * the independent checker. Result JSON: {witnesses_checked, all_ok,
 * failures}. */
int fpmcert_module_verify(const fpmcert_module* m, const char* report_json,
                          char** result_json);

/* Construct a named catalog entry ("ss-square", "simple-ss", "zeta6",
 * "zeta4", "cyclotomic", "distinct-curves", "nfold") and certify it.
 * params_json example: {"p": 5, "n": 4, "m": 3, "a1": 0, "a2": 3,
 * "precision": 32}; unused keys may be omitted. Either output pointer may
 * be NULL to skip it. */
int fpmcert_catalog(const char* name, const char* params_json,
                    char** config_json, char** report_json);

/* Human-readable rendering of a report JSON. */
int fpmcert_report_text(const char* report_json, char** text);

void fpmcert_string_free(char* s);

/* Message for the most recent failing call on this thread ("" if none). */
const char* fpmcert_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* FPMCERT_H */
