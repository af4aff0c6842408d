/* Copyright 2026 the ufest authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API for the ufest core. All entry points are exception-free and report
 * failures through status codes; the last failure message is retained on the
 * context. Status codes match the CLI exit codes: 0 ok, 2 config error,
 * 3 budget cap, 4 numerical failure.
 */
#ifndef UFEST_H_
#define UFEST_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ufest_ctx ufest_ctx;

ufest_ctx* ufest_ctx_new(void);
void ufest_ctx_free(ufest_ctx* ctx);

/* Message from the most recent failed call on this context; empty string if
 * none. Owned by the context, valid until the next call on it. */
const char* ufest_last_error(const ufest_ctx* ctx);

/* Runs one experiment from a JSON config (same schema as CLI config files).
 * On success (and for verify-circuit failures that still produce a report),
 * *report_out receives a malloc'd NUL-terminated report; free it with
 * ufest_string_free. Returns the status code. */
int ufest_run_json(ufest_ctx* ctx, const char* config_json, char** report_out);

void ufest_string_free(char* s);

/* Haar moment of |g_11|^2alpha over U(d); returns NaN on invalid input. */
double ufest_moment_g(int alpha, int d);

/* Rep_epsilon for a family given as a JSON config object (family fields
 * only; no command needed). Writes the value to *rep_out. */
int ufest_rep_epsilon(ufest_ctx* ctx, const char* spec_json, double epsilon,
                      int* rep_out);

const char* ufest_version(void);

#ifdef __cplusplus
}
#endif

#endif /* UFEST_H_ */
