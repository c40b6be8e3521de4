#ifndef DYBE_H
#define DYBE_H

/*
 * C interface to the dynamical Yang-Baxter toolkit.  One entry point takes a
 * JSON request describing a computation or a verification run and returns an
 * opaque result holding a status code, a JSON payload and diagnostic text.
 *
 * Request object (all strings UTF-8):
 *   {
 *     "command": "compute" | "verify",
 *     "target":  compute: "fusion" | "exchange" | "qmatrix" | "diffop" | "trace"
 *                verify:  "cocycle" | "qdybe" | "fusion-exchange" | "q-identities"
 *                         | "eta" | "diffop-commute" | "mr" | "all",
 *     "algebra": "A1" | "A2" | ...,
 *     "modules": ["L(1)", "L(1,0)", ...]  or one comma-joined string,
 *     "mode":    "symbolic" (default) | "numeric",
 *     "seed":    unsigned integer, required in numeric mode,
 *     "samples": numeric verifications per identity (default 1),
 *     "depth":   truncation depth for the eta check (default 4),
 *     "order":   series order for trace/mr (default 10),
 *     "weighted": boolean, trace only (default false)
 *   }
 */

#ifdef __cplusplus
extern "C" {
#endif

/* status codes, mirrored as process exit codes by the CLI */
#define DYBE_OK 0             /* computed / all verifications passed */
#define DYBE_VERIFY_FAILED 1  /* at least one identity check failed */
#define DYBE_BAD_REQUEST 2    /* malformed request or unusable configuration */
#define DYBE_NON_GENERIC 3    /* genericity exhausted after resampling */

typedef struct dybe_result dybe_result;

/* Run one request.  Returns NULL only on allocation failure; every other
 * problem is reported through the result's status and report text. */
dybe_result* dybe_run_json(const char* request_json);

int dybe_result_status(const dybe_result* r);

/* JSON payload; empty string when the request produced none.  The pointer is
 * owned by the result and valid until dybe_result_free. */
const char* dybe_result_output(const dybe_result* r);

/* human-readable report / diagnostic text (also owned by the result) */
const char* dybe_result_report(const dybe_result* r);

void dybe_result_free(dybe_result* r);

const char* dybe_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DYBE_H */
