/* C interface to the graded-algebra workbench. Sessions are opaque; every
 * string output is heap-allocated and must be released with gh_free. All
 * functions return a status code:
 *
 *   GH_OK          the computation ran and, where applicable, passed
 *   GH_CHECK_FAIL  the computation ran but a requested check failed
 *   GH_INPUT_ERROR bad document, unknown name, or malformed arguments
 *
 * On GH_INPUT_ERROR the thread-local message from gh_last_error() explains
 * what to fix. Status codes double as process exit codes in the CLI. */
#ifndef GORHOM_CAPI_H
#define GORHOM_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

#define GH_OK 0
#define GH_CHECK_FAIL 1
#define GH_INPUT_ERROR 2

typedef struct gh_session gh_session;

const char* gh_version(void);

/* message for the most recent failing call on this thread; never NULL */
const char* gh_last_error(void);

void gh_free(char* s);

/* Load a workspace document (JSON) and realize the algebra and every
 * declared module. */
int gh_session_open(const char* path, gh_session** out);
int gh_session_open_text(const char* json_text, gh_session** out);
void gh_session_close(gh_session* s);

/* canonical serialization of the loaded document */
int gh_document_json(gh_session* s, char** out);

/* "dim=12 hilbert=1,5,5,1 gorenstein=true" */
int gh_algebra_info(gh_session* s, char** out);

/* Minimal free resolution to `steps`. csv_out gets sparse betti rows
 * (header i,j,dim); verdict_out gets the linearity verdict and, when
 * series is non-NULL, the series comparison ("num|den" coefficient
 * lists, e.g. "2|1,-1" for 2/(1-t)). A series mismatch returns
 * GH_CHECK_FAIL. steps < 0 uses the document default. */
int gh_resolve(gh_session* s, const char* module, int steps, const char* series,
               char** csv_out, char** verdict_out);

/* Dimension table of ext or tor between two declared modules, indices
 * 0..steps. Dense i,dim rows, or sparse i,j,dim rows when bigraded. */
int gh_table(gh_session* s, const char* functor, const char* m, const char* n, int steps,
             int bigraded, char** csv_out);

/* Stable (complete-resolution) table of a declared complex family against
 * a module, indices -window..window. window < 0 uses the document
 * default. */
int gh_tate(gh_session* s, const char* functor, const char* family, const char* n, int window,
            char** csv_out);

/* Vanishing-pattern summary against a declared cyclic family, one line
 * per parameter value: "q=3: nonzero={0,2,3} residues=n/a". */
int gh_scan(gh_session* s, const char* family, const char* m, long long q_lo, long long q_hi,
            int steps, char** out);

/* Run the built-in reproduction checklist over the named field ("Q" or
 * "F<p>") and deformation unit. Emits the full report as JSON; returns
 * GH_CHECK_FAIL when any check fails. `full` switches to the literal
 * stated depth windows, which can abort on oversized eliminations. */
int gh_reproduce(const char* field, const char* alpha, int steps, int window, int full,
                 char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GORHOM_CAPI_H */
