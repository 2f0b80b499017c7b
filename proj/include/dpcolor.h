#ifndef DPCOLOR_H
#define DPCOLOR_H

#include <stdint.h>

#if defined(_WIN32)
#define DPC_API __declspec(dllexport)
#else
#define DPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the dpc CLI maps them one-to-one onto exit codes. */
typedef enum dpc_status {
    DPC_OK = 0,
    DPC_ERR_INPUT = 1,       /* malformed file, JSON or argument */
    DPC_ERR_HYPOTHESIS = 2,  /* hypothesis or verification failure */
    DPC_RESULT_NEGATIVE = 3, /* uncolorable instance / no kernel */
    DPC_ERR_LIMIT = 4,       /* resource budget exceeded */
} dpc_status;

/* Opaque handles. */
typedef struct dpc_instance dpc_instance;
typedef struct dpc_signed dpc_signed;

/* Every char** output is a NUL-terminated heap string owned by the caller;
 * release it with dpc_string_free. Output parameters may be NULL when the
 * caller does not need them. `error` receives a diagnostic on failure. */

DPC_API void dpc_string_free(char* s);

/* ---- correspondence instances ------------------------------------- */

DPC_API dpc_status dpc_instance_from_json(const char* text, dpc_instance** out, char** error);
DPC_API void dpc_instance_free(dpc_instance* inst);
DPC_API dpc_status dpc_instance_to_json(const dpc_instance* inst, char** out);

/* Hypothesis check. `exhaustive` != 0 additionally verifies
 * kernel-perfectness of the oriented straight part by exhaustive search,
 * capped at `max_n` vertices. Returns DPC_OK when certified under the
 * selected mode, DPC_ERR_HYPOTHESIS otherwise; `report_json` is written in
 * both cases. */
DPC_API dpc_status dpc_check(const dpc_instance* inst, int exhaustive, unsigned max_n,
    char** report_json, char** error);

/* Runs the constructive coloring algorithm. `override_hypotheses` skips the
 * certification gate; failures then surface mid-run. `trace_text` receives
 * a per-round log when non-NULL. */
DPC_API dpc_status dpc_color(const dpc_instance* inst, int exhaustive, int override_hypotheses,
    char** coloring_json, char** trace_text, char** error);

/* Verifies a coloring document against the instance. DPC_OK when it passes;
 * DPC_ERR_HYPOTHESIS with `violations_json` filled when it does not. */
DPC_API dpc_status dpc_verify(const dpc_instance* inst, const char* coloring_json,
    char** violations_json, char** error);

/* Exhaustive colorability oracle. DPC_OK with the first coloring, or
 * DPC_RESULT_NEGATIVE when no assignment works. `count`, when non-NULL,
 * receives the number of valid assignments (counted only if `with_count`).
 * `max_assignments` == 0 selects the default budget (1e7). */
DPC_API dpc_status dpc_oracle(const dpc_instance* inst, uint64_t max_assignments, int with_count,
    char** coloring_json, uint64_t* count, char** error);

/* ---- signed graphs -------------------------------------------------- */

DPC_API dpc_status dpc_signed_from_json(const char* text, dpc_signed** out, char** error);
DPC_API void dpc_signed_free(dpc_signed* sg);

/* Emits the correspondence instance whose colorings are exactly the
 * zero-free signed list colorings of the input. */
DPC_API dpc_status dpc_signed_reduce(const dpc_signed* sg, char** instance_json, char** error);

/* ---- kernels --------------------------------------------------------- */

/* Accepts a digraph document, or an instance document (its orientation is
 * used). Default mode runs the polynomial kernel construction and reports
 * DPC_RESULT_NEGATIVE with `witness_json` (an odd directed cycle) when its
 * precondition fails. `brute` != 0 switches to exhaustive search, capped at
 * `max_n` vertices: DPC_RESULT_NEGATIVE then means no kernel exists. */
DPC_API dpc_status dpc_kernel(const char* text, int brute, unsigned max_n, char** kernel_json,
    char** witness_json, char** error);

/* ---- generator -------------------------------------------------------- */

/* Emits an instance document (or a signed document when `signed_mode`)
 * that satisfies the coloring preconditions by construction.
 * Deterministic per seed. */
DPC_API dpc_status dpc_generate(uint32_t n, double straight_prob, double twisted_prob,
    uint32_t extra_colors, uint64_t seed, int signed_mode, int bipartite_straight,
    char** file_json, char** error);

#ifdef __cplusplus
}
#endif

#endif /* DPCOLOR_H */
