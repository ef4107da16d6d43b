/* C interface to the crosscap library: realizability of automorphisms of
 * first homology of non-orientable surfaces, with replayable certificates.
 *
 * Objects are opaque handles released with their *_free function. Strings
 * returned through char** are owned by the caller and released with
 * cc_string_free. Every fallible call returns a cc_status; on failure the
 * message for the current thread is available from cc_last_error(). */
#ifndef CROSSCAP_CROSSCAP_H
#define CROSSCAP_CROSSCAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(CROSSCAP_BUILDING_LIBRARY)
#define CC_API __attribute__((visibility("default")))
#else
#define CC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_INVALID_ARGUMENT,
  CC_DIMENSION_MISMATCH,
  CC_INDEX_ERROR,
  CC_BAD_TWIST_SUPPORT,
  CC_NOT_ORTHOGONAL,
  CC_ROW_SUM_VIOLATION,
  CC_NON_UNIMODULAR,
  CC_BAD_BOUNDARY_COLUMN,
  CC_RELATION_NOT_PRESERVED,
  CC_NON_AUTOMORPHISM,
  CC_INCONSISTENT_SINGLE_PUNCTURE,
  CC_QUOTIENT_NOT_UNIMODULAR,
  CC_TWIST_HAS_NO_INTEGER_MATRIX,
  CC_NOT_KERNEL,
  CC_NOT_RESIDUAL,
  CC_RESOURCE_LIMIT,
  CC_PARSE_ERROR,
  CC_INTERNAL_ERROR
} cc_status;

typedef struct cc_instance cc_instance;
typedef struct cc_decision cc_decision;
typedef struct cc_certificate cc_certificate;
typedef struct cc_enumeration cc_enumeration;

/* Name of a status code, e.g. "RowSumViolation". Static storage. */
CC_API const char* cc_status_name(cc_status status);
/* Message of the last failure on this thread; "" if none. */
CC_API const char* cc_last_error(void);
/* Nonzero when the status means the input itself was rejected, as opposed to
 * a resource limit or an internal failure. */
CC_API int cc_status_is_input_error(cc_status status);

CC_API void cc_string_free(char* s);

/* Instances: {"surface": {"crosscaps": n, "punctures": m}, "matrix": [[...]]} */
CC_API cc_status cc_instance_from_json(const char* json, cc_instance** out);
CC_API cc_status cc_instance_to_json(const cc_instance* inst, char** out);
CC_API cc_status cc_instance_generate(int crosscaps, int punctures, size_t length, uint64_t seed,
                                      int corrupt, int permute_crosscaps, cc_instance** out);
CC_API int cc_instance_crosscaps(const cc_instance* inst);
CC_API int cc_instance_punctures(const cc_instance* inst);
CC_API void cc_instance_free(cc_instance* inst);

/* Decisions. Invalid input is a failure status, never a "no". */
typedef struct cc_decide_options {
  size_t kernel_move_limit; /* 0 for the default */
  int kernel_row_descent;   /* nonzero: plain row-by-row kernel descent */
} cc_decide_options;

CC_API cc_status cc_decide(const cc_instance* inst, const cc_decide_options* options, cc_decision** out);
CC_API int cc_decision_realizable(const cc_decision* d);
/* "None" or "PairingNotPreserved" */
CC_API const char* cc_decision_reason(const cc_decision* d);
/* "full-integer", "mod2-only", or NULL when not realizable */
CC_API const char* cc_decision_completeness(const cc_decision* d);
/* *out is NULL when there is no certificate. */
CC_API cc_status cc_decision_certificate(const cc_decision* d, cc_certificate** out);
CC_API cc_status cc_decision_to_json(const cc_decision* d, int include_trace, char** out);
CC_API void cc_decision_free(cc_decision* d);

/* Certificates. */
CC_API cc_status cc_certificate_from_json(const char* json, cc_certificate** out);
CC_API cc_status cc_certificate_to_json(const cc_certificate* cert, int include_trace, char** out);
/* {"kernel": [...], "boundary": [...]}: one entry per reducing step. */
CC_API cc_status cc_certificate_trace_json(const cc_certificate* cert, char** out);
CC_API size_t cc_certificate_move_count(const cc_certificate* cert);
CC_API void cc_certificate_free(cc_certificate* cert);

/* Replays the certificate. *accepted is 1 or 0; on rejection *reason (if not
 * NULL) receives an explanation. Fails only on NULL arguments. */
CC_API cc_status cc_verify(const cc_instance* inst, const cc_certificate* cert, int* accepted, char** reason);

/* Breadth-first enumeration of the mod-2 orthogonal group of the given
 * dimension, bounded by CROSSCAP_MAX_ENUM_DIM (default 6). */
CC_API cc_status cc_enumerate(int dim, cc_enumeration** out);
CC_API uint64_t cc_enumeration_order(const cc_enumeration* e);
/* Number of elements of minimal word length `length`. */
CC_API uint64_t cc_enumeration_count(const cc_enumeration* e, int length);
CC_API int cc_enumeration_max_length(const cc_enumeration* e);
CC_API cc_status cc_enumeration_to_json(const cc_enumeration* e, char** out);
CC_API void cc_enumeration_free(cc_enumeration* e);

#ifdef __cplusplus
}
#endif

#endif
