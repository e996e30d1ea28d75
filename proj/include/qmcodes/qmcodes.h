/* C interface to libqmcodes. All strings returned through `char**` are
 * heap-allocated and must be released with qm_free. On failure the function
 * returns a nonzero qm_status and qm_last_error() describes the cause. */
#ifndef QMCODES_H
#define QMCODES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QM_API __declspec(dllexport)
#else
#define QM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qm_status {
  QM_OK = 0,
  QM_ERR_MALFORMED_SPEC = 1,
  QM_ERR_INVALID_PARAMS = 2,
  QM_ERR_OVERFLOW = 3,
  QM_ERR_NON_PRIME_NORM = 4,
  QM_ERR_PARTITION_FAILURE = 5,
  QM_ERR_MIXED_ORDER = 6,
  QM_ERR_NOT_RATIONAL = 7,
  QM_ERR_NO_INDEPENDENT_UNIT = 8,
  QM_ERR_UNKNOWN_RESIDUE = 9,
  QM_ERR_INEXACT_DIVISION = 10,
  QM_ERR_NEGATIVE_COEFFICIENT = 11,
  QM_ERR_INTRACTABLE_SIZE = 12,
  QM_ERR_EMPTY_CODE = 13,
  QM_ERR_NULL_ARGUMENT = 14,
  QM_ERR_INTERNAL = 15
} qm_status;

typedef enum qm_format { QM_FORMAT_TEXT = 0, QM_FORMAT_JSON = 1 } qm_format;

typedef enum qm_mode { QM_MODE_QI = 0, QM_MODE_COMPLETE = 1 } qm_mode;

typedef struct qm_options {
  /* Work budget for brute-force steps. 0 means: QMCODES_BUDGET from the
   * environment, else the spec's "budget", else 1e8. */
  uint64_t budget;
  /* Worker threads for the dual search; 0 means hardware concurrency. */
  unsigned jobs;
} qm_options;

typedef struct qm_ring qm_ring;
typedef struct qm_session qm_session;

QM_API void qm_options_init(qm_options* opts);

QM_API const char* qm_last_error(void);
QM_API const char* qm_status_name(qm_status status);
QM_API void qm_free(void* ptr);

/* Residue ring H[Z]/H[Z]pi for pi = a0 + a1 i + a2 j + a3 k of prime norm. */
QM_API qm_status qm_ring_create(const int64_t pi[4], qm_ring** out);
QM_API void qm_ring_destroy(qm_ring* ring);
QM_API size_t qm_ring_size(const qm_ring* ring);
QM_API int64_t qm_ring_p(const qm_ring* ring);
/* Canonical representative with index `index` (0 is zero). */
QM_API qm_status qm_ring_residue(const qm_ring* ring, size_t index, int64_t out[4]);
QM_API qm_status qm_ring_reduce(const qm_ring* ring, const int64_t x[4], int64_t out[4]);
QM_API qm_status qm_ring_distance(const qm_ring* ring, const int64_t x[4], const int64_t y[4], int64_t* out);

QM_API qm_status qm_session_create(const char* spec_json, const qm_options* opts, qm_session** out);
QM_API void qm_session_destroy(qm_session* session);
QM_API size_t qm_session_code_size(const qm_session* session);

QM_API qm_status qm_session_residues(const qm_session* session, qm_format format, char** out);
QM_API qm_status qm_session_classes(const qm_session* session, qm_format format, char** out);
QM_API qm_status qm_session_correspondence(const qm_session* session, char** out);
QM_API qm_status qm_session_enumerator(const qm_session* session, qm_mode mode, qm_format format, char** out);
QM_API qm_status qm_session_dual(qm_session* session, qm_mode mode, qm_format format, char** out);
QM_API qm_status qm_session_transform(const qm_session* session, qm_mode mode, qm_format format, char** out);
/* `equal` receives 1 when the transformed enumerator matches the dual's. */
QM_API qm_status qm_session_verify(qm_session* session, qm_format format, int* equal, char** out);
QM_API qm_status qm_session_min_distance(const qm_session* session, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif
