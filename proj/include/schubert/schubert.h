#ifndef SCHUBERT_SCHUBERT_H
#define SCHUBERT_SCHUBERT_H

/* C interface to the Schubert calculus library. Handles are opaque; every
 * fallible call returns a status and stores a message readable through
 * schubert_last_error() on the calling thread. Strings returned through
 * char** out-parameters are owned by the caller and released with
 * schubert_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SCHUBERT_API __declspec(dllexport)
#else
#define SCHUBERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum schubert_status {
  SCHUBERT_OK = 0,
  SCHUBERT_INVALID_ARGUMENT = 1,
  SCHUBERT_CAPACITY = 2,
  SCHUBERT_CHARACTERISTIC = 3,
  SCHUBERT_NO_GENERAL_SUBSPACE = 4,
  SCHUBERT_NOT_ENOUGH_UNITS = 5,
  SCHUBERT_SINGULAR_POINT = 6,
  SCHUBERT_INTERNAL = 99
} schubert_status;

typedef struct schubert_space schubert_space;
typedef struct schubert_report schubert_report;

SCHUBERT_API const char* schubert_last_error(void);
SCHUBERT_API const char* schubert_status_string(schubert_status status);
SCHUBERT_API void schubert_string_free(char* s);

SCHUBERT_API schubert_status schubert_space_grassmannian(int r, int n, schubert_space** out);
SCHUBERT_API schubert_status schubert_space_flag(const int* steps, size_t count, int n, schubert_space** out);
SCHUBERT_API schubert_status schubert_space_orthogonal(int r, schubert_space** out);
SCHUBERT_API schubert_status schubert_space_quantum(int r, int n, int q, schubert_space** out);
SCHUBERT_API void schubert_space_free(schubert_space* space);

SCHUBERT_API int schubert_space_dimension(const schubert_space* space);
SCHUBERT_API int schubert_space_families(const schubert_space* space);
SCHUBERT_API schubert_status schubert_space_name(const schubert_space* space, char** out);
/* Number of Schubert indices, as a decimal string. */
SCHUBERT_API schubert_status schubert_space_index_count(const schubert_space* space, char** out);

/* Saturated chains from the bottom element to `index` (NULL: the top element)
 * whose k-th step is a cover of family labels[k]. With count == 0 every step
 * uses family 1 and the chain length is the rank of `index`. */
SCHUBERT_API schubert_status schubert_count_chains(const schubert_space* space, const char* index,
                                                    const int* labels, size_t count, char** out);

/* Standard Young tableaux of the r x c rectangle (hook-length formula). */
SCHUBERT_API schubert_status schubert_syt_count(int r, int c, char** out);

typedef struct schubert_verify_options {
  const uint32_t* primes; /* ladder, tried in order */
  size_t prime_count;
  const char* mode;       /* "family" or "independent"; NULL means independent */
  uint64_t seed;
  const int* labels;      /* NULL: all conditions of family 1 */
  size_t label_count;
  const char* restriction; /* NULL: the whole space */
  const int* weights;      /* NULL: characters 1..n */
  size_t weight_count;
  int max_attempts;        /* per prime; 0 means 20 */
  unsigned threads;        /* 0: SCHUBERT_THREADS or hardware concurrency */
} schubert_verify_options;

SCHUBERT_API void schubert_verify_options_init(schubert_verify_options* options);

SCHUBERT_API schubert_status schubert_verify(const schubert_space* space, const schubert_verify_options* options,
                                             schubert_report** out);
SCHUBERT_API void schubert_report_free(schubert_report* report);
/* Borrowed strings, valid until the report is freed. */
SCHUBERT_API const char* schubert_report_verdict(const schubert_report* report);
SCHUBERT_API const char* schubert_report_json(const schubert_report* report);
SCHUBERT_API const char* schubert_report_expected(const schubert_report* report);
SCHUBERT_API size_t schubert_report_solution_count(const schubert_report* report);
SCHUBERT_API uint32_t schubert_report_prime(const schubert_report* report);
SCHUBERT_API int schubert_report_all_proportional(const schubert_report* report);

/* Checks Omega_alpha n {p_alpha = 0} = union of Omega_beta over the indices
 * beta covered by alpha, point by point over F_p. */
SCHUBERT_API schubert_status schubert_pieri_check(int r, int n, const char* alpha, uint32_t prime, int* holds,
                                                  size_t* lhs_points, size_t* rhs_points);

/* True (1) iff no point meets every translate K(s), s a unit of F_p. K is
 * given as a row-major rows x n matrix, or sampled general from `seed` when
 * `k_rows` is NULL. `weights` may be NULL for characters 1..n. */
SCHUBERT_API schubert_status schubert_empty_intersection_check(const schubert_space* space, const long long* k_rows,
                                                               size_t rows, uint64_t seed, const int* weights,
                                                               size_t weight_count, uint32_t prime,
                                                               unsigned threads, int* empty);

#ifdef __cplusplus
}
#endif

#endif
