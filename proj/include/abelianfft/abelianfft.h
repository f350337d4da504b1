/*
 * Copyright 2026 The abelianfft Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to abelianfft: Fourier analysis on finite abelian groups.
 *
 * Conventions. For G = Z_{k_1} x ... x Z_{k_u}, elements are indexed
 * lexicographically (last coordinate fastest) and
 *   F(x, g) = chi_g(x) = exp(2 pi i * sum_j g_j x_j / k_j).
 * Synthesis computes F x. Analysis computes D x = (1/|G|) F^* x.
 *
 * Complex vectors cross the boundary as interleaved doubles
 * (re0, im0, re1, im1, ...). Every handle returned through an out-parameter
 * is owned by the caller and released with its *_destroy function.
 * Functions return AFFT_OK or an error status; afft_last_error() then holds
 * a message for the calling thread.
 *
 * Strings written into caller buffers are always NUL-terminated (when
 * capacity > 0) and truncated to fit; `needed`, when non-NULL, receives the
 * full length excluding the terminator.
 */

#ifndef ABELIANFFT_ABELIANFFT_H_
#define ABELIANFFT_ABELIANFFT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ABELIANFFT_BUILDING_LIBRARY)
#    define ABELIANFFT_API __declspec(dllexport)
#  else
#    define ABELIANFFT_API __declspec(dllimport)
#  endif
#else
#  define ABELIANFFT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afft_status {
  AFFT_OK = 0,
  AFFT_ERR_INVALID_ARGUMENT = 1,
  AFFT_ERR_DIMENSION = 2,
  AFFT_ERR_UNSUPPORTED_LENGTH = 3,
  AFFT_ERR_RESOURCE_LIMIT = 4,
  AFFT_ERR_PARSE = 5,
  AFFT_ERR_INTERNAL = 6
} afft_status;

typedef enum afft_direction {
  AFFT_ANALYSIS = 0,
  AFFT_SYNTHESIS = 1
} afft_direction;

typedef enum afft_engine {
  AFFT_ENGINE_NAIVE = 0,
  AFFT_ENGINE_FAST = 1
} afft_engine;

typedef enum afft_format {
  AFFT_FORMAT_AUTO = 0, /* from the file extension: .csv or JSON */
  AFFT_FORMAT_JSON = 1,
  AFFT_FORMAT_CSV = 2
} afft_format;

typedef struct afft_vector afft_vector;
typedef struct afft_group afft_group;
typedef struct afft_matrix afft_matrix;

/* ---- library ---------------------------------------------------------- */

ABELIANFFT_API const char* afft_version(void);
ABELIANFFT_API const char* afft_status_name(afft_status status);
/* Message of the last failed call on this thread; "" if none. */
ABELIANFFT_API const char* afft_last_error(void);
ABELIANFFT_API size_t afft_default_oracle_cap(void);
ABELIANFFT_API double afft_default_tolerance(void);

/* ---- vectors ---------------------------------------------------------- */

/* n >= 1 complex values, all finite. */
ABELIANFFT_API afft_status afft_vector_create(const double* interleaved, size_t n,
                                              afft_vector** out);
ABELIANFFT_API size_t afft_vector_size(const afft_vector* v);
/* Copies exactly afft_vector_size(v) complex values. */
ABELIANFFT_API afft_status afft_vector_get(const afft_vector* v, double* interleaved,
                                           size_t n);
ABELIANFFT_API void afft_vector_destroy(afft_vector* v);

ABELIANFFT_API afft_status afft_vector_load(const char* path, afft_format format,
                                            afft_vector** out);
ABELIANFFT_API afft_status afft_vector_save(const afft_vector* v, const char* path,
                                            afft_format format);
/* Largest |a_i - b_i|; AFFT_ERR_DIMENSION on a length mismatch. */
ABELIANFFT_API afft_status afft_vector_max_abs_diff(const afft_vector* a,
                                                    const afft_vector* b, double* out);
/* "re+imi" with `precision` significant digits. */
ABELIANFFT_API void afft_format_complex(double re, double im, int precision, char* buf,
                                        size_t capacity, size_t* needed);

/* ---- groups ----------------------------------------------------------- */

/* "Z4", "Z3xZ2", "Z2^3", or a bare "n"; factors are kept as written. */
ABELIANFFT_API afft_status afft_group_parse(const char* spec, afft_group** out);
ABELIANFFT_API afft_status afft_group_from_moduli(const uint64_t* moduli, size_t count,
                                                  afft_group** out);
/* Canonical form (prime-power factors, non-decreasing). If `permutation` is
 * non-NULL it receives afft_group_order(g) entries: permutation[i] is the
 * canonical index of the element with index i in g. */
ABELIANFFT_API afft_status afft_group_canonicalize(const afft_group* g, afft_group** out,
                                                   uint64_t* permutation);
ABELIANFFT_API void afft_group_destroy(afft_group* g);

ABELIANFFT_API uint64_t afft_group_order(const afft_group* g);
ABELIANFFT_API size_t afft_group_rank(const afft_group* g);
/* Copies min(rank, capacity) factors; returns the rank. */
ABELIANFFT_API size_t afft_group_factors(const afft_group* g, uint64_t* out, size_t capacity);
/* "Z3xZ2"; owned by the handle. */
ABELIANFFT_API const char* afft_group_name(const afft_group* g);
/* Per-factor engine plan, e.g. "Z3:dense Z4:radix2"; owned by the handle. */
ABELIANFFT_API const char* afft_group_plan(const afft_group* g);
/* G' where G = Z_{k_1} x G'. */
ABELIANFFT_API afft_status afft_group_tail(const afft_group* g, afft_group** out);

ABELIANFFT_API afft_status afft_group_index_of(const afft_group* g, const uint64_t* coords,
                                               size_t rank, uint64_t* index);
ABELIANFFT_API afft_status afft_group_element_at(const afft_group* g, uint64_t index,
                                                 uint64_t* coords, size_t rank);
/* "1,0,2" or "(1,0,2)" -> index. */
ABELIANFFT_API afft_status afft_group_parse_element(const afft_group* g, const char* label,
                                                    uint64_t* index);
/* index -> "(1,0,2)". */
ABELIANFFT_API afft_status afft_group_element_label(const afft_group* g, uint64_t index,
                                                    char* buf, size_t capacity,
                                                    size_t* needed);

/* ---- transforms ------------------------------------------------------- */

/* `method` (nullable) receives the route taken, e.g. "radix-2 fft". */
ABELIANFFT_API afft_status afft_transform(const afft_group* g, const afft_vector* x,
                                          afft_direction direction, afft_engine engine,
                                          afft_vector** out, char* method,
                                          size_t method_capacity);
/* Group convolution (c * d)(x) = sum_y c(x - y) d(y). `notice` (nullable)
 * receives a message when the fast engine fell back to the naive sum, and
 * an empty string otherwise. */
ABELIANFFT_API afft_status afft_convolve(const afft_group* g, const afft_vector* c,
                                         const afft_vector* d, afft_engine engine,
                                         afft_vector** out, char* method,
                                         size_t method_capacity, char* notice,
                                         size_t notice_capacity);

/* Radix-2 synthesis transform on Z_n; n must be a power of two. */
ABELIANFFT_API afft_status afft_fft(const afft_vector* x, afft_vector** out);
ABELIANFFT_API afft_status afft_ifft(const afft_vector* y, afft_vector** out);
/* Unnormalized Walsh-Hadamard transform; length a power of two. */
ABELIANFFT_API afft_status afft_walsh_hadamard(const afft_vector* x, afft_vector** out);
/* Circular convolution on Z_n through the radix-2 transform. */
ABELIANFFT_API afft_status afft_fast_convolve(const afft_vector* c, const afft_vector* d,
                                              afft_vector** out);
/* Polynomial product, length |c| + |d| - 1. */
ABELIANFFT_API afft_status afft_linear_convolve(const afft_vector* c, const afft_vector* d,
                                                afft_vector** out);

/* chi_g for the element with index `g_index`. */
ABELIANFFT_API afft_status afft_character(const afft_group* g, uint64_t g_index,
                                          afft_vector** out);
/* Dense F; oracle_cap == 0 selects the default cap. */
ABELIANFFT_API afft_status afft_dft_matrix(const afft_group* g, size_t oracle_cap,
                                           afft_matrix** out);

/* ---- G-circulants ------------------------------------------------------ */

/* C(x, y) = v(x - y). AFFT_ERR_RESOURCE_LIMIT when |G| > oracle_cap. */
ABELIANFFT_API afft_status afft_circulant_materialize(const afft_group* g,
                                                      const afft_vector* v,
                                                      size_t oracle_cap, afft_matrix** out);
/* Lambda_g = sum_x v(x) conj(chi_g(x)), one value per g in index order. */
ABELIANFFT_API afft_status afft_circulant_spectrum(const afft_group* g, const afft_vector* v,
                                                   afft_vector** out);
/* Generator of block C_m (m < first factor) over afft_group_tail(g). */
ABELIANFFT_API afft_status afft_circulant_block(const afft_group* g, const afft_vector* v,
                                                uint64_t m, afft_vector** out);
/* max |C - F diag(Lambda) (1/|G|) F^*|, computed densely. */
ABELIANFFT_API afft_status afft_circulant_check(const afft_group* g, const afft_vector* v,
                                                size_t oracle_cap, double* residual);

/* ---- dense matrices --------------------------------------------------- */

ABELIANFFT_API size_t afft_matrix_rows(const afft_matrix* m);
ABELIANFFT_API size_t afft_matrix_cols(const afft_matrix* m);
/* Row-major; exactly rows * cols complex values. */
ABELIANFFT_API afft_status afft_matrix_get(const afft_matrix* m, double* interleaved,
                                           size_t count);
ABELIANFFT_API void afft_matrix_destroy(afft_matrix* m);

/* ---- verification and benchmarks -------------------------------------- */

typedef struct afft_check {
  const char* module;
  const char* name;
  const char* range;
  double worst_residual;
  double worst_ratio;
  int passed;
} afft_check;

typedef void (*afft_check_callback)(const afft_check* check, void* user);

/* Runs the property suite for `scope` ("all" or a module name). Thresholds
 * scale with tolerance / 1e-9. `failures` receives the failing check count. */
ABELIANFFT_API afft_status afft_verify(const char* scope, uint64_t seed, double tolerance,
                                       afft_check_callback callback, void* user,
                                       size_t* failures);

typedef struct afft_bench_row {
  uint64_t n;
  double fft_seconds;
  double naive_seconds;  /* < 0 when skipped above the oracle cap */
  double doubling_ratio; /* < 0 when n/2 was not measured */
} afft_bench_row;

/* `sizes` must be ascending powers of two; `rows` holds `count` entries. */
ABELIANFFT_API afft_status afft_bench(const uint64_t* sizes, size_t count, size_t oracle_cap,
                                      uint64_t seed, afft_bench_row* rows);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* ABELIANFFT_ABELIANFFT_H_ */
