/* C interface to the f2v distribution matcher / v2f source code library.
 *
 * Conventions:
 *  - Every fallible call returns an f2vdm_status; F2VDM_OK is 0.
 *  - On failure, f2vdm_last_error() describes the problem for the calling
 *    thread and f2vdm_last_error_bit() holds the input bit offset for
 *    bitstream errors (-1 otherwise).
 *  - Objects come back through out-parameters as opaque handles; each
 *    f2vdm_*_new/_build function pairs with the matching f2vdm_*_free.
 *  - Bit sequences cross the boundary unpacked, one byte per bit (0 or 1).
 *  - Variable-size outputs use two-call sizing: pass out = NULL to receive
 *    the required element count in *out_size, or a buffer plus its capacity
 *    in *out_size; F2VDM_ERR_BUFFER_TOO_SMALL leaves the requirement there.
 */
#ifndef F2VDM_H
#define F2VDM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum f2vdm_status {
  F2VDM_OK = 0,
  F2VDM_ERR_DOMAIN = 1,
  F2VDM_ERR_PREFIX_VIOLATION = 2,
  F2VDM_ERR_BAD_COUNT = 3,
  F2VDM_ERR_EMPTY_WORD = 4,
  F2VDM_ERR_NOT_COMPLETE = 5,
  F2VDM_ERR_NOT_A_DISTRIBUTION = 6,
  F2VDM_ERR_M_TOO_LARGE = 7,
  F2VDM_ERR_LENGTH_NOT_MULTIPLE = 8,
  F2VDM_ERR_DANGLING_SUFFIX = 9,
  F2VDM_ERR_INVALID_SYMBOL = 10,
  F2VDM_ERR_TOO_LARGE = 11,
  F2VDM_ERR_OVERFLOW = 12,
  F2VDM_ERR_INTERNAL = 13,
  F2VDM_ERR_NULL_ARGUMENT = 14,
  F2VDM_ERR_BUFFER_TOO_SMALL = 15,
} f2vdm_status;

typedef struct f2vdm_tree f2vdm_tree;     /* prefix-free set of 2^m codewords */
typedef struct f2vdm_code f2vdm_code;     /* tree + index<->codeword bijection */
typedef struct f2vdm_result f2vdm_result; /* matcher optimization outcome */

/* ---- library & errors ---------------------------------------------------- */

const char* f2vdm_version(void);
const char* f2vdm_status_name(f2vdm_status status);
/* Message for the most recent failure on this thread; empty if none. */
const char* f2vdm_last_error(void);
/* Input bit offset of the most recent bitstream failure; -1 otherwise. */
int64_t f2vdm_last_error_bit(void);

/* ---- trees ---------------------------------------------------------------- */

/* Validates and canonicalizes a codeword set ('0'/'1' strings). */
f2vdm_status f2vdm_tree_from_codewords(const char* const* words, size_t count,
                                       f2vdm_tree** out);
/* Greedy Tunstall construction on positive weights (w0, w1), 2^m leaves. */
f2vdm_status f2vdm_tunstall_tree(double w0, double w1, int m, f2vdm_tree** out);
void f2vdm_tree_free(f2vdm_tree* tree);

int f2vdm_tree_m(const f2vdm_tree* tree);
size_t f2vdm_tree_leaf_count(const f2vdm_tree* tree);
int f2vdm_tree_max_length(const f2vdm_tree* tree);
int f2vdm_tree_is_complete(const f2vdm_tree* tree);
/* k-th codeword in canonical order; NULL when k is out of range. The pointer
 * stays valid while the tree lives. */
const char* f2vdm_tree_codeword(const f2vdm_tree* tree, size_t k);
/* Exact Kraft sum as a reduced fraction string ("1", "3/4", ...). */
f2vdm_status f2vdm_tree_kraft_sum(const f2vdm_tree* tree, char* out,
                                  size_t* out_size);

/* ---- divergence metrics --------------------------------------------------- */

typedef struct f2vdm_tree_metrics {
  double idiv_match;    /* D(U_T || Q_T), bits */
  double expected_len;  /* E(L) */
  double normalized;    /* idiv_match / expected_len */
  int has_compress;     /* nonzero iff the next two fields are defined */
  double idiv_compress; /* D(Q_T || U_T); complete tree + true distribution */
  double leaf_entropy;  /* H(Q_T); same conditions */
} f2vdm_tree_metrics;

f2vdm_status f2vdm_metrics(const f2vdm_tree* tree, double w0, double w1,
                           f2vdm_tree_metrics* out);

/* ---- matcher optimization ------------------------------------------------- */

/* Minimizes I-divergence per output bit over complete trees with 2^m leaves
 * ((w0, w1) must sum to one). */
f2vdm_status f2vdm_optimize(double w0, double w1, int m, double tol,
                            f2vdm_result** out);
void f2vdm_result_free(f2vdm_result* result);

double f2vdm_result_delta(const f2vdm_result* result);
int f2vdm_result_iterations(const f2vdm_result* result);
/* Borrowed; valid while the result lives. */
const f2vdm_tree* f2vdm_result_tree(const f2vdm_result* result);
/* Per-iteration trace entry, index in [0, iterations). */
f2vdm_status f2vdm_result_trace(const f2vdm_result* result, int index,
                                double* delta_hat, double* objective);

/* max(w0,w1) <= 4*min(w0,w1): complete trees are then optimal for every m. */
int f2vdm_completeness_sufficient(double w0, double w1);
/* max(w0,w1) * 2^delta <= 1: certifies the complete-tree optimum globally. */
f2vdm_status f2vdm_global_optimality(double w0, double w1, double delta,
                                     int* out);
/* log2(1/min(w0,w1)) / m upper bound on divergence per bit. */
f2vdm_status f2vdm_perbit_bound(double w0, double w1, int m, double* out);

/* ---- brute-force certification -------------------------------------------- */

typedef enum f2vdm_enum_mode {
  F2VDM_ENUM_COMPLETE = 0,
  F2VDM_ENUM_PREFIX_FREE_CAPPED = 1,
} f2vdm_enum_mode;

typedef enum f2vdm_objective {
  F2VDM_OBJECTIVE_IDIV_MATCH = 0,
  F2VDM_OBJECTIVE_NORMALIZED_IDIV = 1,
  F2VDM_OBJECTIVE_IDIV_COMPRESS = 2,
} f2vdm_objective;

/* Exhaustive minimum over complete trees (max_depth ignored) or over all
 * prefix codes with lengths <= max_depth. Any output pointer may be NULL. */
f2vdm_status f2vdm_brute_min(f2vdm_enum_mode mode, int num_leaves,
                             int max_depth, double w0, double w1,
                             f2vdm_objective objective, f2vdm_tree** out_tree,
                             double* out_value, uint64_t* out_visited);

/* ---- codecs ---------------------------------------------------------------- */

/* Canonical index rule: the k-th m-bit word (numeric order) pairs with the
 * k-th canonical codeword. */
f2vdm_status f2vdm_code_from_tree(const f2vdm_tree* tree, f2vdm_code** out);
/* Explicit rule: the k-th m-bit word pairs with order[k]; order must be a
 * permutation of the tree's codewords. */
f2vdm_status f2vdm_code_with_order(const f2vdm_tree* tree,
                                   const char* const* order, size_t count,
                                   f2vdm_code** out);
void f2vdm_code_free(f2vdm_code* code);

int f2vdm_code_m(const f2vdm_code* code);
/* Borrowed; valid while the code lives. */
const f2vdm_tree* f2vdm_code_tree(const f2vdm_code* code);
/* Codeword paired with index k; NULL when k is out of range. */
const char* f2vdm_code_codeword(const f2vdm_code* code, size_t k);

/* m-bit blocks -> codewords. Input length must be a multiple of m. */
f2vdm_status f2vdm_match_encode(const f2vdm_code* code, const uint8_t* in,
                                size_t in_size, uint8_t* out, size_t* out_size);
/* Codeword stream -> m-bit blocks (exact inverse of f2vdm_match_encode). */
f2vdm_status f2vdm_match_decode(const f2vdm_code* code, const uint8_t* in,
                                size_t in_size, uint8_t* out, size_t* out_size);
/* Greedy parse into codewords, one m-bit index each; *consumed reports how
 * many input bits were parsed (a trailing partial codeword is left over).
 * The code's tree must be complete. */
f2vdm_status f2vdm_source_encode(const f2vdm_code* code, const uint8_t* in,
                                 size_t in_size, uint8_t* out, size_t* out_size,
                                 size_t* consumed);
/* m-bit indices -> codewords (inverse of f2vdm_source_encode on what it
 * consumed). */
f2vdm_status f2vdm_source_decode(const f2vdm_code* code, const uint8_t* in,
                                 size_t in_size, uint8_t* out, size_t* out_size);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* F2VDM_H */
