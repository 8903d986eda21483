/*
 * C interface to the paley library: exact constructions and verifications
 * for quadratic-residue combinatorics (finite fields, Paley-family graphs,
 * Hadamard matrices, block designs, permutation groups).
 *
 * All objects are returned through opaque handles and must be released
 * with the matching *_destroy function. Functions report success through
 * paley_status; on failure the out-parameters are untouched and
 * paley_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with paley_string_free().
 */

#ifndef PALEY_H
#define PALEY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum paley_status {
  PALEY_OK = 0,
  PALEY_ERR_INVALID_ARGUMENT = 1,
  PALEY_ERR_DIVIDE_BY_ZERO = 2,
  PALEY_ERR_NOT_CONNECTED = 3,
  PALEY_ERR_RESOURCE_LIMIT = 4,
  PALEY_ERR_PARSE = 5,
  PALEY_ERR_INTERNAL = 6
} paley_status;

typedef struct paley_field paley_field;
typedef struct paley_graph paley_graph;
typedef struct paley_matrix paley_matrix;
typedef struct paley_matrix_list paley_matrix_list;
typedef struct paley_design paley_design;
typedef struct paley_group paley_group;

/* Message for the most recent failure on this thread ("" if none). */
const char* paley_last_error(void);
void paley_string_free(char* text);

/* ---- finite fields ----
 * Elements are encodings in {0..q-1}: the base-p value of the coefficient
 * vector of the canonical representative, constant term first. */

paley_status paley_field_create(int64_t p, int32_t e, paley_field** out);
void paley_field_destroy(paley_field* field);

int64_t paley_field_p(const paley_field* field);
int32_t paley_field_e(const paley_field* field);
int64_t paley_field_q(const paley_field* field);
int64_t paley_field_omega(const paley_field* field);
/* "p=..\ne=..\nq=..\nmodulus=<coeffs high to low>\nomega=.." */
paley_status paley_field_info(const paley_field* field, char** out_text);

paley_status paley_field_add(const paley_field* field, int64_t x, int64_t y, int64_t* out);
paley_status paley_field_sub(const paley_field* field, int64_t x, int64_t y, int64_t* out);
paley_status paley_field_neg(const paley_field* field, int64_t x, int64_t* out);
paley_status paley_field_mul(const paley_field* field, int64_t x, int64_t y, int64_t* out);
paley_status paley_field_inv(const paley_field* field, int64_t x, int64_t* out);
paley_status paley_field_pow(const paley_field* field, int64_t x, int64_t k, int64_t* out);
paley_status paley_field_frobenius(const paley_field* field, int64_t x, int32_t j, int64_t* out);

/* ---- residue character and sums ---- */

/* chi(x): 0 for x = 0, +1 for non-zero squares, -1 otherwise; odd q only. */
paley_status paley_chi(const paley_field* field, int64_t x, int32_t* out);
paley_status paley_char_pair_sum(const paley_field* field, int64_t u, int64_t v, int64_t* out);
paley_status paley_jacobsthal_phi(const paley_field* field, int64_t e_arg, int64_t* out);
paley_status paley_jacobsthal_identity_sum(const paley_field* field, int64_t c, int64_t* out);
paley_status paley_perron_count(const paley_field* field, int64_t a, int32_t with_zero,
                                int64_t* out);
paley_status paley_power_sum(int64_t p, int64_t k, int64_t* out);

typedef enum paley_two_squares_method {
  PALEY_TWO_SQUARES_JACOBSTHAL = 0,
  PALEY_TWO_SQUARES_GAUSS = 1
} paley_two_squares_method;

/* Signed decomposition a^2 + b^2 = p for a prime p = 1 mod 4. */
paley_status paley_two_squares(int64_t p, paley_two_squares_method method, int64_t* a, int64_t* b);

/* ---- graphs ---- */

typedef enum paley_graph_kind {
  PALEY_GRAPH_PALEY = 0,
  PALEY_GRAPH_TOURNAMENT = 1,
  PALEY_GRAPH_GENPALEY = 2, /* m = connection-subgroup order */
  PALEY_GRAPH_PEISERT = 3
} paley_graph_kind;

typedef enum paley_export_format {
  PALEY_FORMAT_DOT = 0,
  PALEY_FORMAT_EDGES = 1,
  PALEY_FORMAT_MATRIX = 2
} paley_export_format;

/* m is used by PALEY_GRAPH_GENPALEY only; pass 0 otherwise. */
paley_status paley_graph_build(paley_graph_kind kind, const paley_field* field, int64_t m,
                               paley_graph** out);
/* Cayley graph for the additive group; connection lists element encodings. */
paley_status paley_graph_cayley(const paley_field* field, const int64_t* connection,
                                int64_t connection_len, paley_graph** out);
void paley_graph_destroy(paley_graph* graph);

int32_t paley_graph_order(const paley_graph* graph);
int32_t paley_graph_directed(const paley_graph* graph);
/* 1 iff the arc u -> v is present; negative on range errors. */
int32_t paley_graph_has_edge(const paley_graph* graph, int32_t u, int32_t v);

paley_status paley_graph_export(const paley_graph* graph, paley_export_format format,
                                char** out_text);
/* Parses rows of 0/1 characters; direction inferred from symmetry. */
paley_status paley_graph_parse(const char* adjacency_text, paley_graph** out);
paley_status paley_graph_complement(const paley_graph* graph, paley_graph** out);

/* On success *is_srg says whether the scan succeeded; params_out receives
 * v, k, lambda, mu when it did, and *reason_out (optional) the
 * disqualification otherwise. */
paley_status paley_graph_srg(const paley_graph* graph, int64_t params_out[4], int32_t* is_srg,
                             char** reason_out);
paley_status paley_graph_common_neighbours(const paley_graph* graph, int32_t u, int32_t v,
                                           int64_t* out);
paley_status paley_graph_delta(const paley_graph* graph, int32_t u, int32_t v, int64_t* out);
paley_status paley_graph_min_delta(const paley_graph* graph, int64_t* out);
paley_status paley_graph_is_delta_graph(const paley_graph* graph, int32_t* out);

/* *found says whether a mapping exists; when it does and mapping_text is
 * non-null, the witness comes back as space-separated images. */
paley_status paley_graph_isomorphism(const paley_graph* graph_a, const paley_graph* graph_b,
                                     int32_t* found, char** mapping_text);
paley_status paley_graph_self_complementary(const paley_graph* graph, int32_t* found,
                                            char** mapping_text);

/* ---- sign matrices, Hadamard constructions, designs ---- */

paley_status paley_matrix_sylvester(int32_t k, paley_matrix** out);
paley_status paley_matrix_paley_i(int64_t q, paley_matrix** out);
paley_status paley_matrix_paley_ii(int64_t q, paley_matrix** out);
paley_status paley_matrix_jacobsthal(const paley_field* field, paley_matrix** out);
paley_status paley_matrix_kronecker(const paley_matrix* a, const paley_matrix* b,
                                    paley_matrix** out);
paley_status paley_matrix_normalize(const paley_matrix* matrix, paley_matrix** out);
void paley_matrix_destroy(paley_matrix* matrix);

int32_t paley_matrix_order(const paley_matrix* matrix);
/* Entry in {-1, 0, +1}; returns -2 on range errors. */
int32_t paley_matrix_entry(const paley_matrix* matrix, int32_t i, int32_t j);

paley_status paley_matrix_is_hadamard(const paley_matrix* matrix, int32_t* ok,
                                      int32_t* bad_row_i, int32_t* bad_row_j);
/* "order m" header plus rows of +/- characters. */
paley_status paley_matrix_export(const paley_matrix* matrix, char** out_text);
paley_status paley_matrix_parse(const char* text, paley_matrix** out);

/* Row partition of all sign vectors of length 2^k into Hadamard matrices. */
paley_status paley_partition_build(int32_t k, paley_matrix_list** out);
void paley_matrix_list_destroy(paley_matrix_list* list);
int64_t paley_matrix_list_size(const paley_matrix_list* list);
/* Borrowed reference, valid while the list lives; NULL on range errors. */
const paley_matrix* paley_matrix_list_get(const paley_matrix_list* list, int64_t index);

/* Rows of a normalised Hadamard matrix without the first column, one
 * +/- row per line. */
paley_status paley_simplex_vertices(const paley_matrix* matrix, char** out_text);
paley_status paley_compound_counts(int64_t n, uint64_t group_order, int64_t* d1,
                                   int64_t* compounds);
/* Space-separated achievable orders and unreached multiples of 4. */
paley_status paley_coverage(int64_t limit, char** achievable_text, char** exceptions_text);

/* Monomial pair check: row_images/row_signs and col_images/col_signs each
 * have length order(h); signs are +1/-1. *ok gets the predicate value. */
paley_status paley_matrix_automorphism_pair(const paley_matrix* matrix,
                                            const int32_t* row_images, const int32_t* row_signs,
                                            const int32_t* col_images, const int32_t* col_signs,
                                            int32_t* ok);

paley_status paley_design_qr(int64_t q, paley_design** out);
paley_status paley_design_pg(int32_t k, paley_design** out);
paley_status paley_design_from_matrix(const paley_matrix* matrix, paley_design** out);
paley_status paley_design_to_matrix(const paley_design* design, paley_matrix** out);
void paley_design_destroy(paley_design* design);
int32_t paley_design_points(const paley_design* design);
/* "points P blocks B" header, then one block per line. */
paley_status paley_design_export(const paley_design* design, char** out_text);
paley_status paley_design_parse(const char* text, paley_design** out);

/* ---- permutation groups ---- */

void paley_group_destroy(paley_group* group);
paley_status paley_group_order(const paley_group* group, uint64_t* out);
/* One generator per line in cycle notation; the identity prints "()" and
 * groups with no generators produce an empty string. */
paley_status paley_group_generators(const paley_group* group, char** out_text);
paley_status paley_group_contains(const paley_group* group, const int32_t* images,
                                  int32_t degree, int32_t* out);

paley_status paley_a_delta_l1(const paley_field* field, paley_group** out);
paley_status paley_graph_automorphisms(const paley_graph* graph, paley_group** out);
paley_status paley_tournament_automorphisms(const paley_graph* graph, paley_group** out);
paley_status paley_design_automorphisms(const paley_design* design, paley_group** out);
paley_status paley_is_arc_transitive(const paley_graph* graph, const paley_group* group,
                                     int32_t* out);

/* Group of affine power-character maps for d | q-1, plus the order
 * diagnostics: the enumerated closure order, the m*q*gcd(m,e) formula, and
 * m*q*#{admissible Frobenius exponents}. */
paley_status paley_mcconnel_group(const paley_field* field, int64_t d, paley_group** out,
                                  uint64_t* closure_order, uint64_t* mqh_formula,
                                  uint64_t* frobenius_formula);

/* Exhaustive searches; maps_text (optional) gets one image table per line. */
paley_status paley_carlitz_permutations(const paley_field* field, int64_t* count,
                                        char** maps_text);
paley_status paley_mcconnel_permutations(const paley_field* field, int64_t d, int64_t* count,
                                         char** maps_text);
paley_status paley_lenstra_members(const paley_field* field, int64_t d, int64_t* member_count,
                                   int32_t* is_group, int32_t* contains_gd,
                                   int32_t* normalizes_gd);

/* ---- verification reports ----
 * Reports are line-oriented: one "PASS ..."/"FAIL ..." line per claim and
 * a summary line; *failures receives the number of failed claims. */

paley_status paley_verify_carlitz(int64_t p, int32_t e, char** report, int32_t* failures);
paley_status paley_verify_theorem41(int64_t q, char** report, int32_t* failures);
paley_status paley_verify_mcconnel(int64_t p, int32_t e, int64_t d, char** report,
                                   int32_t* failures);
paley_status paley_verify_table1(char** report, int32_t* failures);
/* only_module: NULL/"" for everything, else one of field, residue, graph,
 * family, hadamard, design, groups. */
paley_status paley_verify_all(const char* only_module, char** report, int32_t* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PALEY_H */
