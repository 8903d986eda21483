#include "paley/paley.h"

#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "core/charmaps.hpp"
#include "core/design.hpp"
#include "core/errors.hpp"
#include "core/family.hpp"
#include "core/field.hpp"
#include "core/graph.hpp"
#include "core/groups.hpp"
#include "core/hadamard.hpp"
#include "core/iso.hpp"
#include "core/numeric.hpp"
#include "core/perm.hpp"
#include "core/residue.hpp"
#include "core/verify.hpp"

struct paley_field {
  paley::FiniteField impl;
};
struct paley_graph {
  paley::Graph impl;
};
struct paley_matrix {
  paley::SignMatrix impl;
};
struct paley_matrix_list {
  std::vector<paley_matrix> items;
};
struct paley_design {
  paley::IncidenceDesign impl;
};
struct paley_group {
  paley::PermutationGroup impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
paley_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PALEY_OK;
  } catch (const paley::DivisionByZero& e) {
    g_last_error = e.what();
    return PALEY_ERR_DIVIDE_BY_ZERO;
  } catch (const paley::NotConnected& e) {
    g_last_error = e.what();
    return PALEY_ERR_NOT_CONNECTED;
  } catch (const paley::ResourceLimit& e) {
    g_last_error = e.what();
    return PALEY_ERR_RESOURCE_LIMIT;
  } catch (const paley::ParseError& e) {
    g_last_error = e.what();
    return PALEY_ERR_PARSE;
  } catch (const paley::InvalidArgument& e) {
    g_last_error = e.what();
    return PALEY_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PALEY_ERR_INTERNAL;
  }
}

paley_status invalid(const char* message) {
  g_last_error = message;
  return PALEY_ERR_INVALID_ARGUMENT;
}

paley_status verify_to_report(const std::vector<paley::ClaimResult>& claims, char** report,
                              int32_t* failures) {
  if (report) *report = dup_string(paley::format_report(claims));
  if (failures) *failures = paley::count_failures(claims);
  return PALEY_OK;
}

std::string permutation_images_line(const paley::Permutation& perm) {
  std::ostringstream os;
  for (int i = 0; i < perm.degree(); ++i) {
    if (i) os << ' ';
    os << perm.apply(i);
  }
  return os.str();
}

std::string maps_as_text(const std::vector<paley::Permutation>& maps) {
  std::ostringstream os;
  for (const paley::Permutation& perm : maps) os << permutation_images_line(perm) << "\n";
  return os.str();
}

std::string join_int64(const std::vector<int64_t>& values) {
  std::ostringstream os;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ' ';
    os << values[i];
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* paley_last_error(void) { return g_last_error.c_str(); }

void paley_string_free(char* text) { delete[] text; }

/* ---- fields ---- */

paley_status paley_field_create(int64_t p, int32_t e, paley_field** out) {
  if (!out) return invalid("null out-parameter");
  return guarded([&] { *out = new paley_field{paley::FiniteField(p, e)}; });
}

void paley_field_destroy(paley_field* field) { delete field; }

int64_t paley_field_p(const paley_field* field) { return field ? field->impl.p() : -1; }
int32_t paley_field_e(const paley_field* field) { return field ? field->impl.e() : -1; }
int64_t paley_field_q(const paley_field* field) { return field ? field->impl.q() : -1; }
int64_t paley_field_omega(const paley_field* field) {
  return field ? field->impl.omega().encoding() : -1;
}

paley_status paley_field_info(const paley_field* field, char** out_text) {
  if (!field || !out_text) return invalid("null argument");
  return guarded([&] { *out_text = dup_string(field->impl.info_text()); });
}

#define PALEY_BINARY_OP(name, expr)                                                          \
  paley_status name(const paley_field* field, int64_t x, int64_t y, int64_t* out) {          \
    if (!field || !out) return invalid("null argument");                                     \
    return guarded([&] {                                                                     \
      const paley::FiniteField& f = field->impl;                                             \
      *out = (expr).encoding();                                                              \
    });                                                                                      \
  }

PALEY_BINARY_OP(paley_field_add, f.add(f.element(x), f.element(y)))
PALEY_BINARY_OP(paley_field_sub, f.sub(f.element(x), f.element(y)))
PALEY_BINARY_OP(paley_field_mul, f.mul(f.element(x), f.element(y)))
PALEY_BINARY_OP(paley_field_pow, f.pow(f.element(x), y))
#undef PALEY_BINARY_OP

paley_status paley_field_neg(const paley_field* field, int64_t x, int64_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] { *out = field->impl.neg(field->impl.element(x)).encoding(); });
}

paley_status paley_field_inv(const paley_field* field, int64_t x, int64_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] { *out = field->impl.inv(field->impl.element(x)).encoding(); });
}

paley_status paley_field_frobenius(const paley_field* field, int64_t x, int32_t j, int64_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] { *out = field->impl.frobenius(field->impl.element(x), j).encoding(); });
}

/* ---- residue character and sums ---- */

paley_status paley_chi(const paley_field* field, int64_t x, int32_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] { *out = paley::chi(field->impl, field->impl.element(x)); });
}

paley_status paley_char_pair_sum(const paley_field* field, int64_t u, int64_t v, int64_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] {
    *out = paley::char_pair_sum(field->impl, field->impl.element(u), field->impl.element(v));
  });
}

paley_status paley_jacobsthal_phi(const paley_field* field, int64_t e_arg, int64_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] { *out = paley::jacobsthal_phi(field->impl, field->impl.element(e_arg)); });
}

paley_status paley_jacobsthal_identity_sum(const paley_field* field, int64_t c, int64_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded(
      [&] { *out = paley::jacobsthal_identity_sum(field->impl, field->impl.element(c)); });
}

paley_status paley_perron_count(const paley_field* field, int64_t a, int32_t with_zero,
                                int64_t* out) {
  if (!field || !out) return invalid("null argument");
  return guarded(
      [&] { *out = paley::perron_count(field->impl, field->impl.element(a), with_zero != 0); });
}

paley_status paley_power_sum(int64_t p, int64_t k, int64_t* out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = paley::power_sum(p, k); });
}

paley_status paley_two_squares(int64_t p, paley_two_squares_method method, int64_t* a,
                               int64_t* b) {
  if (!a || !b) return invalid("null argument");
  return guarded([&] {
    auto ab = method == PALEY_TWO_SQUARES_GAUSS ? paley::two_squares_gauss(p)
                                                : paley::two_squares_jacobsthal(p);
    *a = ab.first;
    *b = ab.second;
  });
}

/* ---- graphs ---- */

paley_status paley_graph_build(paley_graph_kind kind, const paley_field* field, int64_t m,
                               paley_graph** out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] {
    switch (kind) {
      case PALEY_GRAPH_PALEY:
        *out = new paley_graph{paley::paley_graph(field->impl)};
        return;
      case PALEY_GRAPH_TOURNAMENT:
        *out = new paley_graph{paley::paley_tournament(field->impl)};
        return;
      case PALEY_GRAPH_GENPALEY:
        *out = new paley_graph{paley::generalized_paley(field->impl, m).graph};
        return;
      case PALEY_GRAPH_PEISERT:
        *out = new paley_graph{paley::peisert_graph(field->impl)};
        return;
    }
    throw paley::InvalidArgument("unknown graph kind");
  });
}

paley_status paley_graph_cayley(const paley_field* field, const int64_t* connection,
                                int64_t connection_len, paley_graph** out) {
  if (!field || !out || (!connection && connection_len > 0)) return invalid("null argument");
  return guarded([&] {
    std::vector<paley::FieldElement> conn;
    for (int64_t i = 0; i < connection_len; ++i) conn.push_back(field->impl.element(connection[i]));
    *out = new paley_graph{paley::Graph::cayley(field->impl, conn)};
  });
}

void paley_graph_destroy(paley_graph* graph) { delete graph; }

int32_t paley_graph_order(const paley_graph* graph) {
  return graph ? graph->impl.vertex_count() : -1;
}

int32_t paley_graph_directed(const paley_graph* graph) {
  return graph ? (graph->impl.directed() ? 1 : 0) : -1;
}

int32_t paley_graph_has_edge(const paley_graph* graph, int32_t u, int32_t v) {
  if (!graph || u < 0 || v < 0 || u >= graph->impl.vertex_count() ||
      v >= graph->impl.vertex_count()) {
    return -1;
  }
  return graph->impl.has_edge(u, v) ? 1 : 0;
}

paley_status paley_graph_export(const paley_graph* graph, paley_export_format format,
                                char** out_text) {
  if (!graph || !out_text) return invalid("null argument");
  return guarded([&] {
    switch (format) {
      case PALEY_FORMAT_DOT:
        *out_text = dup_string(graph->impl.to_dot());
        return;
      case PALEY_FORMAT_EDGES:
        *out_text = dup_string(graph->impl.to_edge_list());
        return;
      case PALEY_FORMAT_MATRIX:
        *out_text = dup_string(graph->impl.to_adjacency_text());
        return;
    }
    throw paley::InvalidArgument("unknown export format");
  });
}

paley_status paley_graph_parse(const char* adjacency_text, paley_graph** out) {
  if (!adjacency_text || !out) return invalid("null argument");
  return guarded(
      [&] { *out = new paley_graph{paley::Graph::parse_adjacency_text(adjacency_text)}; });
}

paley_status paley_graph_complement(const paley_graph* graph, paley_graph** out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_graph{graph->impl.complement()}; });
}

paley_status paley_graph_srg(const paley_graph* graph, int64_t params_out[4], int32_t* is_srg,
                             char** reason_out) {
  if (!graph || !params_out || !is_srg) return invalid("null argument");
  return guarded([&] {
    paley::SrgResult r = paley::srg_params(graph->impl);
    *is_srg = r.is_srg ? 1 : 0;
    params_out[0] = r.params.v;
    params_out[1] = r.params.k;
    params_out[2] = r.params.lambda;
    params_out[3] = r.params.mu;
    if (reason_out) *reason_out = dup_string(r.reason);
  });
}

paley_status paley_graph_common_neighbours(const paley_graph* graph, int32_t u, int32_t v,
                                           int64_t* out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = paley::common_neighbours(graph->impl, u, v); });
}

paley_status paley_graph_delta(const paley_graph* graph, int32_t u, int32_t v, int64_t* out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = paley::delta_uv(graph->impl, u, v); });
}

paley_status paley_graph_min_delta(const paley_graph* graph, int64_t* out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = paley::min_delta(graph->impl); });
}

paley_status paley_graph_is_delta_graph(const paley_graph* graph, int32_t* out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = paley::is_delta_graph(graph->impl) ? 1 : 0; });
}

namespace {

paley_status witness_search(std::optional<std::vector<int>> witness, int32_t* found,
                            char** mapping_text) {
  if (witness) {
    if (mapping_text) {
      std::ostringstream os;
      for (size_t i = 0; i < witness->size(); ++i) {
        if (i) os << ' ';
        os << (*witness)[i];
      }
      *mapping_text = dup_string(os.str());
    }
    *found = 1;
  } else {
    if (mapping_text) *mapping_text = dup_string("");
    *found = 0;
  }
  return PALEY_OK;
}

}  // namespace

paley_status paley_graph_isomorphism(const paley_graph* graph_a, const paley_graph* graph_b,
                                     int32_t* found, char** mapping_text) {
  if (!graph_a || !graph_b || !found) return invalid("null argument");
  paley_status status = PALEY_OK;
  paley_status guard = guarded([&] {
    status = witness_search(paley::find_isomorphism(graph_a->impl, graph_b->impl), found,
                            mapping_text);
  });
  return guard == PALEY_OK ? status : guard;
}

paley_status paley_graph_self_complementary(const paley_graph* graph, int32_t* found,
                                            char** mapping_text) {
  if (!graph || !found) return invalid("null argument");
  paley_status status = PALEY_OK;
  paley_status guard = guarded([&] {
    status = witness_search(paley::self_complementarity_witness(graph->impl), found, mapping_text);
  });
  return guard == PALEY_OK ? status : guard;
}

/* ---- matrices and designs ---- */

paley_status paley_matrix_sylvester(int32_t k, paley_matrix** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::sylvester(k)}; });
}

paley_status paley_matrix_paley_i(int64_t q, paley_matrix** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::paley_type_i(q)}; });
}

paley_status paley_matrix_paley_ii(int64_t q, paley_matrix** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::paley_type_ii(q)}; });
}

paley_status paley_matrix_jacobsthal(const paley_field* field, paley_matrix** out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::jacobsthal_matrix(field->impl)}; });
}

paley_status paley_matrix_kronecker(const paley_matrix* a, const paley_matrix* b,
                                    paley_matrix** out) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::kronecker(a->impl, b->impl)}; });
}

paley_status paley_matrix_normalize(const paley_matrix* matrix, paley_matrix** out) {
  if (!matrix || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::normalize(matrix->impl)}; });
}

void paley_matrix_destroy(paley_matrix* matrix) { delete matrix; }

int32_t paley_matrix_order(const paley_matrix* matrix) {
  return matrix ? matrix->impl.order() : -1;
}

int32_t paley_matrix_entry(const paley_matrix* matrix, int32_t i, int32_t j) {
  if (!matrix || i < 0 || j < 0 || i >= matrix->impl.order() || j >= matrix->impl.order()) {
    return -2;
  }
  return matrix->impl.entry(i, j);
}

paley_status paley_matrix_is_hadamard(const paley_matrix* matrix, int32_t* ok,
                                      int32_t* bad_row_i, int32_t* bad_row_j) {
  if (!matrix || !ok) return invalid("null argument");
  return guarded([&] {
    paley::HadamardCheck check = paley::is_hadamard(matrix->impl);
    *ok = check.ok ? 1 : 0;
    if (bad_row_i) *bad_row_i = check.row_i;
    if (bad_row_j) *bad_row_j = check.row_j;
  });
}

paley_status paley_matrix_export(const paley_matrix* matrix, char** out_text) {
  if (!matrix || !out_text) return invalid("null argument");
  return guarded([&] { *out_text = dup_string(matrix->impl.to_text()); });
}

paley_status paley_matrix_parse(const char* text, paley_matrix** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::SignMatrix::parse(text)}; });
}

paley_status paley_partition_build(int32_t k, paley_matrix_list** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    auto matrices = paley::paley_partition(k);
    auto* list = new paley_matrix_list;
    list->items.reserve(matrices.size());
    for (paley::SignMatrix& m : matrices) list->items.push_back(paley_matrix{std::move(m)});
    *out = list;
  });
}

void paley_matrix_list_destroy(paley_matrix_list* list) { delete list; }

int64_t paley_matrix_list_size(const paley_matrix_list* list) {
  return list ? static_cast<int64_t>(list->items.size()) : -1;
}

const paley_matrix* paley_matrix_list_get(const paley_matrix_list* list, int64_t index) {
  if (!list || index < 0 || index >= static_cast<int64_t>(list->items.size())) return nullptr;
  return &list->items[static_cast<size_t>(index)];
}

paley_status paley_simplex_vertices(const paley_matrix* matrix, char** out_text) {
  if (!matrix || !out_text) return invalid("null argument");
  return guarded([&] {
    auto vertices = paley::simplex_vertices(matrix->impl);
    std::ostringstream os;
    for (const auto& row : vertices) {
      for (int8_t value : row) os << (value > 0 ? '+' : '-');
      os << "\n";
    }
    *out_text = dup_string(os.str());
  });
}

paley_status paley_compound_counts(int64_t n, uint64_t group_order, int64_t* d1,
                                   int64_t* compounds) {
  if (!d1 || !compounds) return invalid("null argument");
  return guarded([&] {
    paley::CompoundCount c = paley::compound_counts(n, group_order);
    *d1 = c.d1;
    *compounds = c.compounds;
  });
}

paley_status paley_coverage(int64_t limit, char** achievable_text, char** exceptions_text) {
  return guarded([&] {
    paley::CoverageResult cov = paley::paley_coverage(limit);
    if (achievable_text) *achievable_text = dup_string(join_int64(cov.achievable));
    if (exceptions_text) *exceptions_text = dup_string(join_int64(cov.exceptions));
  });
}

paley_status paley_matrix_automorphism_pair(const paley_matrix* matrix,
                                            const int32_t* row_images, const int32_t* row_signs,
                                            const int32_t* col_images, const int32_t* col_signs,
                                            int32_t* ok) {
  if (!matrix || !row_images || !row_signs || !col_images || !col_signs || !ok) {
    return invalid("null argument");
  }
  return guarded([&] {
    int m = matrix->impl.order();
    paley::SignedPermutation p, q;
    for (int i = 0; i < m; ++i) {
      p.images.push_back(row_images[i]);
      p.signs.push_back(static_cast<int8_t>(row_signs[i]));
      q.images.push_back(col_images[i]);
      q.signs.push_back(static_cast<int8_t>(col_signs[i]));
    }
    *ok = paley::is_hadamard_automorphism(matrix->impl, p, q) ? 1 : 0;
  });
}

paley_status paley_design_qr(int64_t q, paley_design** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new paley_design{paley::qr_design(q)}; });
}

paley_status paley_design_pg(int32_t k, paley_design** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new paley_design{paley::pg_design(k)}; });
}

paley_status paley_design_from_matrix(const paley_matrix* matrix, paley_design** out) {
  if (!matrix || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_design{paley::matrix_to_design(matrix->impl)}; });
}

paley_status paley_design_to_matrix(const paley_design* design, paley_matrix** out) {
  if (!design || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_matrix{paley::design_to_matrix(design->impl)}; });
}

void paley_design_destroy(paley_design* design) { delete design; }

int32_t paley_design_points(const paley_design* design) {
  return design ? design->impl.points() : -1;
}

paley_status paley_design_export(const paley_design* design, char** out_text) {
  if (!design || !out_text) return invalid("null argument");
  return guarded([&] { *out_text = dup_string(design->impl.to_text()); });
}

paley_status paley_design_parse(const char* text, paley_design** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_design{paley::IncidenceDesign::parse(text)}; });
}

/* ---- permutation groups ---- */

void paley_group_destroy(paley_group* group) { delete group; }

paley_status paley_group_order(const paley_group* group, uint64_t* out) {
  if (!group || !out) return invalid("null argument");
  *out = group->impl.order();
  return PALEY_OK;
}

paley_status paley_group_generators(const paley_group* group, char** out_text) {
  if (!group || !out_text) return invalid("null argument");
  return guarded([&] {
    std::ostringstream os;
    for (const paley::Permutation& gen : group->impl.generators()) {
      os << gen.cycle_notation() << "\n";
    }
    *out_text = dup_string(os.str());
  });
}

paley_status paley_group_contains(const paley_group* group, const int32_t* images,
                                  int32_t degree, int32_t* out) {
  if (!group || !images || !out) return invalid("null argument");
  return guarded([&] {
    if (degree != group->impl.degree()) {
      throw paley::InvalidArgument("degree mismatch in membership test");
    }
    std::vector<int> vec(images, images + degree);
    *out = group->impl.contains(paley::Permutation(std::move(vec))) ? 1 : 0;
  });
}

paley_status paley_a_delta_l1(const paley_field* field, paley_group** out) {
  if (!field || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_group{paley::a_delta_l1(field->impl)}; });
}

paley_status paley_graph_automorphisms(const paley_graph* graph, paley_group** out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_group{paley::graph_automorphisms(graph->impl)}; });
}

paley_status paley_tournament_automorphisms(const paley_graph* graph, paley_group** out) {
  if (!graph || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_group{paley::tournament_automorphisms(graph->impl)}; });
}

paley_status paley_design_automorphisms(const paley_design* design, paley_group** out) {
  if (!design || !out) return invalid("null argument");
  return guarded([&] { *out = new paley_group{paley::design_automorphisms(design->impl)}; });
}

paley_status paley_is_arc_transitive(const paley_graph* graph, const paley_group* group,
                                     int32_t* out) {
  if (!graph || !group || !out) return invalid("null argument");
  return guarded([&] { *out = paley::is_arc_transitive(graph->impl, group->impl) ? 1 : 0; });
}

paley_status paley_mcconnel_group(const paley_field* field, int64_t d, paley_group** out,
                                  uint64_t* closure_order, uint64_t* mqh_formula,
                                  uint64_t* frobenius_formula) {
  if (!field) return invalid("null argument");
  return guarded([&] {
    paley::McconnelGroupReport report = paley::mcconnel_group(field->impl, d);
    if (closure_order) *closure_order = report.closure_order;
    if (mqh_formula) *mqh_formula = report.mqh_formula;
    if (frobenius_formula) *frobenius_formula = report.frobenius_formula;
    if (out) *out = new paley_group{std::move(report.group)};
  });
}

paley_status paley_carlitz_permutations(const paley_field* field, int64_t* count,
                                        char** maps_text) {
  if (!field || !count) return invalid("null argument");
  return guarded([&] {
    auto maps = paley::carlitz_permutations(field->impl);
    *count = static_cast<int64_t>(maps.size());
    if (maps_text) *maps_text = dup_string(maps_as_text(maps));
  });
}

paley_status paley_mcconnel_permutations(const paley_field* field, int64_t d, int64_t* count,
                                         char** maps_text) {
  if (!field || !count) return invalid("null argument");
  return guarded([&] {
    auto maps = paley::mcconnel_permutations(field->impl, d);
    *count = static_cast<int64_t>(maps.size());
    if (maps_text) *maps_text = dup_string(maps_as_text(maps));
  });
}

paley_status paley_lenstra_members(const paley_field* field, int64_t d, int64_t* member_count,
                                   int32_t* is_group, int32_t* contains_gd,
                                   int32_t* normalizes_gd) {
  if (!field || !member_count) return invalid("null argument");
  return guarded([&] {
    paley::LenstraReport report = paley::lenstra_normalizer_members(field->impl, d);
    *member_count = static_cast<int64_t>(report.members.size());
    if (is_group) *is_group = report.closed_under_composition ? 1 : 0;
    if (contains_gd) *contains_gd = report.contains_gd ? 1 : 0;
    if (normalizes_gd) *normalizes_gd = report.normalizes_gd ? 1 : 0;
  });
}

/* ---- verification ---- */

paley_status paley_verify_carlitz(int64_t p, int32_t e, char** report, int32_t* failures) {
  return guarded([&] { verify_to_report(paley::verify_carlitz_claims(p, e), report, failures); });
}

paley_status paley_verify_theorem41(int64_t q, char** report, int32_t* failures) {
  return guarded([&] { verify_to_report(paley::verify_theorem41_claims(q), report, failures); });
}

paley_status paley_verify_mcconnel(int64_t p, int32_t e, int64_t d, char** report,
                                   int32_t* failures) {
  return guarded(
      [&] { verify_to_report(paley::verify_mcconnel_claims(p, e, d), report, failures); });
}

paley_status paley_verify_table1(char** report, int32_t* failures) {
  return guarded([&] { verify_to_report(paley::verify_table1_claims(), report, failures); });
}

paley_status paley_verify_all(const char* only_module, char** report, int32_t* failures) {
  return guarded([&] {
    std::string filter = only_module ? only_module : "";
    verify_to_report(paley::verify_all(filter), report, failures);
  });
}

} /* extern "C" */
