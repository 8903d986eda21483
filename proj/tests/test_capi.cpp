// Exercises the shared-library surface through the public C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "paley/paley.h"

namespace {

struct Text {
  char* value = nullptr;
  ~Text() { paley_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

}  // namespace

TEST_CASE("field lifecycle and arithmetic") {
  paley_field* field = nullptr;
  REQUIRE(paley_field_create(3, 2, &field) == PALEY_OK);
  CHECK(paley_field_p(field) == 3);
  CHECK(paley_field_e(field) == 2);
  CHECK(paley_field_q(field) == 9);
  CHECK(paley_field_omega(field) == 4);

  int64_t out = -1;
  CHECK(paley_field_mul(field, 3, 3, &out) == PALEY_OK);
  CHECK(out == 2);  // i^2 = -1
  CHECK(paley_field_add(field, 5, 7, &out) == PALEY_OK);
  CHECK(paley_field_frobenius(field, 3, 1, &out) == PALEY_OK);
  CHECK(out == 6);
  CHECK(paley_field_inv(field, 0, &out) == PALEY_ERR_DIVIDE_BY_ZERO);
  CHECK(std::strlen(paley_last_error()) > 0);

  Text info;
  CHECK(paley_field_info(field, &info.value) == PALEY_OK);
  CHECK(info.str() == "p=3\ne=2\nq=9\nmodulus=1 0 1\nomega=4\n");
  paley_field_destroy(field);
}

TEST_CASE("error codes") {
  paley_field* field = nullptr;
  CHECK(paley_field_create(6, 1, &field) == PALEY_ERR_INVALID_ARGUMENT);
  CHECK(paley_field_create(5, 1, nullptr) == PALEY_ERR_INVALID_ARGUMENT);
  paley_graph* graph = nullptr;
  CHECK(paley_graph_parse("definitely not a matrix", &graph) == PALEY_ERR_PARSE);
  REQUIRE(paley_field_create(3, 2, &field) == PALEY_OK);
  CHECK(paley_graph_build(PALEY_GRAPH_GENPALEY, field, 2, &graph) == PALEY_ERR_NOT_CONNECTED);
  paley_field_destroy(field);
}

TEST_CASE("residue sums through the C surface") {
  paley_field* field = nullptr;
  REQUIRE(paley_field_create(13, 1, &field) == PALEY_OK);
  int32_t value = 0;
  CHECK(paley_chi(field, 4, &value) == PALEY_OK);
  CHECK(value == 1);
  int64_t sum = 0;
  CHECK(paley_char_pair_sum(field, 0, 1, &sum) == PALEY_OK);
  CHECK(sum == -1);
  CHECK(paley_jacobsthal_phi(field, 1, &sum) == PALEY_OK);
  CHECK(sum == 6);
  CHECK(paley_jacobsthal_identity_sum(field, 1, &sum) == PALEY_OK);
  CHECK(sum == -1);
  CHECK(paley_perron_count(field, 1, 1, &sum) == PALEY_OK);
  CHECK(sum == 4);
  CHECK(paley_power_sum(7, 6, &sum) == PALEY_OK);
  CHECK(sum == 6);
  int64_t a = 0, b = 0;
  CHECK(paley_two_squares(13, PALEY_TWO_SQUARES_JACOBSTHAL, &a, &b) == PALEY_OK);
  CHECK(a * a + b * b == 13);
  CHECK(paley_two_squares(13, PALEY_TWO_SQUARES_GAUSS, &a, &b) == PALEY_OK);
  CHECK(a * a + b * b == 13);
  CHECK(paley_two_squares(7, PALEY_TWO_SQUARES_GAUSS, &a, &b) == PALEY_ERR_INVALID_ARGUMENT);
  paley_field_destroy(field);
}

TEST_CASE("graphs through the C surface") {
  paley_field* field = nullptr;
  REQUIRE(paley_field_create(13, 1, &field) == PALEY_OK);
  paley_graph* graph = nullptr;
  REQUIRE(paley_graph_build(PALEY_GRAPH_PALEY, field, 0, &graph) == PALEY_OK);
  CHECK(paley_graph_order(graph) == 13);
  CHECK(paley_graph_directed(graph) == 0);
  CHECK(paley_graph_has_edge(graph, 0, 1) == 1);
  CHECK(paley_graph_has_edge(graph, 0, 2) == 0);
  CHECK(paley_graph_has_edge(graph, 0, 99) == -1);

  int64_t params[4];
  int32_t is_srg = 0;
  Text reason;
  CHECK(paley_graph_srg(graph, params, &is_srg, &reason.value) == PALEY_OK);
  CHECK(is_srg == 1);
  CHECK(params[0] == 13);
  CHECK(params[1] == 6);
  CHECK(params[2] == 2);
  CHECK(params[3] == 3);

  int64_t delta = 0;
  CHECK(paley_graph_delta(graph, 0, 1, &delta) == PALEY_OK);
  CHECK(delta == 6);
  CHECK(paley_graph_min_delta(graph, &delta) == PALEY_OK);
  CHECK(delta == 6);
  int32_t is_delta = 0;
  CHECK(paley_graph_is_delta_graph(graph, &is_delta) == PALEY_OK);
  CHECK(is_delta == 1);

  Text exported;
  CHECK(paley_graph_export(graph, PALEY_FORMAT_MATRIX, &exported.value) == PALEY_OK);
  paley_graph* parsed = nullptr;
  REQUIRE(paley_graph_parse(exported.value, &parsed) == PALEY_OK);
  CHECK(paley_graph_order(parsed) == 13);

  paley_graph* comp = nullptr;
  REQUIRE(paley_graph_complement(graph, &comp) == PALEY_OK);
  int32_t found = 0;
  Text mapping;
  CHECK(paley_graph_isomorphism(graph, comp, &found, &mapping.value) == PALEY_OK);
  CHECK(found == 1);
  CHECK(!mapping.str().empty());
  int32_t self_comp = 0;
  CHECK(paley_graph_self_complementary(graph, &self_comp, nullptr) == PALEY_OK);
  CHECK(self_comp == 1);

  int64_t common = 0;
  CHECK(paley_graph_common_neighbours(graph, 0, 1, &common) == PALEY_OK);
  CHECK(common == 2);

  paley_graph_destroy(parsed);
  paley_graph_destroy(comp);
  paley_graph_destroy(graph);
  paley_field_destroy(field);
}

TEST_CASE("cayley graphs through the C surface") {
  paley_field* field = nullptr;
  REQUIRE(paley_field_create(5, 1, &field) == PALEY_OK);
  int64_t connection[2] = {1, 4};
  paley_graph* graph = nullptr;
  REQUIRE(paley_graph_cayley(field, connection, 2, &graph) == PALEY_OK);
  CHECK(paley_graph_order(graph) == 5);
  CHECK(paley_graph_directed(graph) == 0);
  paley_graph_destroy(graph);
  int64_t with_zero[1] = {0};
  CHECK(paley_graph_cayley(field, with_zero, 1, &graph) == PALEY_ERR_INVALID_ARGUMENT);
  paley_field_destroy(field);
}

TEST_CASE("matrices and designs through the C surface") {
  paley_matrix* h = nullptr;
  REQUIRE(paley_matrix_paley_i(7, &h) == PALEY_OK);
  CHECK(paley_matrix_order(h) == 8);
  CHECK(paley_matrix_entry(h, 0, 0) == 1);
  CHECK(paley_matrix_entry(h, 0, 99) == -2);
  int32_t ok = 0, bad_i = -1, bad_j = -1;
  CHECK(paley_matrix_is_hadamard(h, &ok, &bad_i, &bad_j) == PALEY_OK);
  CHECK(ok == 1);

  Text text;
  CHECK(paley_matrix_export(h, &text.value) == PALEY_OK);
  paley_matrix* parsed = nullptr;
  REQUIRE(paley_matrix_parse(text.value, &parsed) == PALEY_OK);
  CHECK(paley_matrix_order(parsed) == 8);

  paley_matrix* norm = nullptr;
  REQUIRE(paley_matrix_normalize(h, &norm) == PALEY_OK);
  Text simplex;
  CHECK(paley_simplex_vertices(norm, &simplex.value) == PALEY_OK);
  CHECK(!simplex.str().empty());

  paley_matrix* prod = nullptr;
  paley_matrix* s1 = nullptr;
  REQUIRE(paley_matrix_sylvester(1, &s1) == PALEY_OK);
  REQUIRE(paley_matrix_kronecker(s1, h, &prod) == PALEY_OK);
  CHECK(paley_matrix_order(prod) == 16);

  paley_design* design = nullptr;
  REQUIRE(paley_design_from_matrix(h, &design) == PALEY_OK);
  CHECK(paley_design_points(design) == 7);
  Text design_text;
  CHECK(paley_design_export(design, &design_text.value) == PALEY_OK);
  paley_design* parsed_design = nullptr;
  REQUIRE(paley_design_parse(design_text.value, &parsed_design) == PALEY_OK);
  paley_matrix* back = nullptr;
  REQUIRE(paley_design_to_matrix(parsed_design, &back) == PALEY_OK);
  CHECK(paley_matrix_order(back) == 8);

  paley_matrix_destroy(back);
  paley_design_destroy(parsed_design);
  paley_design_destroy(design);
  paley_matrix_destroy(prod);
  paley_matrix_destroy(s1);
  paley_matrix_destroy(norm);
  paley_matrix_destroy(parsed);
  paley_matrix_destroy(h);

  paley_design* qr = nullptr;
  REQUIRE(paley_design_qr(11, &qr) == PALEY_OK);
  CHECK(paley_design_points(qr) == 11);
  paley_design_destroy(qr);
  paley_design* pg = nullptr;
  REQUIRE(paley_design_pg(3, &pg) == PALEY_OK);
  CHECK(paley_design_points(pg) == 7);
  paley_design_destroy(pg);
}

TEST_CASE("partition list through the C surface") {
  paley_matrix_list* list = nullptr;
  REQUIRE(paley_partition_build(2, &list) == PALEY_OK);
  CHECK(paley_matrix_list_size(list) == 4);
  const paley_matrix* first = paley_matrix_list_get(list, 0);
  REQUIRE(first != nullptr);
  CHECK(paley_matrix_order(first) == 4);
  CHECK(paley_matrix_list_get(list, 99) == nullptr);
  paley_matrix_list_destroy(list);
  CHECK(paley_partition_build(9, &list) == PALEY_ERR_RESOURCE_LIMIT);
}

TEST_CASE("monomial pair predicate through the C surface") {
  paley_matrix* h = nullptr;
  REQUIRE(paley_matrix_sylvester(2, &h) == PALEY_OK);
  int32_t images[4] = {0, 1, 2, 3};
  int32_t plus[4] = {1, 1, 1, 1};
  int32_t minus[4] = {-1, -1, -1, -1};
  int32_t ok = 0;
  CHECK(paley_matrix_automorphism_pair(h, images, plus, images, plus, &ok) == PALEY_OK);
  CHECK(ok == 1);
  CHECK(paley_matrix_automorphism_pair(h, images, minus, images, minus, &ok) == PALEY_OK);
  CHECK(ok == 1);
  CHECK(paley_matrix_automorphism_pair(h, images, minus, images, plus, &ok) == PALEY_OK);
  CHECK(ok == 0);
  paley_matrix_destroy(h);
}

TEST_CASE("groups through the C surface") {
  paley_field* field = nullptr;
  REQUIRE(paley_field_create(13, 1, &field) == PALEY_OK);
  paley_group* adl = nullptr;
  REQUIRE(paley_a_delta_l1(field, &adl) == PALEY_OK);
  uint64_t order = 0;
  CHECK(paley_group_order(adl, &order) == PALEY_OK);
  CHECK(order == 78);
  Text generators;
  CHECK(paley_group_generators(adl, &generators.value) == PALEY_OK);
  CHECK(generators.str().find('(') != std::string::npos);

  paley_graph* graph = nullptr;
  REQUIRE(paley_graph_build(PALEY_GRAPH_PALEY, field, 0, &graph) == PALEY_OK);
  paley_group* aut = nullptr;
  REQUIRE(paley_graph_automorphisms(graph, &aut) == PALEY_OK);
  CHECK(paley_group_order(aut, &order) == PALEY_OK);
  CHECK(order == 78);
  int32_t arc_transitive = 0;
  CHECK(paley_is_arc_transitive(graph, adl, &arc_transitive) == PALEY_OK);
  CHECK(arc_transitive == 1);

  int32_t identity[13];
  for (int i = 0; i < 13; ++i) identity[i] = i;
  int32_t member = 0;
  CHECK(paley_group_contains(adl, identity, 13, &member) == PALEY_OK);
  CHECK(member == 1);

  int64_t count = 0;
  Text maps;
  CHECK(paley_carlitz_permutations(field, &count, &maps.value) == PALEY_OK);
  CHECK(count == 1);

  uint64_t closure = 0, mqh = 0, frob = 0;
  paley_group* mcgroup = nullptr;
  CHECK(paley_mcconnel_group(field, 2, &mcgroup, &closure, &mqh, &frob) == PALEY_OK);
  CHECK(closure == 78);
  CHECK(mqh == 78);
  CHECK(frob == 78);

  paley_group_destroy(mcgroup);
  paley_group_destroy(aut);
  paley_group_destroy(adl);
  paley_graph_destroy(graph);
  paley_field_destroy(field);

  paley_field* f5 = nullptr;
  REQUIRE(paley_field_create(5, 1, &f5) == PALEY_OK);
  int64_t members = 0;
  int32_t is_group = 0, contains_gd = 0, normalizes = 0;
  CHECK(paley_lenstra_members(f5, 2, &members, &is_group, &contains_gd, &normalizes) == PALEY_OK);
  CHECK(members == 20);
  CHECK(is_group == 1);
  CHECK(contains_gd == 1);
  CHECK(normalizes == 1);
  paley_field_destroy(f5);
}

TEST_CASE("tournament and design automorphisms through the C surface") {
  paley_field* f7 = nullptr;
  REQUIRE(paley_field_create(7, 1, &f7) == PALEY_OK);
  paley_graph* t7 = nullptr;
  REQUIRE(paley_graph_build(PALEY_GRAPH_TOURNAMENT, f7, 0, &t7) == PALEY_OK);
  paley_group* aut = nullptr;
  REQUIRE(paley_tournament_automorphisms(t7, &aut) == PALEY_OK);
  uint64_t order = 0;
  CHECK(paley_group_order(aut, &order) == PALEY_OK);
  CHECK(order == 21);
  paley_group_destroy(aut);
  paley_graph_destroy(t7);
  paley_field_destroy(f7);

  paley_design* fano = nullptr;
  REQUIRE(paley_design_qr(7, &fano) == PALEY_OK);
  paley_group* design_aut = nullptr;
  REQUIRE(paley_design_automorphisms(fano, &design_aut) == PALEY_OK);
  CHECK(paley_group_order(design_aut, &order) == PALEY_OK);
  CHECK(order == 168);
  paley_group_destroy(design_aut);
  paley_design_destroy(fano);
}

TEST_CASE("coverage and compound counts through the C surface") {
  Text achievable, exceptions;
  CHECK(paley_coverage(200, &achievable.value, &exceptions.value) == PALEY_OK);
  CHECK(exceptions.str() == "92 116 156 172 184 188");
  int64_t d1 = 0, compounds = 0;
  CHECK(paley_compound_counts(2, 168, &d1, &compounds) == PALEY_OK);
  CHECK(d1 == 30);
  CHECK(compounds == 480);
}

TEST_CASE("verification reports through the C surface") {
  Text report;
  int32_t failures = -1;
  CHECK(paley_verify_carlitz(13, 1, &report.value, &failures) == PALEY_OK);
  CHECK(failures == 0);
  CHECK(report.str().find("PASS") == 0);

  Text table1;
  CHECK(paley_verify_table1(&table1.value, &failures) == PALEY_OK);
  CHECK(failures == 1);  // order 172 is unreachable; the claim reports it

  Text field_report;
  CHECK(paley_verify_all("field", &field_report.value, &failures) == PALEY_OK);
  CHECK(failures == 0);
  CHECK(paley_verify_all("bogus", &field_report.value, &failures) ==
        PALEY_ERR_INVALID_ARGUMENT);
}
