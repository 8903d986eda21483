// Command-line front end for the paley shared library. Construction
// subcommands print (or write with --out) the deterministic text formats;
// verify subcommands print one PASS/FAIL line per claim and exit 1 when
// any claim fails. Usage problems exit 2.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "paley/paley.h"

namespace {

struct StringDeleter {
  void operator()(char* text) const { paley_string_free(text); }
};
using OwnedText = std::unique_ptr<char, StringDeleter>;

struct FieldDeleter {
  void operator()(paley_field* f) const { paley_field_destroy(f); }
};
using OwnedField = std::unique_ptr<paley_field, FieldDeleter>;

struct GraphDeleter {
  void operator()(paley_graph* g) const { paley_graph_destroy(g); }
};
using OwnedGraph = std::unique_ptr<paley_graph, GraphDeleter>;

struct MatrixDeleter {
  void operator()(paley_matrix* m) const { paley_matrix_destroy(m); }
};
using OwnedMatrix = std::unique_ptr<paley_matrix, MatrixDeleter>;

struct DesignDeleter {
  void operator()(paley_design* d) const { paley_design_destroy(d); }
};
using OwnedDesign = std::unique_ptr<paley_design, DesignDeleter>;

struct GroupDeleter {
  void operator()(paley_group* g) const { paley_group_destroy(g); }
};
using OwnedGroup = std::unique_ptr<paley_group, GroupDeleter>;

struct MatrixListDeleter {
  void operator()(paley_matrix_list* l) const { paley_matrix_list_destroy(l); }
};
using OwnedMatrixList = std::unique_ptr<paley_matrix_list, MatrixListDeleter>;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

void require_ok(paley_status status) {
  if (status != PALEY_OK) throw UsageError(paley_last_error());
}

OwnedField make_field(int64_t p, int32_t e) {
  paley_field* field = nullptr;
  require_ok(paley_field_create(p, e, &field));
  return OwnedField(field);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

int report_and_status(const char* report, int32_t failures) {
  std::cout << report;
  return failures > 0 ? 1 : 0;
}

int run(int argc, char** argv) {
  CLI::App app{"quadratic-residue combinatorics toolkit"};
  app.require_subcommand(1);

  // field info
  auto* field_cmd = app.add_subcommand("field", "finite field utilities");
  field_cmd->require_subcommand(1);
  auto* field_info = field_cmd->add_subcommand("info", "print field parameters");
  int64_t fi_p = 0;
  int32_t fi_e = 1;
  field_info->add_option("--p", fi_p, "characteristic")->required();
  field_info->add_option("--e", fi_e, "extension degree");

  // two-squares
  auto* two_squares = app.add_subcommand("two-squares", "decompose a prime p = 1 mod 4");
  int64_t ts_p = 0;
  std::string ts_method = "jacobsthal";
  two_squares->add_option("p", ts_p, "prime = 1 mod 4")->required();
  two_squares->add_option("--method", ts_method, "jacobsthal|gauss")
      ->check(CLI::IsMember({"jacobsthal", "gauss"}));

  // srg
  auto* srg = app.add_subcommand("srg", "strongly regular parameters of P(q)");
  int64_t srg_p = 0;
  int32_t srg_e = 1;
  srg->add_option("--p", srg_p, "characteristic")->required();
  srg->add_option("--e", srg_e, "extension degree");

  // build
  auto* build = app.add_subcommand("build", "construct a graph of the quadratic-residue family");
  std::string build_kind, build_format = "edges", build_out;
  int64_t build_p = 0, build_m = 0;
  int32_t build_e = 1;
  build->add_option("kind", build_kind, "paley|tournament|genpaley|peisert")
      ->required()
      ->check(CLI::IsMember({"paley", "tournament", "genpaley", "peisert"}));
  build->add_option("--p", build_p, "characteristic")->required();
  build->add_option("--e", build_e, "extension degree");
  build->add_option("--m", build_m, "connection-subgroup order (genpaley)");
  build->add_option("--format", build_format, "dot|edges|matrix")
      ->check(CLI::IsMember({"dot", "edges", "matrix"}));
  build->add_option("--out", build_out, "write to a file instead of stdout");

  // hadamard
  auto* hadamard = app.add_subcommand("hadamard", "Hadamard matrix constructions and checks");
  hadamard->require_subcommand(1);
  auto* hb = hadamard->add_subcommand("build", "construct a matrix");
  std::string hb_kind, hb_out;
  int32_t hb_k = 0;
  int64_t hb_q = 0;
  hb->add_option("kind", hb_kind, "sylvester|paley1|paley2|paley3")
      ->required()
      ->check(CLI::IsMember({"sylvester", "paley1", "paley2", "paley3"}));
  hb->add_option("--k", hb_k, "exponent for sylvester/paley3");
  hb->add_option("--q", hb_q, "prime power for paley1/paley2");
  hb->add_option("--out", hb_out, "write to a file instead of stdout");
  auto* hc = hadamard->add_subcommand("check", "verify H H^T = mI for a matrix file");
  std::string hc_file;
  hc->add_option("file", hc_file, "matrix file (order header plus +/- rows)")->required();
  auto* hcov = hadamard->add_subcommand("coverage", "orders reachable by the constructions");
  int64_t hcov_limit = 200;
  hcov->add_option("--limit", hcov_limit, "largest order to scan");

  // design
  auto* design = app.add_subcommand("design", "Hadamard designs");
  design->require_subcommand(1);
  auto* db = design->add_subcommand("build", "construct a design");
  std::string db_kind, db_out;
  int64_t db_q = 0;
  int32_t db_k = 0;
  db->add_option("kind", db_kind, "qr|pg")->required()->check(CLI::IsMember({"qr", "pg"}));
  db->add_option("--q", db_q, "prime power = 3 mod 4 (qr)");
  db->add_option("--k", db_k, "dimension parameter (pg)");
  db->add_option("--out", db_out, "write to a file instead of stdout");

  // aut
  auto* aut = app.add_subcommand("aut", "automorphism groups of stored objects");
  std::string aut_kind, aut_file;
  aut->add_option("kind", aut_kind, "graph|tournament|design")
      ->required()
      ->check(CLI::IsMember({"graph", "tournament", "design"}));
  aut->add_option("file", aut_file, "input file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check claims against computation");
  std::string verify_what, verify_only;
  int64_t v_p = 0, v_q = 0, v_d = 0;
  int32_t v_e = 1;
  verify->add_option("what", verify_what, "carlitz|theorem41|mcconnel|table1|all")
      ->required()
      ->check(CLI::IsMember({"carlitz", "theorem41", "mcconnel", "table1", "all"}));
  verify->add_option("--p", v_p, "characteristic");
  verify->add_option("--e", v_e, "extension degree");
  verify->add_option("--q", v_q, "prime power");
  verify->add_option("--d", v_d, "character index divisor");
  verify->add_option("--only", verify_only, "restrict 'all' to one module");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*field_info) {
    OwnedField field = make_field(fi_p, fi_e);
    char* text = nullptr;
    require_ok(paley_field_info(field.get(), &text));
    OwnedText owned(text);
    std::cout << owned.get();
    return 0;
  }

  if (*two_squares) {
    int64_t a = 0, b = 0;
    paley_two_squares_method method =
        ts_method == "gauss" ? PALEY_TWO_SQUARES_GAUSS : PALEY_TWO_SQUARES_JACOBSTHAL;
    require_ok(paley_two_squares(ts_p, method, &a, &b));
    int64_t abs_a = a < 0 ? -a : a;
    int64_t abs_b = b < 0 ? -b : b;
    if (abs_a > abs_b) std::swap(abs_a, abs_b);
    std::cout << ts_p << " = " << abs_a << "^2 + " << abs_b << "^2\n";
    return 0;
  }

  if (*srg) {
    OwnedField field = make_field(srg_p, srg_e);
    paley_graph* graph = nullptr;
    require_ok(paley_graph_build(PALEY_GRAPH_PALEY, field.get(), 0, &graph));
    OwnedGraph owned(graph);
    int64_t params[4] = {0, 0, 0, 0};
    int32_t is_srg = 0;
    require_ok(paley_graph_srg(owned.get(), params, &is_srg, nullptr));
    if (!is_srg) throw UsageError("graph is not strongly regular");
    std::cout << "v=" << params[0] << " k=" << params[1] << " lambda=" << params[2]
              << " mu=" << params[3] << "\n";
    return 0;
  }

  if (*build) {
    OwnedField field = make_field(build_p, build_e);
    paley_graph_kind kind = PALEY_GRAPH_PALEY;
    if (build_kind == "tournament") kind = PALEY_GRAPH_TOURNAMENT;
    if (build_kind == "genpaley") kind = PALEY_GRAPH_GENPALEY;
    if (build_kind == "peisert") kind = PALEY_GRAPH_PEISERT;
    if (kind == PALEY_GRAPH_GENPALEY && build_m <= 0) {
      throw UsageError("genpaley needs --m (connection-subgroup order)");
    }
    paley_graph* graph = nullptr;
    require_ok(paley_graph_build(kind, field.get(), build_m, &graph));
    OwnedGraph owned(graph);
    paley_export_format format = PALEY_FORMAT_EDGES;
    if (build_format == "dot") format = PALEY_FORMAT_DOT;
    if (build_format == "matrix") format = PALEY_FORMAT_MATRIX;
    char* text = nullptr;
    require_ok(paley_graph_export(owned.get(), format, &text));
    OwnedText owned_text(text);
    emit(owned_text.get(), build_out);
    return 0;
  }

  if (*hb) {
    paley_matrix* matrix = nullptr;
    if (hb_kind == "sylvester") {
      require_ok(paley_matrix_sylvester(hb_k, &matrix));
    } else if (hb_kind == "paley1") {
      require_ok(paley_matrix_paley_i(hb_q, &matrix));
    } else if (hb_kind == "paley2") {
      require_ok(paley_matrix_paley_ii(hb_q, &matrix));
    } else {  // paley3: every matrix of the partition, blank-line separated
      paley_matrix_list* list = nullptr;
      require_ok(paley_partition_build(hb_k, &list));
      OwnedMatrixList owned_list(list);
      std::ostringstream os;
      for (int64_t i = 0; i < paley_matrix_list_size(list); ++i) {
        char* text = nullptr;
        require_ok(paley_matrix_export(paley_matrix_list_get(list, i), &text));
        OwnedText owned_text(text);
        if (i) os << "\n";
        os << owned_text.get();
      }
      emit(os.str(), hb_out);
      return 0;
    }
    OwnedMatrix owned(matrix);
    char* text = nullptr;
    require_ok(paley_matrix_export(owned.get(), &text));
    OwnedText owned_text(text);
    emit(owned_text.get(), hb_out);
    return 0;
  }

  if (*hc) {
    paley_matrix* matrix = nullptr;
    require_ok(paley_matrix_parse(read_file(hc_file).c_str(), &matrix));
    OwnedMatrix owned(matrix);
    int32_t ok = 0, bad_i = -1, bad_j = -1;
    require_ok(paley_matrix_is_hadamard(owned.get(), &ok, &bad_i, &bad_j));
    if (ok) {
      std::cout << "hadamard order=" << paley_matrix_order(owned.get()) << "\n";
      return 0;
    }
    std::cout << "not hadamard: rows " << bad_i << " and " << bad_j << " not orthogonal\n";
    return 1;
  }

  if (*hcov) {
    char* achievable = nullptr;
    char* exceptions = nullptr;
    require_ok(paley_coverage(hcov_limit, &achievable, &exceptions));
    OwnedText owned_a(achievable), owned_e(exceptions);
    std::cout << "achievable: " << owned_a.get() << "\n";
    std::cout << "exceptions: " << owned_e.get() << "\n";
    return 0;
  }

  if (*db) {
    paley_design* design_handle = nullptr;
    if (db_kind == "qr") {
      if (db_q <= 0) throw UsageError("qr design needs --q");
      require_ok(paley_design_qr(db_q, &design_handle));
    } else {
      if (db_k <= 0) throw UsageError("pg design needs --k");
      require_ok(paley_design_pg(db_k, &design_handle));
    }
    OwnedDesign owned(design_handle);
    char* text = nullptr;
    require_ok(paley_design_export(owned.get(), &text));
    OwnedText owned_text(text);
    emit(owned_text.get(), db_out);
    return 0;
  }

  if (*aut) {
    std::string content = read_file(aut_file);
    paley_group* group = nullptr;
    if (aut_kind == "design") {
      paley_design* design_handle = nullptr;
      require_ok(paley_design_parse(content.c_str(), &design_handle));
      OwnedDesign owned(design_handle);
      require_ok(paley_design_automorphisms(owned.get(), &group));
    } else {
      paley_graph* graph = nullptr;
      require_ok(paley_graph_parse(content.c_str(), &graph));
      OwnedGraph owned(graph);
      if (aut_kind == "tournament") {
        require_ok(paley_tournament_automorphisms(owned.get(), &group));
      } else {
        require_ok(paley_graph_automorphisms(owned.get(), &group));
      }
    }
    OwnedGroup owned_group(group);
    uint64_t order = 0;
    require_ok(paley_group_order(owned_group.get(), &order));
    char* generators = nullptr;
    require_ok(paley_group_generators(owned_group.get(), &generators));
    OwnedText owned_text(generators);
    std::cout << "order=" << order << "\n" << owned_text.get();
    return 0;
  }

  if (*verify) {
    char* report = nullptr;
    int32_t failures = 0;
    if (verify_what == "carlitz") {
      if (v_p <= 0) throw UsageError("verify carlitz needs --p (and --e for extensions)");
      require_ok(paley_verify_carlitz(v_p, v_e, &report, &failures));
    } else if (verify_what == "theorem41") {
      if (v_q <= 0) throw UsageError("verify theorem41 needs --q");
      require_ok(paley_verify_theorem41(v_q, &report, &failures));
    } else if (verify_what == "mcconnel") {
      if (v_p <= 0 || v_d <= 0) throw UsageError("verify mcconnel needs --p, --e and --d");
      require_ok(paley_verify_mcconnel(v_p, v_e, v_d, &report, &failures));
    } else if (verify_what == "table1") {
      require_ok(paley_verify_table1(&report, &failures));
    } else {
      require_ok(paley_verify_all(verify_only.empty() ? nullptr : verify_only.c_str(), &report,
                                  &failures));
    }
    OwnedText owned(report);
    return report_and_status(owned.get(), failures);
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
