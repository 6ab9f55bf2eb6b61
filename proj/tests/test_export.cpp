#include "catch_amalgamated.hpp"

#include "qgen/export.hpp"

using namespace qgen;

TEST_CASE("sequence export forms") {
  auto e = make_sequence_export("genocchi", "Z", 2, 2, genocchi(4));
  CHECK(to_text(e) == "1 1 3 17\n");
  CHECK(to_csv(e) == "index,value\n2,1\n4,1\n6,3\n8,17\n");

  auto j = to_json(e);
  CHECK(j["kind"] == "genocchi");
  CHECK(j["coefficient_ring"] == "Z");
  REQUIRE(j["values"].size() == 4);
  CHECK(j["values"][0]["index"] == 2);
  CHECK(j["values"][0]["value"] == "1");
  CHECK(j["values"][3]["index"] == 8);
  CHECK(j["values"][3]["value"] == "17");
  // key order is fixed for byte-stable reports
  CHECK(j.dump().rfind("{\"kind\":", 0) == 0);

  std::string latex = to_latex(e);
  CHECK(latex.find("\\begin{tabular}") == 0);
  CHECK(latex.find("8 & $17$") != std::string::npos);
}

TEST_CASE("triangle export forms") {
  auto tri = q_seidel_triangle(4);
  auto e = make_triangle_export("q_seidel_triangle", "Z[q,q^-1]", tri);
  CHECK(to_text(e) == "1\n1\n1, 1\n1 + q, q\n");
  CHECK(to_csv(e) ==
        "i,j,value\n1,1,1\n2,1,1\n3,1,1\n3,2,1\n4,1,1 + q\n4,2,q\n");
  auto j = to_json(e);
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][3]["i"] == 4);
  CHECK(j["rows"][3]["entries"][1]["j"] == 2);
  CHECK(j["rows"][3]["entries"][1]["value"] == "q");
  // latex output pads ragged rows with zeros
  std::string latex = to_latex(e);
  CHECK(latex.find("\\begin{pmatrix}") == 0);
  CHECK(latex.find("1 & 0") != std::string::npos);
  CHECK(latex.find("1 + q & q") != std::string::npos);
}

TEST_CASE("matrix export uses n,k keys from zero") {
  auto e = make_matrix_export("a_matrix", "Q", a_matrix(2));
  CHECK(to_csv(e) == "n,k,value\n1,0,1\n1,1,0\n2,0,-1\n2,1,2\n");
  auto j = to_json(e);
  CHECK(j["rows"][0]["n"] == 1);
  CHECK(j["rows"][0]["entries"][0]["k"] == 0);
}
