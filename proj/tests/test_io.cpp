#include <doctest.h>

#include "vdouble/error.hpp"
#include "vdouble/io.hpp"
#include "vdouble/reference.hpp"
#include "vdouble/stacker.hpp"

using namespace vdouble;
using nlohmann::json;

TEST_CASE("presentation JSON round trip") {
  for (const Presentation& p : std::vector<Presentation>{reference::vd_virtual_trefoil_quandle(), reference::trefoil_group(),
                                wirtinger(vertical_double(parse_diagram(reference::kVirtualTrefoil)), Algebra::Group),
                                wirtinger(parse_diagram("*;*"), Algebra::Quandle)}) {
    const json j = to_json(p);
    CHECK(j.at("format") == 1);
    CHECK(presentation_from_json(j) == p);
    CHECK(presentation_from_json(parse_json(j.dump())) == p);
  }
}

TEST_CASE("presentation JSON layout") {
  const json j = to_json(wirtinger(parse_diagram(reference::kVirtualTrefoil), Algebra::Quandle));
  CHECK(j.at("algebra") == "quandle");
  CHECK(j.at("generators") == json::array({"a0_0", "a0_1"}));
  CHECK(j.at("relations").at(0).at("lhs") == "a0_0");
  CHECK(j.at("relations").at(0).at("rhs") == "a0_1^a0_0");
  CHECK(j.at("meridians").at("0") == "a0_0");
}

TEST_CASE("malformed presentation JSON") {
  CHECK_THROWS_AS(presentation_from_json(json{{"generators", json::array()}}), ParseError);
  CHECK_THROWS_AS(presentation_from_json(json{{"algebra", "quandle"}, {"generators", {"x"}}, {"relations", {{{"lhs", "x"}, {"rhs", "y"}}}}}),
                  ValidationError);
  CHECK_THROWS_AS(presentation_from_json(json{{"algebra", "quandle"}, {"generators", {"x"}}, {"relations", {{{"lhs", "x^"}, {"rhs", "x"}}}}}),
                  ParseError);
  CHECK_THROWS_AS(presentation_from_json(json{{"format", 2}, {"algebra", "group"}, {"generators", json::array()}, {"relations", json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(presentation_from_json(json{{"algebra", "group"}, {"generators", {"x"}}, {"relations", json::array()}, {"meridians", {{"a", "x"}}}}),
                  ParseError);
  CHECK_THROWS_AS(presentation_from_json(json{{"algebra", 3}, {"generators", json::array()}, {"relations", json::array()}}), ParseError);
}

TEST_CASE("malformed JSON text reports the byte") {
  try {
    parse_json("{\"a\": }");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("count report JSON") {
  const CountReport r = battery_report(reference::trefoil_group(), {"s3", "r3"});
  const json j = to_json(r);
  CHECK(j.at("format") == 1);
  CHECK(j.at("counts").at("s3") == "12");
  CHECK(j.at("skipped").at("r3") == "skipped: quandle target");
  CHECK(j.at("elapsed_us").contains("s3"));
}

TEST_CASE("matrix assignments") {
  const MatrixAssignment a = matrix_assignment_from_json(parse_json(R"({"x": [["1","1"],["0","1"]], "A": [[2, 0], ["0", "1/2"]]})"));
  CHECK(a.at("x") == Mat2{{Rational(1), Rational(1), Rational(0), Rational(1)}});
  CHECK(a.at("A").e[3] == Rational(1, 2));
  CHECK_THROWS_AS(matrix_assignment_from_json(parse_json(R"({"x": [["1","1"]]})")), ParseError);
  CHECK_THROWS_AS(matrix_assignment_from_json(parse_json(R"({"x": [[true,1],[0,1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_assignment_from_json(parse_json("[]")), ParseError);
}

TEST_CASE("witness report JSON") {
  const json j = to_json(witness_check(reference::vd_virtual_trefoil_reduced(), reference::witness_assignment()));
  CHECK(j.at("holds") == false);
  CHECK(j.at("relations").at(0).at("lhs").at(0).at(1) == "0");
  CHECK(j.at("relations").at(0).at("rhs").at(0).at(1) == "-1");
}

TEST_CASE("reading a missing file") {
  CHECK_THROWS_AS(read_file("/nonexistent/vdouble"), Error);
}
