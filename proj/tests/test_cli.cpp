#include <doctest.h>

#include <fstream>
#include <sstream>

#include "vdouble/cli.hpp"
#include "vdouble/error.hpp"
#include "vdouble/io.hpp"
#include "vdouble/reference.hpp"
#include "vdouble/stacker.hpp"

using namespace vdouble;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(VDOUBLE_FIXTURE_DIR) + "/" + name; }

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \n\r\t");
  const auto e = s.find_last_not_of(" \n\r\t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

TEST_CASE("fixture files carry the reference codes") {
  CHECK(trimmed(read_file(fixture("unknot"))) == reference::kUnknot);
  CHECK(trimmed(read_file(fixture("virtual_trefoil"))) == reference::kVirtualTrefoil);
  CHECK(trimmed(read_file(fixture("classical_trefoil"))) == reference::kClassicalTrefoil);
  CHECK(trimmed(read_file(fixture("kishino"))) == reference::kKishino);
  for (const char* f : {"unknot", "virtual_trefoil", "classical_trefoil", "kishino"}) {
    CHECK(run({"parse", fixture(f)}).code == 0);
  }
}

TEST_CASE("present the virtual trefoil") {
  const Run r = run({"present", "--algebra", "quandle", fixture("virtual_trefoil")});
  CHECK(r.code == 0);
  CHECK(r.out.find("quandle < a0_0, a0_1 | a0_0 = a0_1^a0_0, a0_1 = a0_0^a0_0 >") != std::string::npos);

  const Run j = run({"present", "--algebra", "quandle", "--json", fixture("virtual_trefoil")});
  const auto p = presentation_from_json(parse_json(j.out));
  CHECK(p.generators.size() == 2);
  CHECK(p.relation_count() == 2);
}

TEST_CASE("double the unknot") {
  const Run r = run({"double", fixture("unknot")});
  CHECK(r.code == 0);
  CHECK(r.out == "*;*\n");
  CHECK(parse_json(run({"double", "--json", fixture("unknot")}).out).at("code") == "*;*");
}

TEST_CASE("battery of a free rank-2 presentation is squares") {
  const Run r = run({"battery", "--code", "*;*", "--json"});
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j.at("counts").at("r3") == "9");
  CHECK(j.at("counts").at("r5") == "25");
  CHECK(j.at("counts").at("s3") == "36");
  CHECK(j.at("counts").at("conj:s3") == "36");
  CHECK(j.at("counts").at("ut2:3") == "144");
  CHECK(j.at("counts").at("conj:ut2:3") == "144");
}

TEST_CASE("diagram commands") {
  CHECK(run({"mirror", "--code", "O1+,O2+,U1+,U2+"}).out == "U1-,U2-,O1-,O2-\n");
  CHECK(run({"stack", "--pattern", "1", "--code", "O1+,O2+,U1+,U2+"}).out == "O1+,O2+,U1+,U2+\n");
  CHECK(run({"cut", "--gap", "0:1", "--code", "O1+,O2+,U1+,U2+"}).out == "O1+,!,O2+,U1+,U2+\n");
  const Run all = run({"cut", "--gap", "0:3", "--all-copies", "--pattern", "10", fixture("virtual_trefoil")});
  CHECK(all.code == 0);
  CHECK(std::count(all.out.begin(), all.out.end(), '!') == 2);
  const Run parsed = run({"parse", "--json", "--code", "O1+,O2+,U1+,U2+"});
  CHECK(parse_json(parsed.out).at("arcs") == nlohmann::json::array({2}));
}

TEST_CASE("presentation commands") {
  CHECK(run({"count", "--target", "s3", fixture("virtual_trefoil")}).out.find("s3      6") != std::string::npos);
  CHECK(run({"to-group", "--code", "O1+,O2+,U1+,U2+"}).out.find("group <") == 0);
  CHECK(run({"kill", "--gen", "a0_0", "--code", "O1+,O2+,U1+,U2+"}).code == 0);
  CHECK(run({"identify", "--keep", "a0_0", "--drop", "a0_1", "--code", "O1+,O2+,U1+,U2+"}).out.find("a0_1") == std::string::npos);
  const Run s = run({"simplify", "--keep", "a0_1,a1_1", "--code", serialize(vertical_double(parse_diagram(reference::kVirtualTrefoil)))});
  CHECK(s.out.find("a1_1 = a1_1^a0_1^a1_1^~a0_1^(a1_1^a0_1)") != std::string::npos);
  const Run t = run({"present", "--algebra", "group", "--tspun", fixture("classical_trefoil")});
  CHECK(t.code == 0);
  CHECK(t.out.find("group <") == 0);
}

TEST_CASE("witness command") {
  const std::string vd = serialize(vertical_double(parse_diagram(reference::kVirtualTrefoil)));
  const Run r = run({"witness", "--simplify", "--keep", "a0_1,a1_1", "--json", "--code", vd, "--assign",
                     R"({"a0_1": [["1","1"],["0","1"]], "a1_1": [["2","0"],["0","1"]]})"});
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j.at("holds") == false);
  CHECK(j.at("relations").at(0).at("lhs").at(0).at(1) == "0");
  CHECK(j.at("relations").at(0).at("rhs").at(0).at(1) == "-1");
}

TEST_CASE("moves commands") {
  CHECK(run({"moves", "apply", "--kind", "welded", "--at", "0:0", "--code", "O1+,O2+,U1+,U2+"}).out == "O2+,O1+,U1+,U2+\n");
  CHECK(run({"moves", "apply", "--kind", "r1", "--at", "0:0", "--code", "*"}).out == "O1+,U1+\n");
  CHECK(run({"moves", "apply", "--kind", "r1", "--dir", "delete", "--at", "0:0", "--code", "O1+,U1+"}).out == "*\n");
  CHECK(run({"moves", "apply", "--kind", "r2", "--at", "0:0", "--gap2", "1:0", "--code", "*;*"}).out == "O1+,O2-;U2-,U1+\n");
  const Run a = run({"moves", "walk", "--steps", "12", "--seed", "4", fixture("classical_trefoil")});
  const Run b = run({"moves", "walk", "--steps", "12", "--seed", "4", fixture("classical_trefoil")});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("demo rows all pass") {
  const Run r = run({"demo"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
  CHECK(r.out.find("lhs upper-right 0, rhs upper-right -1") != std::string::npos);
  for (const auto& row : run_demo()) CHECK_MESSAGE(row.pass, row.label << ": " << row.detail);
  CHECK(parse_json(run({"demo", "--json"}).out).at("rows").size() == 7);
}

TEST_CASE("domain errors exit 1") {
  CHECK(run({"parse", "--code", "O1+,O2+"}).code == 1);
  CHECK(run({"parse", "--code", "O1+,X"}).code == 1);
  CHECK(run({"parse", "/nonexistent/file"}).code == 1);
  CHECK(run({"count", "--target", "s3", "--algebra", "quandle", "--code", "*"}).code == 1);
  CHECK(run({"count", "--target", "q9", "--code", "*"}).code == 1);
  CHECK(run({"kill", "--gen", "zz", "--code", "*"}).code == 1);
  CHECK(run({"moves", "apply", "--kind", "welded", "--at", "0:1", "--code", "O1+,O2+,U1+,U2+"}).code == 1);
  CHECK(run({"moves", "apply", "--kind", "r3", "--crossings", "1,2,3", "--code", reference::kClassicalTrefoil}).code == 1);
  const std::string walked = run({"moves", "walk", "--steps", "50", "--seed", "7", fixture("virtual_trefoil")}).out;
  const Run big = run({"count", "--target", "s4", "--algebra", "group", "--code", walked});
  CHECK(big.code == 1);
  CHECK(big.err.find("--force") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"present", "--code", "*"}).code == 2);
  CHECK(run({"present", "--algebra", "ring", "--code", "*"}).code == 2);
  CHECK(run({"double"}).code == 2);
  CHECK(run({"double", "--code", "*", "extra", "args"}).code == 2);
  CHECK(run({"cut", "--gap", "x:y", "--code", "*"}).code == 2);
  CHECK(run({"moves", "apply", "--kind", "r9", "--code", "*"}).code == 2);
  CHECK(run({"moves", "apply", "--kind", "r2", "--at", "0:0", "--code", "*"}).code == 2);
  CHECK(run({"count", "--code", "*"}).code == 2);
  CHECK(run({"stack", "--pattern", "10", "--threads", "2", "--code", "*"}).code == 2);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("demo") != std::string::npos);
}

TEST_CASE("presentation files") {
  const std::string path = "cli_test_presentation.json";
  {
    std::ofstream f(path);
    f << to_json(reference::vd_virtual_trefoil_reduced()).dump();
  }
  const Run r = run({"battery", "--presentation", path, "--json"});
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j.at("counts").at("conj:s3") == "30");
  CHECK(j.at("counts").at("s3") == "30");
  CHECK(run({"count", "--target", "conj:ut2:5", "--threads", "4", "--presentation", path}).code == 0);
  CHECK(run({"battery", "--presentation", path, "--code", "*"}).code == 2);
  std::remove(path.c_str());
}
