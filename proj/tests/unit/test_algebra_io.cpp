#include <catch2/catch.hpp>

#include <fstream>
#include <sstream>

#include "liexp/algebra_io.hpp"
#include "liexp/catalog.hpp"

using namespace liexp;

namespace {

std::string data(const std::string& file) { return std::string(LIEXP_DATA_DIR) + "/" + file; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped files match the catalog", "[io]") {
  for (const auto& name : catalog_names()) {
    INFO(name);
    const LieAlgebra a = parse_algebra_file(data(name + ".alg"));
    CHECK(a.name() == name);
    CHECK(structure_difference(a, *catalog(name)) == std::nullopt);
    CHECK(a.metadata() == catalog(name)->metadata());
  }
}

TEST_CASE("emit and parse round trip byte for byte", "[io]") {
  for (const char* file : {"galilei.alg", "galilei_ext.alg", "poincare.alg", "newton_hooke.alg",
                           "euclid4.alg", "abelian3.alg", "galilei_bad_sign.alg"}) {
    INFO(file);
    const std::string text = slurp(data(file));
    CHECK(emit_algebra(parse_algebra(text, {true})) == text);
  }
  for (const auto& name : catalog_names())
    CHECK(emit_algebra(parse_algebra(emit_algebra(*catalog(name)))) == emit_algebra(*catalog(name)));
}

TEST_CASE("wrong sign is reported as a Jacobi failure", "[io]") {
  try {
    parse_algebra_file(data("galilei_bad_sign.alg"));
    FAIL("loaded");
  } catch (const JacobiError& e) {
    CHECK(e.violations().size() == 4);
    CHECK(std::string(e.what()).find("4 triple(s)") != std::string::npos);
  }
  const LieAlgebra a = parse_algebra_file(data("galilei_bad_sign.alg"), {true});
  const auto lines = describe(a, jacobi_check(a));
  REQUIRE(lines.size() == 4);
  CHECK(lines.front() == "[H,K1,J2]: 2*P3");
}

TEST_CASE("empty bracket list gives an abelian algebra", "[io]") {
  const LieAlgebra a = parse_algebra_file(data("abelian3.alg"));
  CHECK(a.dim() == 3);
  CHECK(a.brackets().empty());
  CHECK(jacobi_check(a).empty());
  const LieAlgebra b = parse_algebra(R"({"name": "t", "generators": ["A", "B"]})");
  CHECK(b.dim() == 2);
  CHECK(b.structure(0, 1).empty());
}

TEST_CASE("coefficients", "[io]") {
  const LieAlgebra a = parse_algebra(R"({
    "name": "t", "parameters": ["w"], "generators": ["A", "B", "C"],
    "brackets": [{"left": "A", "right": "B", "terms": [{"gen": "C", "coeff": -2}]},
                 {"left": "B", "right": "C", "terms": []},
                 {"left": "C", "right": "A", "terms": [{"gen": "C", "coeff": "0"}]}]
  })");
  CHECK(format_vector(a, bracket(a, a.basis_vector(0), a.basis_vector(1))) == "-2*C");
  const LieAlgebra p = parse_algebra(R"({
    "name": "t", "parameters": ["w"], "generators": ["A", "B", "C"],
    "brackets": [{"left": "A", "right": "B", "terms": [{"gen": "C", "coeff": "w^2 - 1/3"}]}]
  })");
  CHECK(p.structure(1, 0).front().coeff.str() == "-w^2 + 1/3");
}

TEST_CASE("syntax errors carry line and column", "[io]") {
  const std::string text = "{\n  \"name\": \"x\",\n  \"generators\": [\"A\" \"B\"]\n}\n";
  try {
    parse_algebra(text);
    FAIL("parsed");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 22);
    CHECK(e.column() <= 24);
  }
  try {
    parse_algebra_file(data("../tests/unit/main.cpp"));
    FAIL("parsed");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("main.cpp: ") != std::string::npos);
    CHECK(e.line() == 1);
  }
}

TEST_CASE("semantic errors name the offending field", "[io]") {
  CHECK(error_of("[]") == "algebra definition must be a JSON object");
  CHECK(error_of(R"({"generators": []})") == "algebra: missing \"name\"");
  CHECK(error_of(R"({"name": "x"})") == "algebra: missing \"generators\"");
  CHECK(error_of(R"({"name": "x", "generators": ["A", 3]})") ==
        "generators[1]: expected a string");
  CHECK(error_of(R"({"name": "x", "generators": ["A", "B"],
                     "brackets": [{"left": "A", "right": "B", "terms": [{"gen": "Z", "coeff": "1"}]}]})") ==
        "brackets[0].terms[0].gen: unknown generator 'Z'");
  const std::string coeff = error_of(R"({"name": "x", "generators": ["A", "B"],
      "brackets": [{"left": "A", "right": "B", "terms": [{"gen": "A", "coeff": "q + 1"}]}]})");
  CHECK(coeff.find("brackets[0].terms[0].coeff: ") == 0);
  CHECK(error_of(R"({"name": "x", "generators": ["A"], "brackets": [{"left": "A", "right": "A",
      "terms": [{"gen": "A", "coeff": "1"}]}]})")
            .find("brackets[0]: ") == 0);
  CHECK(error_of(R"({"name": "x", "generators": ["A"], "parameters": "w"})") ==
        "parameters: expected an array");
  CHECK(error_of(R"({"name": "x", "generators": ["A"], "metadata": {"k": 1}})") ==
        "metadata.k: expected a string");
  CHECK_THROWS_AS(parse_algebra_file(data("missing.alg")), Error);
}
