#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "paracurv/catalog.hpp"
#include "paracurv/errors.hpp"

using namespace paracurv;
using nlohmann::json;

namespace {

json template_model() {
  return json{{"name", "t"},
              {"dim", 3},
              {"structure_constants", json::array({json::array({1, 2, 3, 2})})},
              {"metric", {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}},
              {"phi", {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}},
              {"xi", {0, 0, 1}},
              {"eta", {0, 0, 1}}};
}

ModelSpec parse_json(const json& j) { return parse_model(j.dump()); }

}  // namespace

TEST_CASE("builtin catalog") {
  CHECK(builtin_names() ==
        std::vector<std::string>{"paper_example", "para_heisenberg", "abelian_flat"});
  CHECK_THROWS_AS(builtin("nope"), UnknownModelError);
  const ModelSpec m = builtin("paper_example");
  CHECK(m.dim == 3);
  REQUIRE(m.structure_constants.size() == 3);
  CHECK(m.structure_constants[0].i == 1);
  CHECK(m.structure_constants[0].j == 2);
  CHECK(m.structure_constants[0].k == 3);
  CHECK(m.structure_constants[0].value == Rational(2));
}

TEST_CASE("canonical serialization is a fixed point of parse") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const std::string text = canonical_model(builtin(name));
    CHECK(canonical_model(parse_model(text)) == text);
  }
}

TEST_CASE("export then load reproduces the exact bytes") {
  const auto path = std::filesystem::temp_directory_path() / "paracurv_roundtrip.json";
  for (const auto& name : builtin_names()) {
    INFO(name);
    const std::string text = canonical_model(builtin(name));
    std::ofstream(path, std::ios::binary) << text;
    CHECK(canonical_model(load_model(path.string())) == text);
  }
  std::filesystem::remove(path);
}

TEST_CASE("rationals parse as integers or p/q strings") {
  json j = template_model();
  j["metric"][0][0] = "1/2";
  j["structure_constants"][0][3] = "-4/6";
  const ModelSpec m = parse_json(j);
  CHECK(m.metric(0, 0) == Rational(1, 2));
  CHECK(m.structure_constants[0].value == Rational(-2, 3));

  j["xi"][2] = "3/0";
  CHECK_THROWS_AS(parse_json(j), ParseError);
}

TEST_CASE("brackets normalize through antisymmetry") {
  json j = template_model();
  j["structure_constants"] = json::array({json::array({2, 1, 3, "-2"})});
  const ModelSpec m = parse_json(j);
  REQUIRE(m.structure_constants.size() == 1);
  CHECK(m.structure_constants[0].i == 1);
  CHECK(m.structure_constants[0].j == 2);
  CHECK(m.structure_constants[0].value == Rational(2));
}

TEST_CASE("restating a bracket coefficient is rejected") {
  json j = template_model();
  j["structure_constants"] =
      json::array({json::array({1, 2, 3, 2}), json::array({2, 1, 3, 2})});
  CHECK_THROWS_AS(parse_json(j), DuplicateEntryError);
}

TEST_CASE("zero coefficients are dropped") {
  json j = template_model();
  j["structure_constants"] = json::array({json::array({1, 2, 3, 0})});
  CHECK(parse_json(j).structure_constants.empty());
}

TEST_CASE("malformed models are rejected") {
  CHECK_THROWS_AS(parse_model("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_model("[1,2,3]"), ParseError);

  {
    json j = template_model();
    j["comment"] = "x";
    CHECK_THROWS_AS(parse_json(j), ParseError);
  }
  {
    json j = template_model();
    j.erase("eta");
    CHECK_THROWS_AS(parse_json(j), ParseError);
  }
  {
    json j = template_model();
    j["dim"] = "3";
    CHECK_THROWS_AS(parse_json(j), ParseError);
  }
  {
    json j = template_model();
    j["structure_constants"] = json::array({json::array({1, 1, 2, 1})});
    CHECK_THROWS_AS(parse_json(j), ParseError);
  }
  {
    json j = template_model();
    j["structure_constants"] = json::array({json::array({1, 2, 9, 1})});
    CHECK_THROWS_AS(parse_json(j), ParseError);
  }
  {
    json j = template_model();
    j["metric"][0][1] = 5;  // breaks symmetry
    CHECK_THROWS_AS(parse_json(j), ParseError);
  }
  {
    json j = template_model();
    j["xi"] = {0, 1};
    CHECK_THROWS_AS(parse_json(j), DimensionMismatchError);
  }
  {
    json j = template_model();
    j["metric"][1] = {0, -1};
    CHECK_THROWS_AS(parse_json(j), DimensionMismatchError);
  }
}

TEST_CASE("loading a missing file is a parse error") {
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ParseError);
}

TEST_CASE("frame_of antisymmetrizes the structure constants") {
  const FrameManifold f = frame_of(builtin("paper_example"));
  CHECK(f.c(2, 0, 1) == Rational(2));
  CHECK(f.c(2, 1, 0) == Rational(-2));
  CHECK(f.c(1, 0, 2) == Rational(2));
  CHECK(f.c(0, 1, 2) == Rational(2));
  CHECK(f.c(0, 0, 1).is_zero());
}

TEST_CASE("structure_of carries the triple verbatim") {
  const ParacontactStructure s = structure_of(builtin("para_heisenberg"));
  CHECK(s.phi(1, 0) == Rational(1));
  CHECK(s.phi(0, 1) == Rational(1));
  CHECK(s.phi(2, 2).is_zero());
  CHECK(s.xi == Vec{0, 0, 1});
  CHECK(s.eta == Vec{0, 0, 1});
}
