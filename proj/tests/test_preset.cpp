#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hnc/errors.hpp"
#include "hnc/preset.hpp"

using namespace hnc;

namespace {

void expect_error_at(const std::string& text, std::size_t line, std::size_t column) {
  try {
    build_presentation(parse_preset(text, "test"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CAPTURE(e.what());
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("every builtin preset loads") {
  for (const auto& name : builtin_preset_names()) {
    CAPTURE(name);
    const auto lp = load_preset(name);
    CHECK(lp.presentation.name() == name);
    CHECK(lp.presentation.has_structure_functions());
    CHECK(!lp.preset.points.empty());
  }
  CHECK(load_preset("so3_r3").presentation.size() == 3);
  CHECK(load_preset("so3_r3").presentation.vars() == std::vector<std::string>{"x", "y", "z"});
  const auto order2 = load_preset("order2_r2");
  CHECK(order2.presentation.size() == 6);
  CHECK(order2.preset.structure_auto);
  CHECK(load_preset("r4_counterexample").presentation.size() == 16);
  CHECK_THROWS(load_preset("no_such_preset"));
}

TEST_CASE("gl_d presets carry the gl_d brackets") {
  const auto p = load_preset("vanishing_origin_3").presentation;
  const auto& c = p.structure_functions();
  // [g12, g23] = g13, [g12, g21] = g11 - g22
  CHECK(c(1, 5, 2) == Polynomial::constant(3, 1));
  CHECK(c(1, 3, 0) == Polynomial::constant(3, 1));
  CHECK(c(1, 3, 4) == Polynomial::constant(3, -1));
  CHECK(vanishing_origin_text(2, "v", "t").find("[g12,g21] = g11 - g22") != std::string::npos);
}

TEST_CASE("malformed presets report line and column") {
  expect_error_at("name: a\nvars: x\ngenerators:\n  g1 = x*d/dy\n", 4, 10);
  expect_error_at("name: a\nvars: x\ngenerators:\n  g1 = x*d/dx +\n", 4, 16);
  expect_error_at("name: a\nvars: x\nbogus: 1\n", 3, 1);
  expect_error_at("name: a\nvars: x\n  g1 = d/dx\n", 3, 3);
  expect_error_at("name: a\nvars: x, y\ngenerators:\n  g1 = d/dx\n  g2 = d/dy\nstructure:\n  [g1,g3] = g2\n", 7, 3);
  expect_error_at("name: a\nvars: x, y\ngenerators:\n  g1 = d/dx\n  g2 = d/dy\nstructure:\n  [g1,g2] = g1.g2\n", 7, 13);
  expect_error_at("# comment\nname: a\nvars: x\ngenerators:\n  g1 = d/dx\npoints:\n  1,,2\n", 7, 3);
  CHECK_THROWS_AS(parse_preset("vars: x\ngenerators:\n  g1 = d/dx\n", "t"), ParseError);
  CHECK_THROWS_AS(parse_preset("name: a\nname: b\n", "t"), ParseError);
}

TEST_CASE("wrong structure functions name the failing bracket") {
  const std::string text =
      "name: bad\nvars: x, y\ngenerators:\n  g1 = d/dx\n  g2 = x*d/dy\nstructure:\n  [g1,g2] = 2*g2\n";
  try {
    build_presentation(parse_preset(text, "t"));
    FAIL("expected an invariant violation");
  } catch (const InvariantViolation& e) {
    CHECK(std::string(e.what()).find("g1") != std::string::npos);
  }
  // the correct bracket [d/dx, x d/dy] = d/dy is not in the span with constant coefficients, but y-free
  const std::string good =
      "name: good\nvars: x, y\ngenerators:\n  g1 = d/dx\n  g2 = x*d/dy\n  g3 = d/dy\nstructure:\n  [g1,g2] = g3\n";
  CHECK_NOTHROW(build_presentation(parse_preset(good, "t")));
}

TEST_CASE("preset files on disk") {
  const auto path = std::filesystem::temp_directory_path() / "hnc_test_line.preset";
  {
    std::ofstream f(path);
    f << "# a line\nname: line\ntag: demo\nvars: s\ngenerators:\n  g1 = s*d/ds\nstructure:\npoints:\n  0\n  2\n";
  }
  const auto lp = load_preset(path.string());
  CHECK(lp.preset.source == path.string());
  CHECK(lp.preset.tag == "demo");
  CHECK(lp.preset.points.size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("scenarios") {
  const auto p = load_preset("so3_r3").presentation;
  const auto s = parse_scenario("s", "a=g1+2*g2 m=1,1,1 T=0.5 steps=200 eta=1,0,0", p);
  CHECK(s.section == RationalVector{1, 2, 0});
  CHECK(s.point == RationalVector{1, 1, 1});
  CHECK(s.duration == 0.5);
  CHECK(s.steps == 200);
  REQUIRE(s.eta.has_value());
  const auto d = parse_scenario("d", "m=0,0,1 a=g3", p);
  CHECK(d.steps == 1000);
  CHECK_FALSE(d.eta.has_value());
  CHECK_THROWS_AS(parse_scenario("e", "a=g3", p), ParseError);
  CHECK_THROWS_AS(parse_scenario("e", "a=x*g3 m=0,0,0", p), ParseError);
  CHECK_THROWS_AS(parse_scenario("e", "a=g3 m=0,0", p), ParseError);
  CHECK_THROWS_AS(parse_scenario("e", "a=g3 m=0,0,0 steps=0", p), ParseError);
  CHECK_THROWS_AS(parse_scenario("e", "a=g3 m=0,0,0 T=x", p), ParseError);
  CHECK_THROWS_AS(parse_scenario("e", "a=g3 m=0,0,0 q=1", p), ParseError);
}

TEST_CASE("the shipped preset files match the builtins") {
  for (const auto& name : builtin_preset_names()) {
    CAPTURE(name);
    std::ifstream f(std::string(HNC_SOURCE_DIR) + "/presets/" + name + ".preset");
    REQUIRE(f);
    std::ostringstream text;
    text << f.rdbuf();
    CHECK(text.str() == builtin_preset_text(name));
  }
}
