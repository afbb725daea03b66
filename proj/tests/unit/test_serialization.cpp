#include <doctest.h>

#include <fstream>
#include <numbers>
#include <sstream>

#include "univalent/classes.hpp"
#include "univalent/error.hpp"
#include "univalent/serialization.hpp"

using namespace univalent;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(UNIVALENT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<FunctionSpec> sample_specs() {
  return {
      NamedFunction{"starlike_extremal", 0.0},
      NamedFunction{"koebe_rotation", 0.5},
      StarlikeSpec{HerglotzAtoms({{0.25, 0.5}, {0.75, 3.0}})},
      ConvexSpec{HerglotzAtoms::point(1.5)},
      BoundedTurningSpec{HerglotzAtoms::point(0.0)},
      CloseToConvexSpec{HerglotzAtoms::point(0.25), -0.5, HerglotzAtoms({{0.5, 1.0}, {0.5, 2.0}})},
      TypicallyRealSpec{RobertsonMeasure({{0.5, 1.0}, {0.5, -1.0}})},
  };
}

ErrorCode parse_error(std::string_view text) {
  try {
    static_cast<void>(function_spec_from_json(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return ErrorCode::MalformedSpec;
}

}  // namespace

TEST_CASE("FunctionSpec JSON matches the golden layout") {
  std::string all;
  for (const auto& s : sample_specs()) all += to_json(s) + "\n";
  CHECK(all == read_golden("function_specs.jsonl"));
}

TEST_CASE("FunctionSpec JSON round-trips") {
  for (const auto& s : sample_specs()) {
    const auto text = to_json(s);
    const auto back = function_spec_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(back.index() == s.index());
    const auto f = build(s, 6), g = build(back, 6);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(f.a(n) == g.a(n));
  }
}

TEST_CASE("FunctionSpec JSON errors") {
  CHECK(parse_error("{") == ErrorCode::MalformedSpec);
  CHECK(parse_error("[]") == ErrorCode::MalformedSpec);
  CHECK(parse_error(R"({"atoms": [[1, 0]]})") == ErrorCode::MalformedSpec);
  CHECK(parse_error(R"({"variant": "spiral"})") == ErrorCode::MalformedSpec);
  CHECK(parse_error(R"({"variant": "starlike"})") == ErrorCode::MalformedSpec);
  CHECK(parse_error(R"({"variant": "starlike", "atoms": [[1]]})") == ErrorCode::MalformedSpec);
  CHECK(parse_error(R"({"variant": "starlike", "atoms": [[1, 0]], "alpha": 0})") == ErrorCode::MalformedSpec);
  CHECK(parse_error(R"({"variant": "starlike", "atoms": [[0.5, 0]]})") == ErrorCode::InvalidMeasure);
  CHECK(parse_error(R"({"variant": "typically_real", "atoms": [[1, 2]]})") == ErrorCode::InvalidMeasure);
  CHECK(parse_error(R"({"variant": "named", "named_id": "spiral_map"})") == ErrorCode::UnknownFunctionId);
  CHECK(parse_error(R"({"variant": "close_to_convex", "atoms": [[1, 0]], "alpha": 0})") == ErrorCode::MissingGenerator);
  CHECK(parse_error(R"({"variant": "close_to_convex", "atoms": [[1, 0]], "alpha": 2, "generator_atoms": [[1, 0]]})") ==
        ErrorCode::AlphaOutOfRange);
}
