#include <doctest.h>

#include <cmath>
#include <numbers>

#include "univalent/determinants.hpp"
#include "univalent/error.hpp"
#include "univalent/search.hpp"
#include "univalent/typically_real.hpp"

using namespace univalent;

namespace {

SearchDomain interval(double lo, double hi, const char* name = "t") { return SearchDomain{{{name, lo, hi, false}}}; }

SearchDomain square() { return SearchDomain{{{"alpha", 0.0, 1.0, false}, {"t", -1.0, 1.0, false}}}; }

}  // namespace

TEST_CASE("grid_search: quartic maximum at t^2 = 3/8") {
  const Objective quartic = [](std::span<const double> x) {
    const double t = x[0];
    return -16 * t * t * t * t + 12 * t * t - 1;
  };
  const auto r = grid_search(quartic, interval(-1, 1), 2001);
  CHECK(r.best.value == doctest::Approx(1.25).epsilon(1e-5));
  CHECK(r.best.params[0] * r.best.params[0] == doctest::Approx(0.375).epsilon(1e-2));
  CHECK(r.evaluations == 2 * 2001);

  const auto refined = refine(quartic, r.best.params, interval(-1, 1));
  CHECK(std::abs(refined.best.value - 1.25) < 1e-9);
  CHECK(refined.best.value >= r.best.value);
}

TEST_CASE("grid_search: minimum of phi is -7 and attained at (0, 0)") {
  const Objective phi = [](std::span<const double> x) { return objective_phi_t23(x[0], x[1]); };
  const auto r = grid_search(phi, square(), 201, Sense::Minimize);
  CHECK(r.best.value == doctest::Approx(-7.0));
  CHECK(r.tie_count > 1);
  // Lexicographic tie-break: the whole alpha = 0 edge ties, t = -1 is the smallest.
  CHECK(r.best.params[0] == 0.0);
  CHECK(r.best.params[1] == -1.0);
  const double zero[] = {0.0, 0.0};
  CHECK(phi(zero) == doctest::Approx(-7.0));
}

TEST_CASE("grid_search: constant objective, budget and resolution guards") {
  const Objective constant = [](std::span<const double>) { return 3.5; };
  const auto r = grid_search(constant, square(), 5);
  CHECK(r.best.value == 3.5);
  CHECK(r.best.params == std::vector<double>{0.0, -1.0});
  CHECK(r.tie_count == 25);
  CHECK(r.ties.size() == 24);

  try {
    static_cast<void>(grid_search(constant, square(), 2));
    FAIL("expected ParamOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParamOutOfRange);
  }
  SearchDomain big;
  for (int i = 0; i < 5; ++i) big.dims.push_back({"x", 0.0, 1.0, false});
  try {
    static_cast<void>(grid_search(constant, big, 100));
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  const SearchDomain empty_box{{{"x", 1.0, 1.0, false}}};
  CHECK_THROWS_AS(empty_box.validate(), Error);
}

TEST_CASE("grid_search: periodic dims exclude the upper end") {
  const SearchDomain circle{{{"theta", 0.0, 2 * std::numbers::pi, true}}};
  const Objective cosine = [](std::span<const double> x) { return std::cos(x[0]); };
  const auto r = grid_search(cosine, circle, 4);
  CHECK(r.evaluations == 2 * 4);
  CHECK(r.best.params[0] == 0.0);
  CHECK(r.tie_count == 1);
}

TEST_CASE("grid_search is deterministic") {
  const Objective f = [](std::span<const double> x) { return std::sin(7 * x[0]) * std::cos(5 * x[1]); };
  const auto a = grid_search(f, square(), 101);
  const auto b = grid_search(f, square(), 101);
  CHECK(a.best.params == b.best.params);
  CHECK(a.best.value == b.best.value);
  REQUIRE(a.top.size() == b.top.size());
  for (std::size_t i = 0; i < a.top.size(); ++i) CHECK(a.top[i].params == b.top[i].params);
}

TEST_CASE("refine") {
  const Objective phi1 = [](std::span<const double> x) { return objective_phi1(x[0]); };
  // Start at the interior critical point t = 0 of phi_1.
  const double zero[] = {0.0};
  const auto r = refine(phi1, zero, interval(-1, 1));
  const double v = r.best.value;
  CHECK((std::abs(v + 1) < 1e-9 || std::abs(v) < 1e-9 || std::abs(v - 8) < 1e-9));

  const Objective bowl = [](std::span<const double> x) { return -(x[0] - 0.3) * (x[0] - 0.3) - (x[1] + 0.2) * (x[1] + 0.2); };
  const double at_opt[] = {0.3, -0.2};
  const auto same = refine(bowl, at_opt, square());
  CHECK(same.best.params[0] == doctest::Approx(0.3));
  CHECK(same.best.params[1] == doctest::Approx(-0.2));
  CHECK(same.best.value == 0.0);

  // Clamped to the box: the optimum of x is on the boundary.
  const Objective linear = [](std::span<const double> x) { return x[0] + x[1]; };
  const double mid[] = {0.5, 0.0};
  const auto edge = refine(linear, mid, square());
  CHECK(edge.best.value == doctest::Approx(2.0));
}

TEST_CASE("multi_start refines from the best cells") {
  const Objective quartic = [](std::span<const double> x) {
    const double t = x[0];
    return -16 * t * t * t * t + 12 * t * t - 1;
  };
  const auto r = multi_start(quartic, interval(-1, 1), 201, Sense::Maximize);
  CHECK(std::abs(r.best.value - 1.25) < 1e-9);
  CHECK(r.best.params[0] < 0.0);  // the negative root is lexicographically smaller
  REQUIRE(!r.ties.empty());
  CHECK(r.ties[0].params[0] == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-6));
  CHECK(capped_resolution(201, 1, 1'000'000) == 201);
  CHECK(capped_resolution(201, 3, 1'000'000) == 100);
  CHECK(capped_resolution(201, 8, 1'000) == 3);
}

TEST_CASE("bound_respecting_sampler") {
  const SeriesObjective t32 = [](const TaylorSeries& f) { return toeplitz_det(f, 2, 3).abs_value; };
  SamplerOptions opts;
  opts.upper = 7.0 / 3.0;
  opts.order = 4;
  const auto empty = bound_respecting_sampler(ClassId::BoundedTurning, t32, 0, 0, opts);
  CHECK(empty.samples == 0);
  CHECK(empty.violations == 0);

  const auto r = bound_respecting_sampler(ClassId::BoundedTurning, t32, 2000, 1, opts);
  CHECK(r.samples == 2000);
  CHECK(r.violations == 0);
  CHECK(r.max_observed <= 7.0 / 3.0 + 1e-9);
  CHECK(r.argmax.has_value());

  opts.upper = 1.0;
  const auto tight = bound_respecting_sampler(ClassId::BoundedTurning, t32, 500, 1, opts);
  CHECK(tight.violations > 0);

  const auto again = bound_respecting_sampler(ClassId::BoundedTurning, t32, 2000, 1, SamplerOptions{7.0 / 3.0, {}, 4, 4, {}});
  CHECK(again.max_observed == r.max_observed);
}
