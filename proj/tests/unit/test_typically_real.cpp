#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "univalent/determinants.hpp"
#include "univalent/error.hpp"
#include "univalent/sampling.hpp"
#include "univalent/typically_real.hpp"

using namespace univalent;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::MalformedSpec;
}

}  // namespace

TEST_CASE("chebyshev_u") {
  for (double t : {-1.0, -0.7, -0.2, 0.0, 0.3, 0.5, 0.99, 1.0}) {
    CHECK(chebyshev_u(1, t) == doctest::Approx(2 * t));
    CHECK(chebyshev_u(2, t) == doctest::Approx(4 * t * t - 1));
    for (std::size_t k = 0; k < 12; ++k) CHECK(std::abs(chebyshev_u(k, t) - oracle::chebyshev_u(k, t)) < 1e-11);
  }
  for (std::size_t n = 1; n < 10; ++n) CHECK(chebyshev_u(n - 1, 1.0) == static_cast<double>(n));
  CHECK(chebyshev_u(3, 0.5) == doctest::Approx(-1.0));
  CHECK(code_of([] { chebyshev_u(2, 1.1); }) == ErrorCode::DomainError);
  // U_k''(1) against a central difference of the recurrence.
  for (std::size_t k = 2; k < 8; ++k) {
    const double h = 1e-4;
    const double d2 = (chebyshev_u(k, 1.0) - 2 * chebyshev_u(k, 1.0 - h) + chebyshev_u(k, 1.0 - 2 * h)) / (h * h);
    CHECK(chebyshev_u_second_derivative_at_one(k) == doctest::Approx(d2).epsilon(1e-2));
  }
}

TEST_CASE("typically_real_coeffs") {
  const auto k1 = typically_real_coeffs(RobertsonMeasure::point(1.0), 10);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(k1.a(n) == Complex{static_cast<double>(n)});
  const auto odd = typically_real_coeffs(RobertsonMeasure({{0.5, 1.0}, {0.5, -1.0}}), 10);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(std::abs(odd.a(n) - (n % 2 == 1 ? double(n) : 0.0)) < 1e-12);
  // k(z, t) = z / (1 - 2tz + z^2) by series division.
  const double t = 0.37;
  const auto kt = typically_real_coeffs(RobertsonMeasure::point(t), 10);
  const auto ref = ps_div(Coeffs{0.0, 1.0}, Coeffs{1.0, -2.0 * t, 1.0}, 10);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(std::abs(kt.a(n) - ref[n]) < 1e-12);
}

TEST_CASE("two_atom_family") {
  for (double alpha : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const auto f = two_atom_family(alpha, 1.0, -1.0, 4);
    CHECK(f.a(2).real() == doctest::Approx(4 * alpha - 2));
    CHECK(f.a(3).real() == doctest::Approx(3.0));
    CHECK(f.a(4).real() == doctest::Approx(8 * alpha - 4));
  }
  const auto k = two_atom_family(1.0, 0.3, -0.8, 6);
  const auto ref = typically_real_coeffs(RobertsonMeasure::point(0.3), 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(std::abs(k.a(n) - ref.a(n)) < 1e-15);
  const auto half = two_atom_family(0.5, 1.0, -1.0, 8);
  for (std::size_t n = 1; n <= 7; ++n) {
    const double d = static_cast<double>(n);
    CHECK(t2_closed(half, n).real() == doctest::Approx(n % 2 == 1 ? d * d : -(d + 1) * (d + 1)));
  }
  CHECK(code_of([] { two_atom_family(1.5, 0.0, 0.0, 4); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { two_atom_family(0.5, 0.0, -1.2, 4); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("objective closed forms") {
  CHECK(objective_phi_t23(0.0, 0.0) == doctest::Approx(-7.0));
  CHECK(objective_phi_t23(1.0, 1.0) == doctest::Approx(-7.0));
  CHECK(objective_phi1(1.0) == doctest::Approx(8.0));
  CHECK(objective_phi1(-1.0) == doctest::Approx(8.0));
  CHECK(objective_phi1(0.5) == doctest::Approx(-1.0));
  CHECK(objective_phi1(-0.5) == doctest::Approx(-1.0));
  CHECK(objective_phi1(0.0) == 0.0);
  CHECK(objective_psi1(0.0) == doctest::Approx(8.0));
  CHECK(objective_psi1(0.5) == doctest::Approx(-8.0));
  CHECK(code_of([] { objective_psi1(-0.1); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([] { objective_phi_t23(0.5, 2.0); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("property: closed forms agree with the determinant pipeline on dense grids") {
  const std::size_t grid = 201;
  for (std::size_t i = 0; i < grid; ++i) {
    const double alpha = static_cast<double>(i) / (grid - 1);
    const double s = -1.0 + 2.0 * static_cast<double>(i) / (grid - 1);
    CHECK(std::abs(objective_psi1(alpha) - t3_closed(two_atom_family(alpha, 1.0, -1.0, 3), 1).real()) < 1e-12);
    CHECK(std::abs(objective_phi1(s) - toeplitz_det(two_atom_family(1.0, s, 0.0, 3), 1, 3).value.real()) < 1e-12);
    for (std::size_t j = 0; j < grid; j += 5) {
      const double t = -1.0 + 2.0 * static_cast<double>(j) / (grid - 1);
      const double phi = objective_phi_t23(alpha, t);
      CHECK(std::abs(phi - t2_closed(two_atom_family(alpha, t, -1.0, 4), 3).real()) < 1e-12);
      // The mirrored family F(z, alpha, t, 1) gives phi(alpha, -t).
      CHECK(std::abs(objective_phi_t23(alpha, -t) - t2_closed(two_atom_family(alpha, t, 1.0, 4), 3).real()) < 1e-12);
    }
  }
}

TEST_CASE("convex_hull") {
  const auto square = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}});
  REQUIRE(square.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& a = square[i];
    const auto& b = square[(i + 1) % 4];
    const auto& c = square[(i + 2) % 4];
    CHECK((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0.0);
  }
  CHECK(convex_hull({{0, 0}, {1, 1}, {2, 2}}).size() == 2);
  CHECK(convex_hull({{0, 0}, {0, 0}}).size() == 1);
}

TEST_CASE("region_hull") {
  const auto a23 = region_hull(2, 3);
  CHECK(a23.contains({2.0, 3.0}));
  CHECK(a23.contains({-2.0, 3.0}));
  CHECK(a23.contains({0.0, -1.0}, 1e-9 + a23.chord_error));
  CHECK(a23.contains({0.0, 1.0}));
  CHECK_FALSE(a23.contains({0.0, 3.1}));
  CHECK_FALSE(a23.contains({1.0, -1.0}));
  for (double t = -1.0; t <= 1.0; t += 0.01) CHECK(a23.contains({2 * t, 4 * t * t - 1}, 1e-9 + a23.chord_error));

  const auto diag = region_hull(3, 3);
  CHECK(diag.vertices.size() == 2);
  CHECK(diag.contains({1.0, 1.0}));
  CHECK_FALSE(diag.contains({1.0, 1.5}));

  CHECK(code_of([] { region_hull(2, 3, 10); }) == ErrorCode::ParamOutOfRange);
  CHECK(a23.to_csv().find("2,3\n") != std::string::npos);
}

TEST_CASE("property: sampled measures stay inside the hulls and within coefficient bounds") {
  Rng rng(0);
  const auto a23 = region_hull(2, 3, 20001);
  const auto a34 = region_hull(3, 4, 20001);
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto f = typically_real_coeffs(sample_robertson(rng, 4), 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(std::abs(f.a(n)) <= static_cast<double>(n) + 1e-9);
    CHECK(a23.contains({f.a(2).real(), f.a(3).real()}, 1e-9 + a23.chord_error));
    CHECK(a34.contains({f.a(3).real(), f.a(4).real()}, 1e-9 + a34.chord_error));
    for (std::size_t n = 2; n <= 6; ++n) {
      const double t2 = t2_closed(f, n).real();
      const double d = static_cast<double>(n);
      CHECK(t2 <= d * d + 1e-9);
      CHECK(t2 >= -(d + 1) * (d + 1) - 1e-9);
    }
  }
}

TEST_CASE("boundary_family_points lie in the hulls") {
  const auto a23 = region_hull(2, 3, 20001);
  const auto a34 = region_hull(3, 4, 20001);
  const auto p23 = boundary_family_points("A23", 101);
  CHECK(p23.size() == 202);
  for (const auto& p : p23) CHECK(a23.contains(p.point, 1e-9 + a23.chord_error));
  const auto p34 = boundary_family_points("A34", 41);
  CHECK(p34.size() == 2 * 41 * 41);
  for (const auto& p : p34) CHECK(a34.contains(p.point, 1e-9 + a34.chord_error));
  CHECK(code_of([] { boundary_family_points("A45", 10); }) == ErrorCode::UnknownLemmaId);
}
