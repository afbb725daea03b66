#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "univalent/classes.hpp"
#include "univalent/determinants.hpp"
#include "univalent/error.hpp"

using namespace univalent;

namespace {

const Complex I{0.0, 1.0};

TaylorSeries koebe(std::size_t order) { return named_function("koebe", order); }

TaylorSeries random_series(std::mt19937_64& rng, std::size_t order, bool real = false) {
  auto c = oracle::random_coeffs(rng, order, 3.0);
  c[0] = 1.0;
  if (real) {
    for (auto& x : c) x = x.real();
  }
  return TaylorSeries(c);
}

}  // namespace

TEST_CASE("toeplitz_det examples") {
  const auto s = named_function("starlike_extremal", 8);
  const auto t22 = toeplitz_det(s, 2, 2);
  CHECK(std::abs(t22.value + 13.0) < 1e-12);
  CHECK(t22.abs_value == doctest::Approx(13.0));

  CHECK(std::abs(toeplitz_det(named_function("identity", 4), 1, 3).value - 1.0) < 1e-15);

  const auto k = koebe(8);
  CHECK(std::abs(toeplitz_det(k, 2, 3).value - 12.0) < 1e-12);
  CHECK(std::abs(toeplitz_det(s, 2, 3).value + 84.0 * I) < 1e-12);
  CHECK(toeplitz_det(s, 1, 3).abs_value == doctest::Approx(24.0));

  try {
    static_cast<void>(toeplitz_det(k, 6, 4));
    FAIL("expected InsufficientTruncation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientTruncation);
  }
  CHECK_THROWS_AS(static_cast<void>(toeplitz_det(k, 0, 2)), Error);
}

TEST_CASE("closed forms on Koebe and -log(1 - z)") {
  const auto k = koebe(16);
  const auto log_map = named_function("log_map", 16);
  for (std::size_t n = 1; n <= 8; ++n) {
    const double d = static_cast<double>(n);
    CHECK(std::abs(t2_closed(k, n) + (2.0 * d + 1.0)) < 1e-12);
    CHECK(std::abs(t3_closed(k, n) - 4.0 * (d + 1.0)) < 1e-12);
    CHECK(std::abs(t2_closed(log_map, n) - (1.0 / (d * d) - 1.0 / ((d + 1) * (d + 1)))) < 1e-12);
    const double t3 = 4.0 * (d * d + 3.0 * d + 1.0) / (d * d * d * (d + 1) * (d + 1) * (d + 2) * (d + 2));
    CHECK(std::abs(t3_closed(log_map, n) - t3) < 1e-12);
    CHECK(std::abs(toeplitz_det(k, n, 2).value - t2_closed(k, n)) < 1e-12);
    CHECK(std::abs(toeplitz_det(log_map, n, 3).value - t3_closed(log_map, n)) < 1e-12);
  }
  const auto r = named_function("bounded_turning_extremal", 6);
  CHECK(std::abs(std::abs(t2_closed(r, 3)) - 25.0 / 36.0) < 1e-12);
  const auto c = named_function("convex_extremal", 6);
  CHECK(std::abs(std::abs(t3_closed(c, 1)) - 4.0) < 1e-12);
  const Complex a2 = c.a(2), a3 = c.a(3);
  CHECK(std::abs(t3_closed(c, 1) - (1.0 - 2.0 * a2 * a2 + 2.0 * a2 * a2 * a3 - a3 * a3)) < 1e-12);
}

TEST_CASE("functional_library") {
  const auto s = named_function("starlike_extremal", 6);
  CHECK(std::abs(functional_library("a2sq_2a3sq_a2a4")(s)) == doctest::Approx(14.0));
  CHECK(std::abs(functional_library("a2a4_2a3sq")(koebe(6)) + 10.0) < 1e-12);
  CHECK(std::abs(functional_library("a3_2a2sq")(named_function("identity", 4))) < 1e-15);
  try {
    static_cast<void>(functional_library("hankel"));
    FAIL("expected UnknownFunctional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFunctional);
  }
  CHECK(functional_names().size() == 3);
  // T_3(2) factorises through the first functional.
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_series(rng, 6);
    const Complex factored = (f.a(2) - f.a(4)) * functional_library("a2sq_2a3sq_a2a4")(f);
    CHECK(std::abs(toeplitz_det(f, 2, 3).value - factored) < 1e-10);
  }
}

TEST_CASE("property: generic determinant equals closed forms and the Leibniz oracle") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = random_series(rng, 12);
    const std::vector<Complex> a(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t n = 1; n <= 4; ++n) {
      const Complex t2 = toeplitz_det(f, n, 2).value;
      const Complex t3 = toeplitz_det(f, n, 3).value;
      CHECK(std::abs(t2 - t2_closed(f, n)) <= 1e-12 * std::max(1.0, std::abs(t2)));
      CHECK(std::abs(t3 - t3_closed(f, n)) <= 1e-12 * std::max(1.0, std::abs(t3)));
      CHECK(std::abs(t3 - oracle::toeplitz(a, n, 3)) <= 1e-12 * std::max(1.0, std::abs(t3)));
    }
    for (std::size_t q = 4; q <= 6; ++q) {
      const Complex t = toeplitz_det(f, 2, q).value;
      CHECK(std::abs(t - oracle::toeplitz(a, 2, q)) <= 1e-10 * std::max(1.0, std::abs(t)));
    }
  }
}

TEST_CASE("property: real coefficients give real determinants; conjugation commutes") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto real = random_series(rng, 10, true);
    const auto f = random_series(rng, 10);
    for (std::size_t q = 2; q <= 5; ++q) {
      CHECK(std::abs(toeplitz_det(real, 2, q).value.imag()) <= 1e-12);
      const Complex t = toeplitz_det(f, 2, q).value;
      CHECK(std::abs(toeplitz_det(f.conj(), 2, q).value - std::conj(t)) <= 1e-12 * std::max(1.0, std::abs(t)));
    }
  }
}

TEST_CASE("|T_2(2)| is not rotation invariant") {
  CHECK(toeplitz_det(named_function("koebe_rotation", 4, 0.0), 2, 2).abs_value == doctest::Approx(5.0));
  CHECK(toeplitz_det(named_function("koebe_rotation", 4, std::numbers::pi / 2), 2, 2).abs_value ==
        doctest::Approx(13.0));
}

TEST_CASE("determinant: LU path agrees with cofactors") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_coeffs(rng, 25);
    CHECK(std::abs(determinant(m, 5) - oracle::leibniz_det(m, 5)) < 1e-10);
    const std::vector<Complex> m4(m.begin(), m.begin() + 16);
    CHECK(std::abs(determinant(m4, 4) - oracle::leibniz_det(m4, 4)) < 1e-12);
  }
}
