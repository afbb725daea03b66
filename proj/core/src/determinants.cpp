#include "univalent/determinants.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "univalent/error.hpp"

namespace univalent {

namespace {

void require_coefficients(const TaylorSeries& f, std::size_t last) {
  if (last > f.order()) {
    throw Error(ErrorCode::InsufficientTruncation,
                "needs a_" + std::to_string(last) + " but order is " + std::to_string(f.order()));
  }
}

Complex det2(Complex a, Complex b, Complex c, Complex d) { return a * d - b * c; }

Complex det3(const std::vector<Complex>& m, std::size_t s, std::size_t r0, std::size_t r1, std::size_t r2,
             std::size_t c0, std::size_t c1, std::size_t c2) {
  auto at = [&](std::size_t r, std::size_t c) { return m[r * s + c]; };
  return at(r0, c0) * det2(at(r1, c1), at(r1, c2), at(r2, c1), at(r2, c2)) -
         at(r0, c1) * det2(at(r1, c0), at(r1, c2), at(r2, c0), at(r2, c2)) +
         at(r0, c2) * det2(at(r1, c0), at(r1, c1), at(r2, c0), at(r2, c1));
}

Complex lu_determinant(std::vector<Complex> m, std::size_t k) {
  Complex det{1.0};
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(m[r * k + col]) > std::abs(m[pivot * k + col])) pivot = r;
    }
    if (m[pivot * k + col] == Complex{}) return {};
    if (pivot != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(m[pivot * k + c], m[col * k + c]);
      det = -det;
    }
    const Complex d = m[col * k + col];
    det *= d;
    for (std::size_t r = col + 1; r < k; ++r) {
      const Complex factor = m[r * k + col] / d;
      for (std::size_t c = col; c < k; ++c) m[r * k + c] -= factor * m[col * k + c];
    }
  }
  return det;
}

}  // namespace

Complex determinant(std::vector<Complex> m, std::size_t k) {
  if (m.size() != k * k) throw Error(ErrorCode::IndexError, "matrix size does not match dimension");
  switch (k) {
    case 0: return 1.0;
    case 1: return m[0];
    case 2: return det2(m[0], m[1], m[2], m[3]);
    case 3: return det3(m, 3, 0, 1, 2, 0, 1, 2);
    case 4: {
      Complex acc{};
      const std::size_t cols[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
      for (std::size_t c = 0; c < 4; ++c) {
        const Complex minor = det3(m, 4, 1, 2, 3, cols[c][0], cols[c][1], cols[c][2]);
        acc += (c % 2 == 0 ? 1.0 : -1.0) * m[c] * minor;
      }
      return acc;
    }
    default: return lu_determinant(std::move(m), k);
  }
}

ToeplitzResult toeplitz_det(const TaylorSeries& f, std::size_t n, std::size_t q) {
  if (n == 0 || q == 0) throw Error(ErrorCode::IndexError, "n and q must be >= 1");
  require_coefficients(f, n + q - 1);
  std::vector<Complex> m(q * q);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) m[r * q + c] = f.a(n + (r > c ? r - c : c - r));
  }
  const Complex value = determinant(std::move(m), q);
  return {n, q, value, std::abs(value)};
}

Complex t2_closed(const TaylorSeries& f, std::size_t n) {
  require_coefficients(f, n + 1);
  const Complex x = f.a(n), y = f.a(n + 1);
  return x * x - y * y;
}

Complex t3_closed(const TaylorSeries& f, std::size_t n) {
  require_coefficients(f, n + 2);
  const Complex x = f.a(n), y = f.a(n + 1), w = f.a(n + 2);
  return x * x * x - 2.0 * y * y * x - w * w * x + 2.0 * y * y * w;
}

const std::vector<std::string>& functional_names() {
  static const std::vector<std::string> names{"a2sq_2a3sq_a2a4", "a2a4_2a3sq", "a3_2a2sq"};
  return names;
}

Functional functional_library(std::string_view name) {
  if (name == "a2sq_2a3sq_a2a4") {
    return [](const TaylorSeries& f) {
      require_coefficients(f, 4);
      const Complex a2 = f.a(2), a3 = f.a(3), a4 = f.a(4);
      return a2 * a2 - 2.0 * a3 * a3 + a2 * a4;
    };
  }
  if (name == "a2a4_2a3sq") {
    return [](const TaylorSeries& f) {
      require_coefficients(f, 4);
      return f.a(2) * f.a(4) - 2.0 * f.a(3) * f.a(3);
    };
  }
  if (name == "a3_2a2sq") {
    return [](const TaylorSeries& f) {
      require_coefficients(f, 3);
      return f.a(3) - 2.0 * f.a(2) * f.a(2);
    };
  }
  throw Error(ErrorCode::UnknownFunctional, "'" + std::string(name) + "'");
}

}  // namespace univalent
