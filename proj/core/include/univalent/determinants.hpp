#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "univalent/series.hpp"

namespace univalent {

struct ToeplitzResult {
  std::size_t n = 1;
  std::size_t q = 1;
  Complex value{};
  double abs_value = 0.0;
};

/// T_q(n): determinant of the q x q symmetric Toeplitz matrix whose first row is
/// (a_n, ..., a_{n+q-1}), with a_1 = 1. Cofactor expansion for q <= 4, partial-pivot
/// LU above. Throws InsufficientTruncation when n + q - 1 exceeds the order.
ToeplitzResult toeplitz_det(const TaylorSeries& f, std::size_t n, std::size_t q);

/// Determinant of a dense row-major k x k matrix (cofactor expansion for k <= 4).
Complex determinant(std::vector<Complex> matrix, std::size_t k);

/// a_n^2 - a_{n+1}^2.
Complex t2_closed(const TaylorSeries& f, std::size_t n);

/// a_n^3 - 2 a_{n+1}^2 a_n - a_{n+2}^2 a_n + 2 a_{n+1}^2 a_{n+2}.
Complex t3_closed(const TaylorSeries& f, std::size_t n);

using Functional = std::function<Complex(const TaylorSeries&)>;

/// Registered coefficient functionals:
///   "a2sq_2a3sq_a2a4"  a_2^2 - 2 a_3^2 + a_2 a_4   (T_3(2) = (a_2 - a_4) * this)
///   "a2a4_2a3sq"       a_2 a_4 - 2 a_3^2
///   "a3_2a2sq"         a_3 - 2 a_2^2               (Fekete-Szego at mu = 2)
/// Throws UnknownFunctional otherwise.
Functional functional_library(std::string_view name);

const std::vector<std::string>& functional_names();

}  // namespace univalent
