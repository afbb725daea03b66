#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace univalent {

using Complex = std::complex<double>;

// Index convention, used everywhere in the library:
//   * Coeffs (raw power series): c[k] multiplies z^k, so c[0] is the constant term.
//   * TaylorSeries: coeffs()[0] stores a_1, i.e. a(n) == coeffs()[n - 1].
//   * UnitSeries:   coeffs()[0] stores c_0 == 1, i.e. c(n) == coeffs()[n].
using Coeffs = std::vector<Complex>;

/// Truncation f(z) = a_1 z + a_2 z^2 + ... + a_N z^N of an analytic function with f(0) = 0.
class TaylorSeries {
 public:
  /// coeffs holds a_1..a_N; must be non-empty and finite.
  explicit TaylorSeries(std::vector<Complex> coeffs);

  /// Builds from a power-indexed series, discarding the constant term; keeps orders 1..N.
  static TaylorSeries from_power_coeffs(std::span<const Complex> power, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }

  /// 1-based coefficient a_n; throws InsufficientTruncation when n > order().
  Complex a(std::size_t n) const;

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Power-indexed copy [0, a_1, ..., a_N].
  Coeffs power_coeffs() const;

  TaylorSeries conj() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Truncation p(z) = 1 + c_1 z + ... + c_N z^N of a function normalised by p(0) = 1.
class UnitSeries {
 public:
  /// coeffs holds c_0..c_N with c_0 == 1 exactly.
  explicit UnitSeries(std::vector<Complex> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  Complex c(std::size_t n) const;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

// Raw series arithmetic. Inputs shorter than N + 1 are treated as polynomials
// (missing coefficients are zero); results always have N + 1 entries.

/// Cauchy product through order N.
Coeffs ps_mul(std::span<const Complex> a, std::span<const Complex> b, std::size_t order);

/// Quotient q with q * b == a through order N. Throws DivisionByZeroLeadingTerm when |b_0| < 1e-14.
Coeffs ps_div(std::span<const Complex> a, std::span<const Complex> b, std::size_t order);

/// f'(z): result[k] = (k + 1) a[k + 1].
Coeffs ps_derivative(std::span<const Complex> a, std::size_t order);

/// z f'(z): result[k] = k a[k].
Coeffs ps_z_derivative(std::span<const Complex> a, std::size_t order);

inline constexpr double kMaxEvalRadius = 0.95;

/// Horner evaluation of the truncated polynomial. Throws EvalRadiusExceeded when |z| > 0.95.
Complex ps_eval(std::span<const Complex> a, Complex z);

/// Upper bound for the dropped tail sum_{n>N} |a_n| r^n assuming |a_n| <= growth * n.
double truncation_tail_bound(std::size_t order, double radius, double growth = 1.0);

}  // namespace univalent
