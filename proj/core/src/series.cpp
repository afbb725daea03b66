#include "univalent/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "univalent/error.hpp"

namespace univalent {

namespace {

bool all_finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

Complex at(std::span<const Complex> a, std::size_t k) { return k < a.size() ? a[k] : Complex{}; }

}  // namespace

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InsufficientTruncation, "TaylorSeries needs order >= 1");
  if (!all_finite(coeffs_)) throw Error(ErrorCode::DomainError, "TaylorSeries coefficient is not finite");
}

TaylorSeries TaylorSeries::from_power_coeffs(std::span<const Complex> power, std::size_t order) {
  std::vector<Complex> out(order);
  for (std::size_t n = 1; n <= order; ++n) out[n - 1] = at(power, n);
  return TaylorSeries(std::move(out));
}

Complex TaylorSeries::a(std::size_t n) const {
  if (n == 0 || n > coeffs_.size()) {
    throw Error(ErrorCode::InsufficientTruncation,
                "a_" + std::to_string(n) + " requested from series of order " + std::to_string(order()));
  }
  return coeffs_[n - 1];
}

Coeffs TaylorSeries::power_coeffs() const {
  Coeffs out(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return out;
}

TaylorSeries TaylorSeries::conj() const {
  std::vector<Complex> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](Complex c) { return std::conj(c); });
  return TaylorSeries(std::move(out));
}

UnitSeries::UnitSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_[0] != Complex{1.0, 0.0}) {
    throw Error(ErrorCode::DomainError, "UnitSeries requires c_0 == 1");
  }
  if (!all_finite(coeffs_)) throw Error(ErrorCode::DomainError, "UnitSeries coefficient is not finite");
}

Complex UnitSeries::c(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw Error(ErrorCode::InsufficientTruncation,
                "c_" + std::to_string(n) + " requested from series of order " + std::to_string(order()));
  }
  return coeffs_[n];
}

Coeffs ps_mul(std::span<const Complex> a, std::span<const Complex> b, std::size_t order) {
  Coeffs out(order + 1);
  const std::size_t na = std::min(a.size(), order + 1);
  const std::size_t nb = std::min(b.size(), order + 1);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == Complex{}) continue;
    const std::size_t jmax = std::min(nb, order + 1 - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Coeffs ps_div(std::span<const Complex> a, std::span<const Complex> b, std::size_t order) {
  const Complex b0 = at(b, 0);
  if (std::abs(b0) < 1e-14) {
    throw Error(ErrorCode::DivisionByZeroLeadingTerm, "divisor has vanishing constant term");
  }
  Coeffs q(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = at(a, n);
    const std::size_t kmax = std::min(n, b.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) acc -= b[k] * q[n - k];
    q[n] = acc / b0;
  }
  return q;
}

Coeffs ps_derivative(std::span<const Complex> a, std::size_t order) {
  Coeffs out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) out[k] = static_cast<double>(k + 1) * at(a, k + 1);
  return out;
}

Coeffs ps_z_derivative(std::span<const Complex> a, std::size_t order) {
  Coeffs out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) out[k] = static_cast<double>(k) * at(a, k);
  return out;
}

Complex ps_eval(std::span<const Complex> a, Complex z) {
  if (std::abs(z) > kMaxEvalRadius) {
    throw Error(ErrorCode::EvalRadiusExceeded, "|z| = " + std::to_string(std::abs(z)) + " exceeds 0.95");
  }
  Complex acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double truncation_tail_bound(std::size_t order, double radius, double growth) {
  // sum_{n>N} n r^n = r^{N+1} ((N + 1) - N r) / (1 - r)^2
  const double n = static_cast<double>(order);
  const double r = radius;
  return growth * std::pow(r, n + 1.0) * ((n + 1.0) - n * r) / ((1.0 - r) * (1.0 - r));
}

}  // namespace univalent
