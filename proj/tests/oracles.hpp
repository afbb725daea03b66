#pragma once

// Reference implementations used to check the library. Each one takes a different
// route to the same quantity: direct sums instead of recursions, Leibniz expansion
// instead of cofactors/LU, series exponentials instead of coefficient recursions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

inline std::vector<cd> cauchy(const std::vector<cd>& a, const std::vector<cd>& b, std::size_t order) {
  std::vector<cd> out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// exp(s) for a series with s[0] == 0, via the derivative identity E' = s' E.
inline std::vector<cd> series_exp(const std::vector<cd>& s, std::size_t order) {
  std::vector<cd> e(order + 1);
  e[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    cd acc = 0.0;
    for (std::size_t k = 1; k <= n && k < s.size(); ++k) acc += static_cast<double>(k) * s[k] * e[n - k];
    e[n] = acc / static_cast<double>(n);
  }
  return e;
}

// c_n of sum_j w_j (1 + e^{i t_j} z) / (1 - e^{i t_j} z) by summing the geometric series.
inline std::vector<cd> caratheodory(const std::vector<std::pair<double, double>>& atoms, std::size_t order) {
  std::vector<cd> c(order + 1);
  c[0] = 1.0;
  for (const auto& [w, t] : atoms) {
    const cd u = std::polar(1.0, t);
    cd power = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
      power *= u;
      c[n] += 2.0 * w * power;
    }
  }
  return c;
}

// log(f(z)/z) = sum_{n>=1} c_n z^n / n for z f'/f = p; returns a_1..a_order.
inline std::vector<cd> starlike(const std::vector<std::pair<double, double>>& atoms, std::size_t order) {
  const auto c = caratheodory(atoms, order);
  std::vector<cd> log_f(order);
  for (std::size_t n = 1; n < order; ++n) log_f[n] = c[n] / static_cast<double>(n);
  return series_exp(log_f, order - 1);
}

// log f'(z) = sum c_n z^n / n for z f''/f' = p - 1.
inline std::vector<cd> convex(const std::vector<std::pair<double, double>>& atoms, std::size_t order) {
  auto fp = starlike(atoms, order);
  for (std::size_t n = 1; n <= order; ++n) fp[n - 1] /= static_cast<double>(n);
  return fp;
}

// Chebyshev U_k through the trigonometric closed form sin((k+1)x)/sin(x), t = cos x.
inline double chebyshev_u(std::size_t k, double t) {
  if (std::abs(t - 1.0) < 1e-12) return static_cast<double>(k + 1);
  if (std::abs(t + 1.0) < 1e-12) return (k % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(k + 1);
  const double x = std::acos(t);
  return std::sin(static_cast<double>(k + 1) * x) / std::sin(x);
}

// Leibniz formula over all permutations; fine for k <= 6.
inline cd leibniz_det(const std::vector<cd>& m, std::size_t k) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  cd total = 0.0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    cd term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < k; ++i) term *= m[i * k + perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// a holds a_1..a_N.
inline cd toeplitz(const std::vector<cd>& a, std::size_t n, std::size_t q) {
  std::vector<cd> m(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const std::size_t d = i > j ? i - j : j - i;
      m[i * q + j] = a[n + d - 1];
    }
  }
  return leibniz_det(m, q);
}

inline std::vector<cd> random_coeffs(std::mt19937_64& rng, std::size_t count, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<cd> out(count);
  for (auto& x : out) x = {u(rng), u(rng)};
  return out;
}

}  // namespace oracle
