#include "univalent/lemma_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "univalent/error.hpp"
#include "univalent/sampling.hpp"

namespace univalent {

BoundCheck make_bound_check(double lhs, double rhs, std::optional<FunctionSpec> witness) {
  return {lhs, rhs, rhs - lhs, std::move(witness)};
}

BoundCheck caratheodory_bound(const UnitSeries& p, std::size_t n, std::optional<FunctionSpec> witness) {
  if (n == 0) throw Error(ErrorCode::IndexError, "n must be >= 1");
  return make_bound_check(std::abs(p.c(n)), 2.0, std::move(witness));
}

BoundCheck efraimidis_bound(const UnitSeries& p, Complex mu, std::size_t n, std::size_t k,
                            std::optional<FunctionSpec> witness) {
  if (k < 1 || k + 1 > n) throw Error(ErrorCode::IndexError, "need 1 <= k <= n - 1");
  const double lhs = std::abs(p.c(n) - mu * p.c(k) * p.c(n - k));
  const double rhs = 2.0 * std::max(1.0, std::abs(2.0 * mu - 1.0));
  return make_bound_check(lhs, rhs, std::move(witness));
}

BoundCheck janteng_bound(const TaylorSeries& g, std::optional<FunctionSpec> witness) {
  return make_bound_check(std::abs(g.a(2) * g.a(4) - g.a(3) * g.a(3)), 1.0, std::move(witness));
}

BoundCheck fekete_szego_starlike(const TaylorSeries& g, Complex lambda, std::optional<FunctionSpec> witness) {
  const double lhs = std::abs(g.a(3) - lambda * g.a(2) * g.a(2));
  const double rhs = std::max(1.0, std::abs(3.0 - 4.0 * lambda));
  return make_bound_check(lhs, rhs, std::move(witness));
}

BoundCheck ma_bound(const TaylorSeries& g, double lambda, std::size_t n, std::size_t m,
                    std::optional<FunctionSpec> witness) {
  if (n < 2 || m < 2) throw Error(ErrorCode::IndexError, "need n, m >= 2");
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  const double gate = 2.0 * (dn + dm - 1.0) / (dn * dm);
  if (lambda < gate) {
    throw Error(ErrorCode::LambdaBelowThreshold,
                "lambda = " + std::to_string(lambda) + " below " + std::to_string(gate));
  }
  const double lhs = std::abs(lambda * g.a(n) * g.a(m) - g.a(n + m - 1));
  return make_bound_check(lhs, lambda * dn * dm - (dn + dm - 1.0), std::move(witness));
}

BoundCheck k_class_functional_bound(const TaylorSeries& f, std::optional<FunctionSpec> witness) {
  return make_bound_check(std::abs(f.a(2) * f.a(4) - 2.0 * f.a(3) * f.a(3)), 10.5, std::move(witness));
}

namespace {

struct Oracle {
  std::string name;
  // Returns the check for one random draw from `rng`.
  std::function<BoundCheck(Rng&)> draw;
};

std::vector<Oracle> oracles() {
  constexpr std::size_t kAtoms = 4;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  auto random_mu = [](Rng& rng) { return std::polar(rng.uniform(0.0, 3.0), rng.uniform(0.0, kTwoPi)); };
  return {
      {"caratheodory",
       [](Rng& rng) {
         auto h = sample_herglotz(rng, kAtoms);
         const auto n = rng.index(1, 8);
         return caratheodory_bound(caratheodory_coeffs(h, 8), n, StarlikeSpec{h});
       }},
      {"efraimidis",
       [random_mu](Rng& rng) {
         auto h = sample_herglotz(rng, kAtoms);
         const auto n = rng.index(2, 6);
         const auto k = rng.index(1, n - 1);
         return efraimidis_bound(caratheodory_coeffs(h, 6), random_mu(rng), n, k, StarlikeSpec{h});
       }},
      {"janteng",
       [](Rng& rng) {
         auto h = sample_herglotz(rng, kAtoms);
         return janteng_bound(starlike_from_caratheodory(h, 4), StarlikeSpec{h});
       }},
      {"fekete_szego_starlike",
       [random_mu](Rng& rng) {
         auto h = sample_herglotz(rng, kAtoms);
         return fekete_szego_starlike(starlike_from_caratheodory(h, 3), random_mu(rng), StarlikeSpec{h});
       }},
      {"ma",
       [](Rng& rng) {
         auto h = sample_herglotz(rng, kAtoms);
         const auto n = rng.index(2, 3);
         const auto m = rng.index(2, 3);
         const double gate = 2.0 * static_cast<double>(n + m - 1) / static_cast<double>(n * m);
         const double lambda = gate + rng.uniform(0.0, 3.0);
         return ma_bound(starlike_from_caratheodory(h, n + m - 1), lambda, n, m, StarlikeSpec{h});
       }},
      {"k_class_functional",
       [](Rng& rng) {
         auto g = sample_herglotz(rng, kAtoms);
         const double alpha = rng.uniform(-0.5, 0.5) * std::numbers::pi * (1.0 - 1e-9);
         auto p = sample_herglotz(rng, kAtoms);
         const auto f = close_to_convex_from(g, alpha, p, 4);
         return k_class_functional_bound(f, CloseToConvexSpec{g, alpha, p});
       }},
  };
}

}  // namespace

std::vector<LemmaSweep> sweep_lemmas(std::size_t samples, std::uint64_t seed) {
  std::vector<LemmaSweep> out;
  std::uint64_t stream = 0;
  for (const auto& oracle : oracles()) {
    LemmaSweep sweep{oracle.name, samples, 0, std::numeric_limits<double>::infinity(), std::nullopt};
    for (std::size_t i = 0; i < samples; ++i) {
      Rng rng(derive_seed(seed, stream * 0x100000000ULL + i));
      auto check = oracle.draw(rng);
      if (check.slack < -kOracleTolerance) ++sweep.violations;
      if (check.slack < sweep.min_slack) {
        sweep.min_slack = check.slack;
        sweep.tightest_witness = std::move(check.witness);
      }
    }
    if (samples == 0) sweep.min_slack = 0.0;
    out.push_back(std::move(sweep));
    ++stream;
  }
  return out;
}

}  // namespace univalent
