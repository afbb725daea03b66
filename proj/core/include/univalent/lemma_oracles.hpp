#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univalent/classes.hpp"
#include "univalent/series.hpp"

namespace univalent {

/// One evaluated inequality lhs <= rhs. slack = rhs - lhs; negative slack is a violation.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::optional<FunctionSpec> witness;
};

BoundCheck make_bound_check(double lhs, double rhs, std::optional<FunctionSpec> witness = {});

/// |c_n| <= 2.
BoundCheck caratheodory_bound(const UnitSeries& p, std::size_t n, std::optional<FunctionSpec> witness = {});

/// |c_n - mu c_k c_{n-k}| <= 2 max{1, |2 mu - 1|}, 1 <= k <= n - 1 (IndexError otherwise).
BoundCheck efraimidis_bound(const UnitSeries& p, Complex mu, std::size_t n, std::size_t k,
                            std::optional<FunctionSpec> witness = {});

/// |b_2 b_4 - b_3^2| <= 1 for starlike g.
BoundCheck janteng_bound(const TaylorSeries& g, std::optional<FunctionSpec> witness = {});

/// |b_3 - lambda b_2^2| <= max{1, |3 - 4 lambda|} for starlike g.
BoundCheck fekete_szego_starlike(const TaylorSeries& g, Complex lambda, std::optional<FunctionSpec> witness = {});

/// |lambda b_n b_m - b_{n+m-1}| <= lambda n m - (n + m - 1) for starlike g; only valid for
/// lambda >= 2 (n + m - 1) / (n m), otherwise throws LambdaBelowThreshold.
BoundCheck ma_bound(const TaylorSeries& g, double lambda, std::size_t n, std::size_t m,
                    std::optional<FunctionSpec> witness = {});

/// |a_2 a_4 - 2 a_3^2| <= 21/2 for close-to-convex f.
BoundCheck k_class_functional_bound(const TaylorSeries& f, std::optional<FunctionSpec> witness = {});

/// Summary of one oracle evaluated on many sampled class members.
struct LemmaSweep {
  std::string lemma;
  std::size_t samples = 0;
  std::size_t violations = 0;  // slack < -tolerance
  double min_slack = 0.0;
  std::optional<FunctionSpec> tightest_witness;
};

inline constexpr double kOracleTolerance = 1e-9;

/// Evaluates every oracle on `samples` random members (per-sample seeds derived from `seed`).
/// Sampling: up to 4 Herglotz atoms, angles uniform, weights from a flat simplex.
std::vector<LemmaSweep> sweep_lemmas(std::size_t samples, std::uint64_t seed);

}  // namespace univalent
