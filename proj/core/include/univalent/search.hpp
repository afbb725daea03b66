#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "univalent/classes.hpp"

namespace univalent {

struct SearchDim {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  bool wrap = false;  // periodic with period upper - lower
};

struct SearchDomain {
  std::vector<SearchDim> dims;

  /// Throws ParamOutOfRange unless 1 <= dims <= 8 and lower < upper on each.
  void validate() const;
  /// Clamps (or wraps, for periodic dims) a point into the box.
  void project(std::span<double> x) const;
};

enum class Sense { Maximize, Minimize };

using Objective = std::function<double(std::span<const double>)>;

struct SearchPoint {
  std::vector<double> params;
  double value = 0.0;
};

struct GridResult {
  SearchPoint best;                  // lexicographically smallest among ties
  std::vector<SearchPoint> ties;     // other lattice points within kTieTolerance, capped at kMaxTies
  std::size_t tie_count = 0;         // including `best`
  std::vector<SearchPoint> top;      // best `keep_top` lattice points, best first
  std::size_t evaluations = 0;       // two passes over the lattice (optimum, then ties)
};

inline constexpr double kTieTolerance = 1e-9;
inline constexpr std::size_t kMaxTies = 32;
inline constexpr std::size_t kGridPointLimit = 100'000'000;

/// Exhaustive lattice search. Periodic dims use `resolution` points excluding the upper
/// end; other dims use `resolution` points including both ends. Deterministic for a
/// given domain and resolution. Throws ParamOutOfRange when resolution < 3 and
/// BudgetExceeded when resolution^dims exceeds kGridPointLimit.
GridResult grid_search(const Objective& objective, const SearchDomain& domain, std::size_t resolution,
                       Sense sense = Sense::Maximize, std::size_t keep_top = 16);

struct RefineOptions {
  std::optional<std::vector<double>> step;  // initial simplex edge per dim; default 5% of range
  std::size_t max_iterations = 500;
  double min_diameter = 1e-10;
};

struct RefineResult {
  SearchPoint best;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
};

/// Nelder-Mead with reflection 1, expansion 2, contraction 1/2 and shrink 1/2. Vertices
/// are projected into the box. Stops when the simplex diameter drops below min_diameter
/// or after max_iterations; returns the best point seen, never worse than `start`.
RefineResult refine(const Objective& objective, std::span<const double> start, const SearchDomain& domain,
                    Sense sense = Sense::Maximize, const RefineOptions& options = {});

/// Grid search followed by refinement from the best `starts` lattice points. Among final
/// points within kTieTolerance of the optimum the lexicographically smallest wins.
struct MultiStartResult {
  SearchPoint best;
  std::vector<SearchPoint> ties;
  std::size_t evaluations = 0;
  std::size_t resolution = 0;
};

MultiStartResult multi_start(const Objective& objective, const SearchDomain& domain, std::size_t resolution,
                             Sense sense, std::size_t starts = 16);

/// Largest per-dim resolution (<= requested, >= 3) whose lattice fits in `budget` points.
std::size_t capped_resolution(std::size_t requested, std::size_t dims, std::size_t budget);

using SeriesObjective = std::function<double(const TaylorSeries&)>;

struct SamplerResult {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double max_observed = 0.0;
  double min_observed = 0.0;
  std::optional<FunctionSpec> argmax;
  std::optional<FunctionSpec> argmin;
  std::vector<FunctionSpec> near_extremal;  // within 1e-6 of max_observed, capped at 16
};

struct SamplerOptions {
  std::optional<double> upper;  // violation when value > upper + 1e-9
  std::optional<double> lower;  // violation when value < lower - 1e-9
  std::size_t order = 8;
  std::size_t max_atoms = 4;
  std::vector<FunctionSpec> anchors;  // evaluated first, counted against the budget
};

/// Evaluates `functional` on `n_samples` members of `cls` (anchors first, then random
/// members drawn with per-sample seeds derived from `seed`).
SamplerResult bound_respecting_sampler(ClassId cls, const SeriesObjective& functional, std::size_t n_samples,
                                       std::uint64_t seed, const SamplerOptions& options);

/// Random class member spec; circle-measure classes use up to `max_atoms` atoms.
FunctionSpec sample_member(ClassId cls, std::uint64_t seed, std::size_t max_atoms);

}  // namespace univalent
