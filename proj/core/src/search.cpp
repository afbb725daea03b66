#include "univalent/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "univalent/error.hpp"
#include "univalent/parallel.hpp"
#include "univalent/sampling.hpp"

namespace univalent {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Internally every search maximises score = +/- value.
double to_score(double value, Sense sense) {
  if (std::isnan(value)) return kNegInf;
  return sense == Sense::Maximize ? value : -value;
}

struct Scored {
  double score;
  std::size_t index;
};

bool better(const Scored& a, const Scored& b) { return a.score > b.score || (a.score == b.score && a.index < b.index); }

void keep_best(std::vector<Scored>& top, Scored s, std::size_t keep) {
  if (keep == 0) return;
  if (top.size() == keep && !better(s, top.back())) return;
  auto pos = std::upper_bound(top.begin(), top.end(), s, better);
  top.insert(pos, s);
  if (top.size() > keep) top.pop_back();
}

class Lattice {
 public:
  Lattice(const SearchDomain& domain, std::size_t resolution) : domain_(domain), resolution_(resolution) {}

  double coordinate(std::size_t dim, std::size_t k) const {
    const auto& d = domain_.dims[dim];
    if (d.wrap) return d.lower + (d.upper - d.lower) * static_cast<double>(k) / static_cast<double>(resolution_);
    if (k + 1 == resolution_) return d.upper;
    return d.lower + (d.upper - d.lower) * static_cast<double>(k) / static_cast<double>(resolution_ - 1);
  }

  double spacing(std::size_t dim) const {
    const auto& d = domain_.dims[dim];
    return (d.upper - d.lower) / static_cast<double>(d.wrap ? resolution_ : resolution_ - 1);
  }

  void decode(std::size_t index, std::vector<double>& x) const {
    for (std::size_t dim = domain_.dims.size(); dim-- > 0;) {
      x[dim] = coordinate(dim, index % resolution_);
      index /= resolution_;
    }
  }

 private:
  const SearchDomain& domain_;
  std::size_t resolution_;
};

bool lexicographically_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool nearly_same(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-7) return false;
  }
  return true;
}

}  // namespace

void SearchDomain::validate() const {
  if (dims.empty() || dims.size() > 8) throw Error(ErrorCode::ParamOutOfRange, "search domain needs 1..8 dims");
  for (const auto& d : dims) {
    if (!(d.lower < d.upper)) throw Error(ErrorCode::ParamOutOfRange, "dim '" + d.name + "' has lower >= upper");
  }
}

void SearchDomain::project(std::span<double> x) const {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const auto& d = dims[i];
    if (d.wrap) {
      const double period = d.upper - d.lower;
      double r = std::fmod(x[i] - d.lower, period);
      if (r < 0.0) r += period;
      if (r >= period) r = 0.0;
      x[i] = d.lower + r;
    } else {
      x[i] = std::clamp(x[i], d.lower, d.upper);
    }
  }
}

std::size_t capped_resolution(std::size_t requested, std::size_t dims, std::size_t budget) {
  std::size_t r = std::max<std::size_t>(requested, 3);
  auto fits = [&](std::size_t res) {
    double total = 1.0;
    for (std::size_t i = 0; i < dims; ++i) total *= static_cast<double>(res);
    return total <= static_cast<double>(budget);
  };
  while (r > 3 && !fits(r)) --r;
  return r;
}

GridResult grid_search(const Objective& objective, const SearchDomain& domain, std::size_t resolution, Sense sense,
                       std::size_t keep_top) {
  domain.validate();
  if (resolution < 3) throw Error(ErrorCode::ParamOutOfRange, "grid resolution must be >= 3");
  std::size_t total = 1;
  for (std::size_t i = 0; i < domain.dims.size(); ++i) {
    if (total > kGridPointLimit / resolution) {
      throw Error(ErrorCode::BudgetExceeded, "lattice exceeds " + std::to_string(kGridPointLimit) + " points");
    }
    total *= resolution;
  }
  const Lattice lattice(domain, resolution);
  const std::size_t dims = domain.dims.size();
  const std::size_t chunks = worker_count();

  // Pass 1: optimum and top cells.
  std::vector<std::vector<Scored>> tops(chunks);
  parallel_chunks(total, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::vector<double> x(dims);
    auto& top = tops[c];
    for (std::size_t i = begin; i < end; ++i) {
      lattice.decode(i, x);
      keep_best(top, {to_score(objective(x), sense), i}, std::max<std::size_t>(keep_top, 1));
    }
  });
  std::vector<Scored> merged;
  for (const auto& t : tops) {
    for (const auto& s : t) keep_best(merged, s, std::max<std::size_t>(keep_top, 1));
  }
  const double best_score = merged.front().score;

  // Pass 2: every lattice point within the tie tolerance, in index (= lexicographic) order.
  std::vector<std::vector<std::size_t>> tie_lists(chunks);
  std::vector<std::size_t> tie_counts(chunks, 0);
  parallel_chunks(total, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::vector<double> x(dims);
    for (std::size_t i = begin; i < end; ++i) {
      lattice.decode(i, x);
      if (to_score(objective(x), sense) >= best_score - kTieTolerance) {
        ++tie_counts[c];
        if (tie_lists[c].size() <= kMaxTies) tie_lists[c].push_back(i);
      }
    }
  });

  auto point_at = [&](std::size_t index) {
    SearchPoint p{std::vector<double>(dims), 0.0};
    lattice.decode(index, p.params);
    p.value = objective(p.params);
    return p;
  };

  GridResult result;
  result.evaluations = 2 * total;
  std::vector<std::size_t> ties;
  for (std::size_t c = 0; c < chunks; ++c) {
    result.tie_count += tie_counts[c];
    for (auto i : tie_lists[c]) {
      if (ties.size() <= kMaxTies) ties.push_back(i);
    }
  }
  result.best = point_at(ties.front());
  for (std::size_t k = 1; k < ties.size(); ++k) result.ties.push_back(point_at(ties[k]));
  for (const auto& s : merged) result.top.push_back(point_at(s.index));
  return result;
}

RefineResult refine(const Objective& objective, std::span<const double> start, const SearchDomain& domain,
                    Sense sense, const RefineOptions& options) {
  domain.validate();
  const std::size_t n = domain.dims.size();
  if (start.size() != n) throw Error(ErrorCode::ParamOutOfRange, "start has wrong dimension");

  RefineResult result;
  // Simplex vertices keep unwrapped coordinates for periodic dims; evaluation wraps.
  auto clamp_storage = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& d = domain.dims[i];
      if (!d.wrap) x[i] = std::clamp(x[i], d.lower, d.upper);
    }
  };
  auto evaluate = [&](const std::vector<double>& x) {
    std::vector<double> y = x;
    domain.project(y);
    ++result.evaluations;
    const double v = objective(y);
    const double s = to_score(v, sense);
    if (result.evaluations == 1 || s > to_score(result.best.value, sense)) result.best = {y, v};
    return s;
  };

  std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(start.begin(), start.end()));
  std::vector<double> scores(n + 1);
  clamp_storage(simplex[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = domain.dims[i];
    const double step = options.step ? (*options.step)[i] : 0.05 * (d.upper - d.lower);
    auto& v = simplex[i + 1];
    v = simplex[0];
    v[i] += step;
    if (!d.wrap && v[i] > d.upper) v[i] = simplex[0][i] - step;
    clamp_storage(v);
  }
  for (std::size_t i = 0; i <= n; ++i) scores[i] = evaluate(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point_along = [&](const std::vector<double>& from, double coef, std::vector<double>& out) {
    // out = centroid + coef * (centroid - from)
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coef * (centroid[j] - from[j]);
    clamp_storage(out);
  };

  for (; result.iterations < options.max_iterations; ++result.iterations) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    const auto& best = simplex[order[0]];
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(simplex[order[i]][j] - best[j]));
    }
    if (diameter < options.min_diameter) break;

    const std::size_t worst = order[n];
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j] / static_cast<double>(n);
    }

    point_along(simplex[worst], 1.0, trial);
    const double fr = evaluate(trial);
    if (fr > scores[order[0]]) {
      point_along(simplex[worst], 2.0, trial2);
      const double fe = evaluate(trial2);
      if (fe > fr) {
        simplex[worst] = trial2;
        scores[worst] = fe;
      } else {
        simplex[worst] = trial;
        scores[worst] = fr;
      }
      continue;
    }
    if (fr > scores[order[n - 1]]) {
      simplex[worst] = trial;
      scores[worst] = fr;
      continue;
    }
    const bool outside = fr > scores[worst];
    if (outside) {
      point_along(simplex[worst], 0.5, trial2);
    } else {
      point_along(simplex[worst], -0.5, trial2);
    }
    const double fc = evaluate(trial2);
    if ((outside && fc >= fr) || (!outside && fc > scores[worst])) {
      simplex[worst] = trial2;
      scores[worst] = fc;
      continue;
    }
    const auto anchor = simplex[order[0]];
    for (std::size_t i = 1; i <= n; ++i) {
      auto& v = simplex[order[i]];
      for (std::size_t j = 0; j < n; ++j) v[j] = anchor[j] + 0.5 * (v[j] - anchor[j]);
      clamp_storage(v);
      scores[order[i]] = evaluate(v);
    }
  }
  return result;
}

MultiStartResult multi_start(const Objective& objective, const SearchDomain& domain, std::size_t resolution,
                             Sense sense, std::size_t starts) {
  const auto grid = grid_search(objective, domain, resolution, sense, starts);
  const Lattice lattice(domain, resolution);
  RefineOptions options;
  options.step = std::vector<double>(domain.dims.size());
  for (std::size_t i = 0; i < domain.dims.size(); ++i) (*options.step)[i] = lattice.spacing(i);

  std::vector<SearchPoint> candidates = grid.top;
  candidates.insert(candidates.begin(), grid.best);
  std::vector<RefineResult> refined(candidates.size());
  parallel_chunks(candidates.size(), worker_count(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) refined[i] = refine(objective, candidates[i].params, domain, sense, options);
  });

  MultiStartResult out;
  out.resolution = resolution;
  out.evaluations = grid.evaluations;
  std::vector<SearchPoint> finals;
  for (std::size_t i = 0; i < refined.size(); ++i) {
    out.evaluations += refined[i].evaluations;
    finals.push_back(refined[i].best);
    finals.push_back(candidates[i]);
  }
  for (const auto& t : grid.ties) finals.push_back(t);

  double best_score = kNegInf;
  for (const auto& p : finals) best_score = std::max(best_score, to_score(p.value, sense));
  std::vector<SearchPoint> tied;
  for (const auto& p : finals) {
    if (to_score(p.value, sense) >= best_score - kTieTolerance) tied.push_back(p);
  }
  std::sort(tied.begin(), tied.end(),
            [](const SearchPoint& a, const SearchPoint& b) { return lexicographically_less(a.params, b.params); });
  std::vector<SearchPoint> unique;
  for (auto& p : tied) {
    if (unique.empty() || !nearly_same(unique.back().params, p.params)) unique.push_back(std::move(p));
  }
  out.best = unique.front();
  for (std::size_t i = 1; i < unique.size() && out.ties.size() < kMaxTies; ++i) out.ties.push_back(unique[i]);
  return out;
}

FunctionSpec sample_member(ClassId cls, std::uint64_t seed, std::size_t max_atoms) {
  Rng rng(seed);
  switch (cls) {
    case ClassId::Starlike: return StarlikeSpec{sample_herglotz(rng, max_atoms)};
    case ClassId::Convex: return ConvexSpec{sample_herglotz(rng, max_atoms)};
    case ClassId::BoundedTurning: return BoundedTurningSpec{sample_herglotz(rng, max_atoms)};
    case ClassId::CloseToConvex: {
      auto g = sample_herglotz(rng, max_atoms);
      const double alpha = (rng.uniform() - 0.5) * std::numbers::pi * (1.0 - 1e-9);
      auto p = sample_herglotz(rng, max_atoms);
      return CloseToConvexSpec{std::move(g), alpha, std::move(p)};
    }
    case ClassId::TypicallyReal: return TypicallyRealSpec{sample_robertson(rng, max_atoms)};
  }
  throw Error(ErrorCode::ParamOutOfRange, "unknown class");
}

SamplerResult bound_respecting_sampler(ClassId cls, const SeriesObjective& functional, std::size_t n_samples,
                                       std::uint64_t seed, const SamplerOptions& options) {
  constexpr double kViolationTolerance = 1e-9;
  constexpr double kNearTolerance = 1e-6;
  constexpr std::size_t kNearCap = 16;

  auto spec_at = [&](std::size_t i) -> FunctionSpec {
    if (i < options.anchors.size()) return options.anchors[i];
    return sample_member(cls, derive_seed(seed, i), options.max_atoms);
  };

  struct ChunkState {
    std::vector<Scored> top;  // by value
    Scored min{kNegInf, 0};   // score = -value
    std::size_t violations = 0;
  };
  const std::size_t chunks = worker_count();
  std::vector<ChunkState> states(chunks);
  parallel_chunks(n_samples, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
    auto& st = states[c];
    for (std::size_t i = begin; i < end; ++i) {
      const double v = functional(build(spec_at(i), options.order));
      if ((options.upper && v > *options.upper + kViolationTolerance) ||
          (options.lower && v < *options.lower - kViolationTolerance) || std::isnan(v)) {
        ++st.violations;
      }
      keep_best(st.top, {std::isnan(v) ? kNegInf : v, i}, kNearCap);
      const Scored as_min{std::isnan(v) ? kNegInf : -v, i};
      if (better(as_min, st.min)) st.min = as_min;
    }
  });

  SamplerResult result;
  result.samples = n_samples;
  if (n_samples == 0) return result;
  std::vector<Scored> top;
  Scored min{kNegInf, 0};
  for (const auto& st : states) {
    result.violations += st.violations;
    for (const auto& s : st.top) keep_best(top, s, kNearCap);
    if (!st.top.empty() && better(st.min, min)) min = st.min;
  }
  result.max_observed = top.front().score;
  result.min_observed = -min.score;
  result.argmax = spec_at(top.front().index);
  result.argmin = spec_at(min.index);
  for (const auto& s : top) {
    if (s.score >= result.max_observed - kNearTolerance) result.near_extremal.push_back(spec_at(s.index));
  }
  return result;
}

}  // namespace univalent
