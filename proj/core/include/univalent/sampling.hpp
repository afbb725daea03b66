#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "univalent/measures.hpp"

namespace univalent {

/// Seeded generator with a platform-independent double conversion
/// (std::uniform_real_distribution is implementation defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream seed for sample `stream` of a run seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Flat Dirichlet draw of k weights.
std::vector<double> sample_simplex(Rng& rng, std::size_t k);

/// 1..max_atoms atoms, angles uniform on [0, 2pi), weights from a flat simplex.
HerglotzAtoms sample_herglotz(Rng& rng, std::size_t max_atoms);

/// 1..max_atoms atoms, t uniform on [-1, 1], weights from a flat simplex.
RobertsonMeasure sample_robertson(Rng& rng, std::size_t max_atoms);

/// Stick-breaking map from [0,1]^{k-1} onto the k-simplex; k = u.size() + 1.
std::vector<double> simplex_from_cube(std::span<const double> u);

}  // namespace univalent
