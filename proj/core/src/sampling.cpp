#include "univalent/sampling.hpp"

#include <cmath>
#include <numbers>

namespace univalent {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> sample_simplex(Rng& rng, std::size_t k) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (auto& x : w) {
    x = -std::log1p(-rng.uniform());
    sum += x;
  }
  if (sum <= 0.0) {
    w.assign(k, 1.0 / static_cast<double>(k));
    return w;
  }
  for (auto& x : w) x /= sum;
  return w;
}

HerglotzAtoms sample_herglotz(Rng& rng, std::size_t max_atoms) {
  const std::size_t k = rng.index(1, max_atoms);
  const auto w = sample_simplex(rng, k);
  std::vector<HerglotzAtom> atoms(k);
  for (std::size_t j = 0; j < k; ++j) atoms[j] = {w[j], rng.uniform(0.0, 2.0 * std::numbers::pi)};
  return HerglotzAtoms(std::move(atoms));
}

RobertsonMeasure sample_robertson(Rng& rng, std::size_t max_atoms) {
  const std::size_t k = rng.index(1, max_atoms);
  const auto w = sample_simplex(rng, k);
  std::vector<RobertsonAtom> atoms(k);
  for (std::size_t j = 0; j < k; ++j) atoms[j] = {w[j], rng.uniform(-1.0, 1.0)};
  return RobertsonMeasure(std::move(atoms));
}

std::vector<double> simplex_from_cube(std::span<const double> u) {
  std::vector<double> w(u.size() + 1);
  double rest = 1.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    w[j] = rest * u[j];
    rest -= w[j];
  }
  w.back() = rest < 0.0 ? 0.0 : rest;
  return w;
}

}  // namespace univalent
