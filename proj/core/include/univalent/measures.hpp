#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace univalent {

struct HerglotzAtom {
  double weight = 1.0;
  double angle = 0.0;  // radians, normalised to [0, 2pi)
};

/// Finitely supported probability measure on the unit circle. It generates the
/// Caratheodory function p(z) = sum_j w_j (1 + e^{i t_j} z) / (1 - e^{i t_j} z).
class HerglotzAtoms {
 public:
  /// Throws InvalidMeasure unless weights are >= 0 and sum to 1 within 1e-12.
  explicit HerglotzAtoms(std::vector<HerglotzAtom> atoms);

  static HerglotzAtoms point(double angle);

  std::span<const HerglotzAtom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// Measure of the rotated function e^{-i t} f(e^{i t} z).
  HerglotzAtoms rotated(double theta) const;

  /// Minimum of Re p(z) over |z| in radii and `angles` equispaced arguments.
  double min_real_part(std::span<const double> radii, std::size_t angles) const;

 private:
  std::vector<HerglotzAtom> atoms_;
};

struct RobertsonAtom {
  double weight = 1.0;
  double t = 1.0;  // in [-1, 1]
};

/// Finitely supported probability measure on [-1, 1]; generates the typically
/// real function f(z) = sum_j w_j z / (1 - 2 t_j z + z^2).
class RobertsonMeasure {
 public:
  explicit RobertsonMeasure(std::vector<RobertsonAtom> atoms);

  static RobertsonMeasure point(double t);

  std::span<const RobertsonAtom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

 private:
  std::vector<RobertsonAtom> atoms_;
};

inline constexpr double kWeightSumTolerance = 1e-12;

}  // namespace univalent
