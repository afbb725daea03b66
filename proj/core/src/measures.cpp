#include "univalent/measures.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "univalent/error.hpp"

namespace univalent {

namespace {

double wrap_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

template <typename Atom>
void check_weights(const std::vector<Atom>& atoms, const char* what) {
  if (atoms.empty()) throw Error(ErrorCode::InvalidMeasure, std::string(what) + " has no atoms");
  double sum = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.weight) || a.weight < 0.0) {
      throw Error(ErrorCode::InvalidMeasure, std::string(what) + " has a negative or non-finite weight");
    }
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::InvalidMeasure, std::string(what) + " weights sum to " + std::to_string(sum));
  }
}

}  // namespace

HerglotzAtoms::HerglotzAtoms(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
  check_weights(atoms_, "HerglotzAtoms");
  for (auto& a : atoms_) {
    if (!std::isfinite(a.angle)) throw Error(ErrorCode::InvalidMeasure, "HerglotzAtoms angle is not finite");
    a.angle = wrap_angle(a.angle);
  }
}

HerglotzAtoms HerglotzAtoms::point(double angle) { return HerglotzAtoms({{1.0, angle}}); }

HerglotzAtoms HerglotzAtoms::rotated(double theta) const {
  auto out = atoms_;
  for (auto& a : out) a.angle += theta;
  return HerglotzAtoms(std::move(out));
}

double HerglotzAtoms::min_real_part(std::span<const double> radii, std::size_t angles) const {
  double worst = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    for (std::size_t k = 0; k < angles; ++k) {
      const std::complex<double> z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) / angles);
      std::complex<double> p{};
      for (const auto& a : atoms_) {
        const auto u = std::polar(1.0, a.angle) * z;
        p += a.weight * (1.0 + u) / (1.0 - u);
      }
      worst = std::min(worst, p.real());
    }
  }
  return worst;
}

RobertsonMeasure::RobertsonMeasure(std::vector<RobertsonAtom> atoms) : atoms_(std::move(atoms)) {
  check_weights(atoms_, "RobertsonMeasure");
  for (const auto& a : atoms_) {
    if (!(a.t >= -1.0 && a.t <= 1.0)) {
      throw Error(ErrorCode::InvalidMeasure, "RobertsonMeasure support point outside [-1, 1]");
    }
  }
}

RobertsonMeasure RobertsonMeasure::point(double t) { return RobertsonMeasure({{1.0, t}}); }

}  // namespace univalent
