#include "univalent/classes.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "univalent/error.hpp"
#include "univalent/typically_real.hpp"

namespace univalent {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// i^k without going through sin/cos.
Complex i_pow(std::size_t k) {
  static constexpr std::array<Complex, 4> table{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
  return table[k % 4];
}

void require_order(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::InsufficientTruncation, "order must be >= 1");
}

// f(z) / z as a power series of length N.
Coeffs divided_by_z(std::span<const Complex> taylor) { return Coeffs(taylor.begin(), taylor.end()); }

// z f'(z) / z = sum n a_n z^{n-1}.
Coeffs z_derivative_over_z(std::span<const Complex> taylor) {
  Coeffs out(taylor.size());
  for (std::size_t k = 0; k < taylor.size(); ++k) out[k] = static_cast<double>(k + 1) * taylor[k];
  return out;
}

template <typename Fn>
double grid_minimum(Fn&& condition) {
  static constexpr std::array<double, 3> kRadii{0.3, 0.6, 0.9};
  constexpr std::size_t kAngles = 128;
  double worst = std::numeric_limits<double>::infinity();
  for (double r : kRadii) {
    for (std::size_t k = 0; k < kAngles; ++k) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(k) / kAngles);
      worst = std::min(worst, condition(z));
    }
  }
  return worst;
}

}  // namespace

std::string_view to_string(ClassId id) noexcept {
  switch (id) {
    case ClassId::Starlike: return "starlike";
    case ClassId::Convex: return "convex";
    case ClassId::CloseToConvex: return "close_to_convex";
    case ClassId::BoundedTurning: return "bounded_turning";
    case ClassId::TypicallyReal: return "typically_real";
  }
  return "unknown";
}

ClassId class_id_from_string(std::string_view name) {
  for (auto id : {ClassId::Starlike, ClassId::Convex, ClassId::CloseToConvex, ClassId::BoundedTurning,
                  ClassId::TypicallyReal}) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::MalformedSpec, "unknown class id '" + std::string(name) + "'");
}

const std::vector<std::string>& named_function_ids() {
  static const std::vector<std::string> ids{"identity",          "koebe",           "koebe_rotation",
                                            "starlike_extremal", "convex_extremal", "bounded_turning_extremal",
                                            "log_map"};
  return ids;
}

UnitSeries caratheodory_coeffs(const HerglotzAtoms& h, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    Complex acc{};
    for (const auto& atom : h.atoms()) acc += std::polar(2.0 * atom.weight, static_cast<double>(n) * atom.angle);
    c[n] = acc;
  }
  return UnitSeries(std::move(c));
}

TaylorSeries starlike_from_caratheodory(const HerglotzAtoms& h, std::size_t order) {
  require_order(order);
  const auto p = caratheodory_coeffs(h, order);
  std::vector<Complex> a(order);
  a[0] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) {
    Complex acc{};
    for (std::size_t k = 1; k < n; ++k) acc += a[k - 1] * p.c(n - k);
    a[n - 1] = acc / static_cast<double>(n - 1);
  }
  return TaylorSeries(std::move(a));
}

TaylorSeries convex_from_caratheodory(const HerglotzAtoms& h, std::size_t order) {
  require_order(order);
  const auto p = caratheodory_coeffs(h, order);
  std::vector<Complex> a(order);
  a[0] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) {
    Complex acc{};
    for (std::size_t k = 1; k < n; ++k) acc += static_cast<double>(k) * a[k - 1] * p.c(n - k);
    a[n - 1] = acc / static_cast<double>(n * (n - 1));
  }
  return TaylorSeries(std::move(a));
}

TaylorSeries bounded_turning_from_caratheodory(const HerglotzAtoms& h, std::size_t order) {
  require_order(order);
  const auto p = caratheodory_coeffs(h, order);
  std::vector<Complex> a(order);
  a[0] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) a[n - 1] = p.c(n - 1) / static_cast<double>(n);
  return TaylorSeries(std::move(a));
}

TaylorSeries close_to_convex_from(const TaylorSeries& g, double alpha, const UnitSeries& p) {
  if (!(std::abs(alpha) < kHalfPi)) {
    throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " not in (-pi/2, pi/2)");
  }
  const std::size_t order = g.order();
  if (p.order() + 1 < order) throw Error(ErrorCode::InsufficientTruncation, "p is shorter than g");
  const Complex scale = std::polar(std::cos(alpha), -alpha);  // e^{-i alpha} cos(alpha)
  Coeffs h(order);
  h[0] = 1.0;
  for (std::size_t k = 1; k < order; ++k) h[k] = scale * p.c(k);
  const auto zfp = ps_mul(g.power_coeffs(), h, order);
  std::vector<Complex> a(order);
  for (std::size_t n = 1; n <= order; ++n) a[n - 1] = zfp[n] / static_cast<double>(n);
  return TaylorSeries(std::move(a));
}

TaylorSeries close_to_convex_from(const HerglotzAtoms& g_atoms, double alpha, const HerglotzAtoms& p_atoms,
                                  std::size_t order) {
  if (!(std::abs(alpha) < kHalfPi)) {
    throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " not in (-pi/2, pi/2)");
  }
  return close_to_convex_from(starlike_from_caratheodory(g_atoms, order), alpha, caratheodory_coeffs(p_atoms, order));
}

TaylorSeries named_function(std::string_view id, std::size_t order, double theta) {
  require_order(order);
  std::vector<Complex> a(order);
  for (std::size_t n = 1; n <= order; ++n) {
    const double dn = static_cast<double>(n);
    Complex v;
    if (id == "identity") {
      v = n == 1 ? 1.0 : 0.0;
    } else if (id == "koebe") {
      v = dn;
    } else if (id == "koebe_rotation") {
      v = std::polar(dn, (dn - 1.0) * theta);
    } else if (id == "starlike_extremal") {
      v = dn * i_pow(n - 1);
    } else if (id == "convex_extremal") {
      v = i_pow(n - 1);
    } else if (id == "bounded_turning_extremal") {
      v = n == 1 ? Complex{1.0} : 2.0 * i_pow(n - 1) / dn;
    } else if (id == "log_map") {
      v = 1.0 / dn;
    } else {
      throw Error(ErrorCode::UnknownFunctionId, "'" + std::string(id) + "'");
    }
    a[n - 1] = v;
  }
  return TaylorSeries(std::move(a));
}

TaylorSeries build(const FunctionSpec& spec, std::size_t order) {
  struct Visitor {
    std::size_t order;
    TaylorSeries operator()(const NamedFunction& s) const { return named_function(s.id, order, s.theta); }
    TaylorSeries operator()(const StarlikeSpec& s) const { return starlike_from_caratheodory(s.p, order); }
    TaylorSeries operator()(const ConvexSpec& s) const { return convex_from_caratheodory(s.p, order); }
    TaylorSeries operator()(const BoundedTurningSpec& s) const {
      return bounded_turning_from_caratheodory(s.p, order);
    }
    TaylorSeries operator()(const CloseToConvexSpec& s) const {
      return close_to_convex_from(s.generator, s.alpha, s.p, order);
    }
    TaylorSeries operator()(const TypicallyRealSpec& s) const { return typically_real_coeffs(s.measure, order); }
  };
  return std::visit(Visitor{order}, spec);
}

FunctionSpec rotated(const FunctionSpec& spec, double theta) {
  struct Visitor {
    double theta;
    FunctionSpec operator()(const NamedFunction& s) const {
      if (s.id == "identity") return s;
      if (s.id == "koebe") return NamedFunction{"koebe_rotation", theta};
      if (s.id == "koebe_rotation") return NamedFunction{"koebe_rotation", s.theta + theta};
      if (s.id == "starlike_extremal") return NamedFunction{"koebe_rotation", kHalfPi + theta};
      if (s.id == "convex_extremal") return ConvexSpec{HerglotzAtoms::point(kHalfPi + theta)};
      if (s.id == "bounded_turning_extremal") return BoundedTurningSpec{HerglotzAtoms::point(kHalfPi + theta)};
      throw Error(ErrorCode::ParamOutOfRange, "no rotation registered for '" + s.id + "'");
    }
    FunctionSpec operator()(const StarlikeSpec& s) const { return StarlikeSpec{s.p.rotated(theta)}; }
    FunctionSpec operator()(const ConvexSpec& s) const { return ConvexSpec{s.p.rotated(theta)}; }
    FunctionSpec operator()(const BoundedTurningSpec& s) const { return BoundedTurningSpec{s.p.rotated(theta)}; }
    FunctionSpec operator()(const CloseToConvexSpec& s) const {
      return CloseToConvexSpec{s.generator.rotated(theta), s.alpha, s.p.rotated(theta)};
    }
    FunctionSpec operator()(const TypicallyRealSpec&) const {
      throw Error(ErrorCode::ParamOutOfRange, "rotations leave the typically real class");
    }
  };
  return std::visit(Visitor{theta}, spec);
}

Membership membership_check(const TaylorSeries& f, ClassId cls, const std::optional<TaylorSeries>& generator,
                            double alpha) {
  const auto taylor = f.coeffs();
  const std::size_t n = taylor.size();
  double worst = 0.0;
  switch (cls) {
    case ClassId::Starlike: {
      const auto q = ps_div(z_derivative_over_z(taylor), divided_by_z(taylor), n - 1);
      worst = grid_minimum([&](Complex z) { return ps_eval(q, z).real(); });
      break;
    }
    case ClassId::Convex: {
      const auto power = f.power_coeffs();
      const auto fp = ps_derivative(power, n - 1);
      const auto zfpp = ps_derivative(ps_z_derivative(power, n), n - 1);
      const auto q = ps_div(zfpp, fp, n - 1);
      worst = grid_minimum([&](Complex z) { return ps_eval(q, z).real(); });
      break;
    }
    case ClassId::BoundedTurning: {
      const auto fp = ps_derivative(f.power_coeffs(), n - 1);
      worst = grid_minimum([&](Complex z) { return ps_eval(fp, z).real(); });
      break;
    }
    case ClassId::CloseToConvex: {
      const auto& g = generator ? *generator : f;
      if (g.order() < n) throw Error(ErrorCode::InsufficientTruncation, "generator shorter than f");
      const auto q = ps_div(z_derivative_over_z(taylor), divided_by_z(g.coeffs().first(n)), n - 1);
      const Complex rot = std::polar(1.0, alpha);
      worst = grid_minimum([&](Complex z) { return (rot * ps_eval(q, z)).real(); });
      break;
    }
    case ClassId::TypicallyReal: {
      const auto power = f.power_coeffs();
      worst = grid_minimum([&](Complex z) { return z.imag() * ps_eval(power, z).imag(); });
      return {worst >= -kMembershipMargin, worst};
    }
  }
  return {worst > kMembershipMargin, worst};
}

Membership membership_check(const FunctionSpec& spec, ClassId cls) {
  const auto f = build(spec, kMembershipOrder);
  if (cls == ClassId::CloseToConvex) {
    if (const auto* k = std::get_if<CloseToConvexSpec>(&spec)) {
      return membership_check(f, cls, starlike_from_caratheodory(k->generator, kMembershipOrder), k->alpha);
    }
  }
  return membership_check(f, cls);
}

}  // namespace univalent
