#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "univalent/measures.hpp"
#include "univalent/series.hpp"

namespace univalent {

// Registered closed-form functions.
//   identity                  f(z) = z
//   koebe                     z / (1 - z)^2
//   koebe_rotation            z / (1 - e^{i theta} z)^2            (uses theta)
//   starlike_extremal         z / (1 - i z)^2                      a_n = n i^{n-1}
//   convex_extremal           z / (1 - i z)                        a_n = i^{n-1}
//   bounded_turning_extremal  f' = (1 + i z) / (1 - i z), f(0) = 0  a_n = 2 i^{n-1} / n
//   log_map                   -log(1 - z)                          a_n = 1 / n
struct NamedFunction {
  std::string id;
  double theta = 0.0;
};

struct StarlikeSpec {
  HerglotzAtoms p;
};

struct ConvexSpec {
  HerglotzAtoms p;
};

struct BoundedTurningSpec {
  HerglotzAtoms p;
};

/// Re(e^{i alpha} z f'(z) / g(z)) > 0 with g starlike, generated by `generator`.
struct CloseToConvexSpec {
  HerglotzAtoms generator;
  double alpha = 0.0;
  HerglotzAtoms p;
};

struct TypicallyRealSpec {
  RobertsonMeasure measure;
};

using FunctionSpec =
    std::variant<NamedFunction, StarlikeSpec, ConvexSpec, BoundedTurningSpec, CloseToConvexSpec, TypicallyRealSpec>;

enum class ClassId { Starlike, Convex, CloseToConvex, BoundedTurning, TypicallyReal };

std::string_view to_string(ClassId id) noexcept;
ClassId class_id_from_string(std::string_view name);

const std::vector<std::string>& named_function_ids();

/// c_n = 2 sum_j w_j e^{i n t_j}, n = 1..N.
UnitSeries caratheodory_coeffs(const HerglotzAtoms& h, std::size_t order);

/// Solves z f' = f p:  (n - 1) a_n = sum_{k=1}^{n-1} a_k c_{n-k},  a_1 = 1.
TaylorSeries starlike_from_caratheodory(const HerglotzAtoms& h, std::size_t order);

/// Solves (z f')' = f' p:  n (n - 1) a_n = sum_{k=1}^{n-1} k a_k c_{n-k}.
TaylorSeries convex_from_caratheodory(const HerglotzAtoms& h, std::size_t order);

/// f' = p:  a_n = c_{n-1} / n.
TaylorSeries bounded_turning_from_caratheodory(const HerglotzAtoms& h, std::size_t order);

/// z f' = g (1 + e^{-i alpha} cos(alpha) (p - 1)), which is the coefficient form of
/// e^{i alpha} z f' / g = p cos(alpha) + i sin(alpha). Throws AlphaOutOfRange unless |alpha| < pi/2.
TaylorSeries close_to_convex_from(const HerglotzAtoms& g_atoms, double alpha, const HerglotzAtoms& p_atoms,
                                  std::size_t order);
TaylorSeries close_to_convex_from(const TaylorSeries& g, double alpha, const UnitSeries& p);

/// Throws UnknownFunctionId for ids outside named_function_ids().
TaylorSeries named_function(std::string_view id, std::size_t order, double theta = 0.0);

TaylorSeries build(const FunctionSpec& spec, std::size_t order);

/// Spec of e^{-i theta} f(e^{i theta} z). Only defined for circle-measure and
/// rotatable named variants; throws ParamOutOfRange otherwise.
FunctionSpec rotated(const FunctionSpec& spec, double theta);

struct Membership {
  bool member = false;
  double worst_margin = 0.0;  // minimum of the defining real part over the grid
};

inline constexpr double kMembershipMargin = 1e-8;
inline constexpr std::size_t kMembershipOrder = 256;

/// Samples the defining condition of `cls` on |z| in {0.3, 0.6, 0.9} x 128 arguments.
/// For CloseToConvex without an explicit generator, g = f and alpha = 0 is used,
/// which certifies starlike members only.
Membership membership_check(const TaylorSeries& f, ClassId cls, const std::optional<TaylorSeries>& generator = {},
                            double alpha = 0.0);

/// Builds the spec with kMembershipOrder terms and checks it; close-to-convex specs
/// use their own generator and alpha.
Membership membership_check(const FunctionSpec& spec, ClassId cls);

}  // namespace univalent
