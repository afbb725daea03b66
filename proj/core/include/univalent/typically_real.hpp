#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "univalent/measures.hpp"
#include "univalent/series.hpp"

namespace univalent {

/// Chebyshev polynomial of the second kind via U_0 = 1, U_1 = 2t, U_{k+1} = 2t U_k - U_{k-1}.
/// Throws DomainError for t outside [-1, 1].
double chebyshev_u(std::size_t k, double t);

/// Second derivative of U_k at t = 1, which is the maximum of |U_k''| on [-1, 1].
double chebyshev_u_second_derivative_at_one(std::size_t k);

/// a_n = sum_j w_j U_{n-1}(t_j); all coefficients real.
TaylorSeries typically_real_coeffs(const RobertsonMeasure& measure, std::size_t order);

/// F(z, alpha, t1, t2) = alpha k(z, t1) + (1 - alpha) k(z, t2), k(z, t) = z / (1 - 2tz + z^2).
/// Requires alpha in [0, 1] and t1, t2 in [-1, 1]; t1 > t2 is normalised by swapping
/// the points and replacing alpha with 1 - alpha. Throws ParamOutOfRange.
TaylorSeries two_atom_family(double alpha, double t1, double t2, std::size_t order);

/// T_2(3) of F(z, alpha, t, -1):
/// (4 alpha t^2 - 4 alpha + 3)^2 - (4 alpha + 8 alpha t^3 - 4 alpha t - 4)^2.
/// The mirrored family F(z, alpha, t, 1) gives phi(alpha, -t).
double objective_phi_t23(double alpha, double t);

/// T_3(1) of k(z, t): 8 t^2 (2 t^2 - 1).
double objective_phi1(double t);

/// T_3(1) of F(z, alpha, 1, -1): 8 (8 alpha^2 - 8 alpha + 1).
double objective_psi1(double alpha);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Counter-clockwise convex hull (monotone chain). Points closer than `dedup` are merged
/// and collinear points are dropped; degenerate inputs give 1 or 2 vertices.
std::vector<Point2> convex_hull(std::vector<Point2> points, double dedup = 1e-10);

/// Polygonal approximation of the region of variability of (a_n, a_m) over typically
/// real functions, i.e. the convex hull of t -> (U_{n-1}(t), U_{m-1}(t)).
struct RegionHull {
  std::size_t n = 2;
  std::size_t m = 3;
  std::vector<Point2> vertices;  // counter-clockwise
  /// Bound on how far the exact hull may extend beyond the polygon, h^2/8 * max|gamma''|
  /// for sample spacing h.
  double chord_error = 0.0;

  /// True when `p` is within distance `tol` of the polygon.
  bool contains(Point2 p, double tol = 1e-9) const;

  /// One "x,y" line per vertex, 17 significant digits.
  std::string to_csv() const;
  std::string to_json() const;
};

/// Hull of `samples` equispaced curve points on [-1, 1] (endpoints included).
/// Throws ParamOutOfRange when samples < 64.
RegionHull region_hull(std::size_t n, std::size_t m, std::size_t samples = 2001);

struct FamilyPoint {
  std::string family;  // "single_atom", "endpoints", "minus_one" or "plus_one"
  double alpha = 1.0;
  double t1 = 0.0;
  double t2 = 0.0;
  Point2 point;
};

/// Parameter sweep over the two-atom families known to make up the boundary:
///   "A23": k(z, t) = F(z, 1, t, 0) and F(z, alpha, 1, -1), points (a_2, a_3);
///   "A34": F(z, alpha, t, -1) and F(z, alpha, t, 1), points (a_3, a_4).
/// `grid` points per parameter. Throws UnknownLemmaId for other ids.
std::vector<FamilyPoint> boundary_family_points(std::string_view region_id, std::size_t grid);

}  // namespace univalent
