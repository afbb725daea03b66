#include "univalent/typically_real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "univalent/error.hpp"

namespace univalent {

namespace {

void require_unit_interval(double t, const char* what) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw Error(ErrorCode::ParamOutOfRange, std::string(what) + " = " + std::to_string(t) + " not in [-1, 1]");
  }
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::ParamOutOfRange, "alpha = " + std::to_string(alpha) + " not in [0, 1]");
  }
}

// U_0(t)..U_{count-1}(t)
void chebyshev_u_table(double t, std::vector<double>& out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() > 1) out[1] = 2.0 * t;
  for (std::size_t k = 2; k < out.size(); ++k) out[k] = 2.0 * t * out[k - 1] - out[k - 2];
}

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double s = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(p.x - (a.x + s * dx), p.y - (a.y + s * dy));
}

double boundary_distance(const std::vector<Point2>& v, Point2 p) {
  if (v.size() == 1) return std::hypot(p.x - v[0].x, p.y - v[0].y);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) best = std::min(best, segment_distance(p, v[i], v[(i + 1) % v.size()]));
  return best;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

double chebyshev_u(std::size_t k, double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw Error(ErrorCode::DomainError, "t = " + std::to_string(t) + " outside [-1, 1]");
  }
  std::vector<double> table(k + 1);
  chebyshev_u_table(t, table);
  return table[k];
}

double chebyshev_u_second_derivative_at_one(std::size_t k) {
  const double d = static_cast<double>(k);
  return (d - 1.0) * d * (d + 1.0) * (d + 2.0) * (d + 3.0) / 15.0;
}

TaylorSeries typically_real_coeffs(const RobertsonMeasure& measure, std::size_t order) {
  if (order == 0) throw Error(ErrorCode::InsufficientTruncation, "order must be >= 1");
  std::vector<Complex> a(order);
  std::vector<double> u(order);
  for (const auto& atom : measure.atoms()) {
    chebyshev_u_table(atom.t, u);
    for (std::size_t n = 0; n < order; ++n) a[n] += atom.weight * u[n];
  }
  return TaylorSeries(std::move(a));
}

TaylorSeries two_atom_family(double alpha, double t1, double t2, std::size_t order) {
  require_alpha(alpha);
  require_unit_interval(t1, "t1");
  require_unit_interval(t2, "t2");
  if (t1 > t2) {
    std::swap(t1, t2);
    alpha = 1.0 - alpha;
  }
  if (order == 0) throw Error(ErrorCode::InsufficientTruncation, "order must be >= 1");
  std::vector<double> u1(order), u2(order);
  chebyshev_u_table(t1, u1);
  chebyshev_u_table(t2, u2);
  std::vector<Complex> a(order);
  for (std::size_t n = 0; n < order; ++n) a[n] = alpha * u1[n] + (1.0 - alpha) * u2[n];
  return TaylorSeries(std::move(a));
}

double objective_phi_t23(double alpha, double t) {
  require_alpha(alpha);
  require_unit_interval(t, "t");
  const double a3 = 4.0 * alpha * t * t - 4.0 * alpha + 3.0;
  const double a4 = 4.0 * alpha + 8.0 * alpha * t * t * t - 4.0 * alpha * t - 4.0;
  return a3 * a3 - a4 * a4;
}

double objective_phi1(double t) {
  require_unit_interval(t, "t");
  return 8.0 * t * t * (2.0 * t * t - 1.0);
}

double objective_psi1(double alpha) {
  require_alpha(alpha);
  return 8.0 * (8.0 * alpha * alpha - 8.0 * alpha + 1.0);
}

std::vector<Point2> convex_hull(std::vector<Point2> points, double dedup) {
  std::sort(points.begin(), points.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Point2> unique;
  unique.reserve(points.size());
  for (const auto& p : points) {
    if (!unique.empty() && std::abs(p.x - unique.back().x) <= dedup && std::abs(p.y - unique.back().y) <= dedup) {
      continue;
    }
    unique.push_back(p);
  }
  if (unique.size() < 3) return unique;

  std::vector<Point2> hull(2 * unique.size());
  std::size_t k = 0;
  for (const auto& p : unique) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = unique.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = unique[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool RegionHull::contains(Point2 p, double tol) const {
  const auto& v = vertices;
  if (v.empty()) return false;
  if (v.size() < 3) return boundary_distance(v, p) <= tol;

  // Fan search from v[0] for the wedge containing p.
  const std::size_t count = v.size();
  if (cross(v[0], v[1], p) >= 0.0 && cross(v[0], v[count - 1], p) <= 0.0) {
    std::size_t lo = 1, hi = count - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (cross(v[0], v[mid], p) >= 0.0) lo = mid; else hi = mid;
    }
    if (cross(v[lo], v[hi], p) >= 0.0) return true;
    for (std::size_t i = lo - 1; i <= hi && i < count; ++i) {
      if (segment_distance(p, v[i], v[(i + 1) % count]) <= tol) return true;
    }
  }
  return boundary_distance(v, p) <= tol;
}

std::string RegionHull::to_csv() const {
  std::string out;
  for (const auto& p : vertices) out += format_double(p.x) + "," + format_double(p.y) + "\n";
  return out;
}

std::string RegionHull::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["chord_error"] = chord_error;
  auto& verts = j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& p : vertices) verts.push_back({p.x, p.y});
  return j.dump(2);
}

RegionHull region_hull(std::size_t n, std::size_t m, std::size_t samples) {
  if (samples < 64) throw Error(ErrorCode::ParamOutOfRange, "region_hull needs at least 64 samples");
  if (n == 0 || m == 0) throw Error(ErrorCode::IndexError, "coefficient indices start at 1");
  const std::size_t top = std::max(n, m);
  std::vector<double> u(top);
  std::vector<Point2> points(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = i + 1 == samples ? 1.0 : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
    chebyshev_u_table(t, u);
    points[i] = {u[n - 1], u[m - 1]};
  }
  RegionHull hull;
  hull.n = n;
  hull.m = m;
  hull.vertices = convex_hull(std::move(points));
  const double h = 2.0 / static_cast<double>(samples - 1);
  hull.chord_error = h * h / 8.0 *
                     std::hypot(chebyshev_u_second_derivative_at_one(n - 1), chebyshev_u_second_derivative_at_one(m - 1));
  return hull;
}

std::vector<FamilyPoint> boundary_family_points(std::string_view region_id, std::size_t grid) {
  if (grid < 2) throw Error(ErrorCode::ParamOutOfRange, "grid needs at least 2 points");
  auto lattice = [grid](double lo, double hi, std::size_t i) {
    return i + 1 == grid ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
  };
  std::vector<FamilyPoint> out;
  if (region_id == "A23") {
    for (std::size_t i = 0; i < grid; ++i) {
      const double t = lattice(-1.0, 1.0, i);
      const auto f = two_atom_family(1.0, t, 0.0, 3);
      out.push_back({"single_atom", 1.0, t, 0.0, {f.a(2).real(), f.a(3).real()}});
    }
    for (std::size_t i = 0; i < grid; ++i) {
      const double alpha = lattice(0.0, 1.0, i);
      const auto f = two_atom_family(alpha, 1.0, -1.0, 3);
      out.push_back({"endpoints", alpha, 1.0, -1.0, {f.a(2).real(), f.a(3).real()}});
    }
    return out;
  }
  if (region_id == "A34") {
    for (double anchor : {-1.0, 1.0}) {
      for (std::size_t i = 0; i < grid; ++i) {
        const double alpha = lattice(0.0, 1.0, i);
        for (std::size_t j = 0; j < grid; ++j) {
          const double t = lattice(-1.0, 1.0, j);
          const auto f = two_atom_family(alpha, t, anchor, 4);
          out.push_back({anchor < 0.0 ? "minus_one" : "plus_one", alpha, t, anchor, {f.a(3).real(), f.a(4).real()}});
        }
      }
    }
    return out;
  }
  throw Error(ErrorCode::UnknownLemmaId, "'" + std::string(region_id) + "'");
}

}  // namespace univalent
