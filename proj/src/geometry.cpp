#include "shelfsearch/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace shelfsearch {

double normalize_angle(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(radians, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = 0.0;
  return a;
}

double polygon_area(const Footprint& fp) {
  const auto& v = fp.vertices;
  const size_t n = v.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    twice += a.x * b.z - b.x * a.z;
  }
  return 0.5 * twice;
}

bool footprint_valid(const Footprint& fp) {
  const auto& v = fp.vertices;
  const size_t n = v.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    const Vec2& c = v[(i + 2) % n];
    if (!std::isfinite(a.x) || !std::isfinite(a.z)) return false;
    if (cross(b - a, c - b) <= 0.0) return false;  // CCW, strictly convex
  }
  return polygon_area(fp) > 0.0;
}

void require_valid_footprint(const Footprint& fp) {
  if (!footprint_valid(fp)) {
    throw std::invalid_argument(
        "footprint must be a counter-clockwise convex polygon with positive "
        "area");
  }
}

Footprint transform_footprint(const Footprint& fp, const Pose2& pose) {
  const double c = std::cos(pose.rotation);
  const double s = std::sin(pose.rotation);
  Footprint out;
  out.vertices.reserve(fp.vertices.size());
  for (const Vec2& v : fp.vertices) {
    out.vertices.push_back({v.x * c - v.z * s + pose.translation.x,
                            v.x * s + v.z * c + pose.translation.z});
  }
  return out;
}

namespace {

struct Projection {
  double lo;
  double hi;
};

Projection project(const Footprint& fp, Vec2 axis) {
  double lo = dot(fp.vertices[0], axis);
  double hi = lo;
  for (size_t i = 1; i < fp.vertices.size(); ++i) {
    const double d = dot(fp.vertices[i], axis);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

enum class SeparationMode { closed, interior };

// Separating-axis scan over both polygons' edge normals.
bool separated_on_some_axis(const Footprint& a, const Footprint& b,
                            SeparationMode mode, double tolerance) {
  const Footprint* polys[2] = {&a, &b};
  for (const Footprint* poly : polys) {
    const auto& v = poly->vertices;
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec2 e = v[(i + 1) % n] - v[i];
      const Vec2 axis{e.z, -e.x};
      const Projection pa = project(a, axis);
      const Projection pb = project(b, axis);
      if (mode == SeparationMode::closed) {
        if (pa.hi < pb.lo || pb.hi < pa.lo) return true;
      } else {
        const double slack =
            tolerance * std::sqrt(axis.x * axis.x + axis.z * axis.z);
        if (pa.hi <= pb.lo + slack || pb.hi <= pa.lo + slack) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool polygons_intersect(const Footprint& a, const Footprint& b) {
  require_valid_footprint(a);
  require_valid_footprint(b);
  return !separated_on_some_axis(a, b, SeparationMode::closed, 0.0);
}

bool polygons_penetrate(const Footprint& a, const Footprint& b,
                        double tolerance) {
  require_valid_footprint(a);
  require_valid_footprint(b);
  return !separated_on_some_axis(a, b, SeparationMode::interior, tolerance);
}

namespace detail {

namespace {

// First t >= 0 at which origin + t * (sign, 0) meets the segment [a, b],
// or +infinity.
double ray_hit_segment(Vec2 origin, double sign, Vec2 a, Vec2 b) {
  const double dz = b.z - a.z;
  if (dz == 0.0) {
    if (origin.z != a.z) return kInfiniteDepth;
    // Segment parallel to the motion: first endpoint reached, if any ahead.
    double best = kInfiniteDepth;
    for (double xe : {a.x, b.x}) {
      const double t = (xe - origin.x) * sign;
      if (t >= 0.0) best = std::min(best, t);
    }
    return best;
  }
  const double s = (origin.z - a.z) / dz;
  if (s < 0.0 || s > 1.0) return kInfiniteDepth;
  const double xh = a.x + s * (b.x - a.x);
  const double t = (xh - origin.x) * sign;
  return t >= 0.0 ? t : kInfiniteDepth;
}

}  // namespace

double contact_distance_unchecked(const Footprint& moving,
                                  const Footprint& obstacle, double sign) {
  // First contact between convex polygons under pure translation happens
  // with a vertex of one polygon on an edge of the other.
  double best = kInfiniteDepth;
  const size_t nm = moving.vertices.size();
  const size_t no = obstacle.vertices.size();
  for (const Vec2& v : moving.vertices) {
    for (size_t i = 0; i < no; ++i) {
      best = std::min(best, ray_hit_segment(v, sign, obstacle.vertices[i],
                                            obstacle.vertices[(i + 1) % no]));
    }
  }
  for (const Vec2& w : obstacle.vertices) {
    for (size_t i = 0; i < nm; ++i) {
      // The obstacle vertex moves along -sign in the moving polygon's frame.
      best = std::min(best, ray_hit_segment(w, -sign, moving.vertices[i],
                                            moving.vertices[(i + 1) % nm]));
    }
  }
  return best;
}

}  // namespace detail

double sweep_contact_distance(const Footprint& moving,
                              const Footprint& obstacle, Direction direction,
                              double max_distance) {
  if (max_distance < 0.0) {
    throw std::invalid_argument("max_distance must be non-negative");
  }
  if (polygons_intersect(moving, obstacle)) {
    throw std::invalid_argument(
        "sweep_contact_distance requires initially non-intersecting polygons");
  }
  const double t =
      detail::contact_distance_unchecked(moving, obstacle,
                                         direction_sign(direction));
  if (!(t <= max_distance)) return max_distance;
  return std::max(t, 0.0);
}

Footprint regular_polygon(double radius, int sides) {
  if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
  if (sides < 3) throw std::invalid_argument("need at least 3 sides");
  Footprint fp;
  fp.vertices.reserve(static_cast<size_t>(sides));
  for (int k = 0; k < sides; ++k) {
    const double a = 2.0 * std::numbers::pi * k / sides;
    fp.vertices.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return fp;
}

Footprint rectangle(double size_x, double size_z) {
  if (size_x <= 0.0 || size_z <= 0.0) {
    throw std::invalid_argument("rectangle extents must be positive");
  }
  const double hx = 0.5 * size_x;
  const double hz = 0.5 * size_z;
  return Footprint{{{-hx, -hz}, {hx, -hz}, {hx, hz}, {-hx, hz}}};
}

double entry_depth(const Footprint& fp, double x) {
  double best = kInfiniteDepth;
  const auto& v = fp.vertices;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    if (a.x == b.x) {
      if (a.x == x) best = std::min({best, a.z, b.z});
      continue;
    }
    const double lo = std::min(a.x, b.x);
    const double hi = std::max(a.x, b.x);
    if (x < lo || x > hi) continue;
    const double t = (x - a.x) / (b.x - a.x);
    best = std::min(best, a.z + t * (b.z - a.z));
  }
  return best;
}

Interval x_extent(const Footprint& fp) {
  Interval iv{fp.vertices[0].x, fp.vertices[0].x};
  for (const Vec2& v : fp.vertices) {
    iv.lo = std::min(iv.lo, v.x);
    iv.hi = std::max(iv.hi, v.x);
  }
  return iv;
}

Interval z_extent(const Footprint& fp) {
  Interval iv{fp.vertices[0].z, fp.vertices[0].z};
  for (const Vec2& v : fp.vertices) {
    iv.lo = std::min(iv.lo, v.z);
    iv.hi = std::max(iv.hi, v.z);
  }
  return iv;
}

bool footprint_in_rect(const Footprint& fp, double x0, double x1, double z0,
                       double z1, double slack) {
  for (const Vec2& v : fp.vertices) {
    if (v.x < x0 - slack || v.x > x1 + slack) return false;
    if (v.z < z0 - slack || v.z > z1 + slack) return false;
  }
  return true;
}

}  // namespace shelfsearch
