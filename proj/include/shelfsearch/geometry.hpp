// Convex footprint math in the shelf plane: collision tests, swept contact
// distances along the lateral axis, and shape constructors.
//
// Coordinates: x is lateral (positive rightward as seen from the camera),
// z is depth into the shelf (0 at the shelf front). All lengths in meters,
// angles in radians.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace shelfsearch {

struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.z}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.z == b.z; }
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.z - a.z * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }

/// Convex polygon, counter-clockwise, in an object-local frame.
struct Footprint {
  std::vector<Vec2> vertices;
};

/// Pose of an object footprint in the shelf frame. rotation is kept in
/// [0, 2*pi).
struct Pose2 {
  Vec2 translation;
  double rotation = 0.0;
};

enum class Direction { left, right };

inline double direction_sign(Direction d) {
  return d == Direction::right ? 1.0 : -1.0;
}

constexpr double kInfiniteDepth = std::numeric_limits<double>::infinity();

/// Wraps an angle into [0, 2*pi).
double normalize_angle(double radians);

/// Signed polygon area (positive for counter-clockwise orientation).
double polygon_area(const Footprint& fp);

/// True iff the footprint has >= 3 vertices, strictly convex turns, positive
/// area and counter-clockwise order.
bool footprint_valid(const Footprint& fp);

/// Throws std::invalid_argument when footprint_valid fails.
void require_valid_footprint(const Footprint& fp);

/// Rotates then translates every vertex. Orientation and convexity are
/// preserved.
Footprint transform_footprint(const Footprint& fp, const Pose2& pose);

/// Closed-set intersection test for convex polygons (separating axes).
/// Boundary contact counts as intersection.
bool polygons_intersect(const Footprint& a, const Footprint& b);

/// True iff the polygon interiors overlap by more than `tolerance` meters.
/// Touching polygons do not penetrate.
bool polygons_penetrate(const Footprint& a, const Footprint& b,
                        double tolerance = 1e-9);

/// Smallest translation t in [0, max_distance] of `moving` along the lateral
/// axis at which the two polygons first touch, or max_distance when no
/// contact occurs in range. Throws std::invalid_argument when the inputs
/// already intersect.
double sweep_contact_distance(const Footprint& moving,
                              const Footprint& obstacle, Direction direction,
                              double max_distance);

namespace detail {
/// Raw swept-contact distance without the precondition check. Returns
/// +infinity when the polygons never meet along the direction. Small negative
/// results indicate boundary contact at the start within float noise.
double contact_distance_unchecked(const Footprint& moving,
                                  const Footprint& obstacle, double sign);
}  // namespace detail

/// Regular n-gon with circumscribed radius `radius`, centered at the local
/// origin, first vertex on the +x axis.
Footprint regular_polygon(double radius, int sides);

/// Axis-aligned rectangle of the given extents, centered at the local origin.
Footprint rectangle(double size_x, double size_z);

/// Depth at which a vertical column line x = `x` first enters the polygon
/// (minimum z over the intersection), or +infinity when the line misses it.
double entry_depth(const Footprint& fp, double x);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

Interval x_extent(const Footprint& fp);
Interval z_extent(const Footprint& fp);

/// True iff every vertex lies inside [x0, x1] x [z0, z1], with `slack`
/// meters of tolerance outward.
bool footprint_in_rect(const Footprint& fp, double x0, double x1, double z0,
                       double z1, double slack = 0.0);

}  // namespace shelfsearch
