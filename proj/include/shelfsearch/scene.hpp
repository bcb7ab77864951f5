// World model: shelf, posed extruded-polygon objects, target designation,
// seeded random scene generation and validation.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "shelfsearch/geometry.hpp"

namespace shelfsearch {

struct ShelfSpec {
  double width = 0.60;   // x extent
  double depth = 0.40;   // z extent
  double height = 0.25;  // y extent

  /// Background value for depth rendering (the back wall).
  double back_depth() const { return depth; }
};

enum class ObjectKind { cuboid, cylinder };

struct ObjectSpec {
  std::string id;
  ObjectKind kind = ObjectKind::cuboid;
  Footprint footprint;  // object-local frame
  double height = 0.0;
  Pose2 pose;
  bool is_target = false;

  Footprint posed() const { return transform_footprint(footprint, pose); }
};

struct Scene {
  ShelfSpec shelf;
  std::vector<ObjectSpec> objects;
  std::string target_id;

  /// Index of the target object, or -1.
  int target_index() const;
  const ObjectSpec& target() const;
};

enum class ViolationKind {
  target_count,
  bad_footprint,
  bad_height,
  bad_pose,
  out_of_bounds,
  wall_clearance,
  intersection,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Empty iff all Scene invariants hold. Object contact is legal (pushes end
/// in contact); only interior overlap beyond a 1e-9 m tolerance is reported
/// as an intersection violation.
std::vector<Violation> validate_scene(const Scene& scene,
                                      double blade_thickness);

struct GenerationConfig {
  uint64_t seed = 0;
  int n_occluders = 0;
  std::array<double, 2> cuboid_side_range{0.02, 0.10};
  double cuboid_height = 0.10;
  std::array<double, 2> cylinder_radius_range{0.02, 0.05};
  std::array<double, 2> cylinder_height_range{0.10, 0.20};
  int cylinder_sides = 16;
  double target_side = 0.07;
  double target_height = 0.07;
  double blade_thickness = 0.01;
  bool require_full_occlusion = true;

  // The target pose is drawn from the same lattice the occupancy oracle
  // enumerates, so the true placement is always one of the oracle's
  // hypotheses.
  int lattice_nx = 14;
  int lattice_nz = 16;
  int lattice_ntheta = 8;
  bool full_rotation_range = false;

  // Image geometry used for the exact full-occlusion check.
  int image_width = 256;
  int image_height = 256;

  int max_attempts = 10000;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pose (ix, iz, it) of the placement lattice over the shelf: cell-centered
/// translations, evenly spaced rotations over [0, pi) (or [0, 2*pi) with
/// full_range). Shared by scene generation and the occupancy oracle so both
/// produce bit-identical poses.
Pose2 lattice_pose(const ShelfSpec& shelf, int nx, int nz, int ntheta,
                   bool full_range, int ix, int iz, int it);

/// Rejection-samples a valid scene: occluders (50/50 cuboid/cylinder,
/// dimensions uniform in the configured ranges, rotations quantized to 8
/// steps) followed by the target on the placement lattice, fully occluded
/// when requested. Deterministic given (cfg, shelf). Throws GenerationError
/// when cfg.max_attempts placement attempts are exhausted.
Scene generate_scene(const GenerationConfig& cfg, const ShelfSpec& shelf);

/// Target footprint used by generate_scene (a square of side
/// cfg.target_side).
Footprint target_footprint(const GenerationConfig& cfg);

}  // namespace shelfsearch
