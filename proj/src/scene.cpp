#include "shelfsearch/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "shelfsearch/rng.hpp"

namespace shelfsearch {

int Scene::target_index() const {
  for (size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].is_target) return static_cast<int>(i);
  }
  return -1;
}

const ObjectSpec& Scene::target() const {
  const int i = target_index();
  if (i < 0) throw std::logic_error("scene has no target object");
  return objects[static_cast<size_t>(i)];
}

std::vector<Violation> validate_scene(const Scene& scene,
                                      double blade_thickness) {
  constexpr double slack = 1e-9;
  std::vector<Violation> out;

  int n_targets = 0;
  bool target_id_found = false;
  for (const ObjectSpec& o : scene.objects) {
    if (o.is_target) {
      ++n_targets;
      if (o.id == scene.target_id) target_id_found = true;
    }
  }
  if (n_targets != 1 || !target_id_found) {
    out.push_back({ViolationKind::target_count,
                   "scene must contain exactly one target object matching "
                   "target_id, found " +
                       std::to_string(n_targets)});
  }

  std::set<size_t> degenerate;
  for (size_t i = 0; i < scene.objects.size(); ++i) {
    const ObjectSpec& o = scene.objects[i];
    if (!footprint_valid(o.footprint)) {
      degenerate.insert(i);
      out.push_back({ViolationKind::bad_footprint,
                     "object " + o.id + ": degenerate footprint"});
      continue;
    }
    if (!(o.height > 0.0)) {
      out.push_back(
          {ViolationKind::bad_height, "object " + o.id + ": height <= 0"});
    }
    if (!std::isfinite(o.pose.translation.x) ||
        !std::isfinite(o.pose.translation.z) || o.pose.rotation < 0.0 ||
        o.pose.rotation >= 2.0 * std::numbers::pi) {
      out.push_back({ViolationKind::bad_pose,
                     "object " + o.id + ": pose out of range"});
    }
    const Footprint posed = o.posed();
    if (!footprint_in_rect(posed, 0.0, scene.shelf.width, 0.0,
                           scene.shelf.depth, slack)) {
      out.push_back({ViolationKind::out_of_bounds,
                     "object " + o.id + ": footprint leaves the shelf"});
    }
    const Interval xe = x_extent(posed);
    if (xe.lo < blade_thickness - slack ||
        xe.hi > scene.shelf.width - blade_thickness + slack) {
      out.push_back({ViolationKind::wall_clearance,
                     "object " + o.id + ": closer than the blade thickness "
                     "to a side wall"});
    }
  }

  for (size_t i = 0; i < scene.objects.size(); ++i) {
    if (degenerate.count(i)) continue;
    for (size_t j = i + 1; j < scene.objects.size(); ++j) {
      if (degenerate.count(j)) continue;
      if (polygons_penetrate(scene.objects[i].posed(),
                             scene.objects[j].posed())) {
        out.push_back({ViolationKind::intersection,
                       "objects intersect: " + scene.objects[i].id + ", " +
                           scene.objects[j].id});
      }
    }
  }
  return out;
}

Pose2 lattice_pose(const ShelfSpec& shelf, int nx, int nz, int ntheta,
                   bool full_range, int ix, int iz, int it) {
  const double span = full_range ? 2.0 * std::numbers::pi : std::numbers::pi;
  Pose2 p;
  p.translation.x = (ix + 0.5) * shelf.width / nx;
  p.translation.z = (iz + 0.5) * shelf.depth / nz;
  p.rotation = it * (span / ntheta);
  return p;
}

Footprint target_footprint(const GenerationConfig& cfg) {
  return rectangle(cfg.target_side, cfg.target_side);
}

namespace {

struct PlacedOccluder {
  Footprint posed;
  double height;
};

// Exact mirror of the renderer's ownership rule: the target owns a pixel
// unless some occluder with height >= the pixel's y sits strictly nearer in
// the same column (depth ties go to the target).
bool fully_occluded(const Footprint& posed_target, double target_height,
                    const std::vector<PlacedOccluder>& occluders,
                    const ShelfSpec& shelf, int width_px, int height_px) {
  const double pitch_x = shelf.width / width_px;
  const double pitch_y = shelf.height / height_px;

  int top_row = -1;
  for (int r = 0; r < height_px; ++r) {
    if (target_height >= (r + 0.5) * pitch_y) top_row = r;
  }
  if (top_row < 0) return false;  // target below pixel resolution
  const double y_top = (top_row + 0.5) * pitch_y;

  const Interval xe = x_extent(posed_target);
  const int c_lo = std::max(0, static_cast<int>(xe.lo / pitch_x) - 1);
  const int c_hi =
      std::min(width_px - 1, static_cast<int>(xe.hi / pitch_x) + 1);

  bool any_column = false;
  for (int c = c_lo; c <= c_hi; ++c) {
    const double x = (c + 0.5) * pitch_x;
    const double target_entry = entry_depth(posed_target, x);
    if (target_entry == kInfiniteDepth) continue;
    any_column = true;
    bool covered = false;
    for (const PlacedOccluder& occ : occluders) {
      if (occ.height < y_top) continue;
      if (entry_depth(occ.posed, x) < target_entry) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return any_column;
}

}  // namespace

Scene generate_scene(const GenerationConfig& cfg, const ShelfSpec& shelf) {
  if (cfg.n_occluders < 0) throw std::invalid_argument("n_occluders < 0");
  if (cfg.cuboid_side_range[0] > cfg.cuboid_side_range[1] ||
      cfg.cylinder_radius_range[0] > cfg.cylinder_radius_range[1] ||
      cfg.cylinder_height_range[0] > cfg.cylinder_height_range[1]) {
    throw std::invalid_argument("empty sampling range");
  }

  constexpr int kOccluderRotations = 8;
  Rng rng(cfg.seed);
  const Footprint target_fp = target_footprint(cfg);
  const double wall = cfg.blade_thickness;

  int attempts = 0;
  int n_bounds = 0, n_collision = 0, n_target = 0;
  auto spend_attempt = [&]() {
    if (++attempts > cfg.max_attempts) {
      std::string why = "scene generation exhausted " +
                        std::to_string(cfg.max_attempts) + " attempts; ";
      if (n_target >= n_bounds && n_target >= n_collision) {
        why += cfg.require_full_occlusion
                   ? "no fully occluded target placement exists"
                   : "no collision-free target placement exists";
      } else if (n_collision >= n_bounds) {
        why += "occluder placements kept colliding";
      } else {
        why += "occluder placements kept violating shelf bounds or wall "
               "clearance";
      }
      throw GenerationError(why);
    }
  };

  while (true) {
    std::vector<PlacedOccluder> placed;
    std::vector<ObjectSpec> objects;
    placed.reserve(static_cast<size_t>(cfg.n_occluders));

    for (int k = 0; k < cfg.n_occluders; ++k) {
      while (true) {
        spend_attempt();
        ObjectSpec o;
        o.id = "occ_" + std::to_string(k);
        if (rng.uniform_double() < 0.5) {
          o.kind = ObjectKind::cuboid;
          const double side =
              rng.uniform(cfg.cuboid_side_range[0], cfg.cuboid_side_range[1]);
          o.footprint = rectangle(side, side);
          o.height = cfg.cuboid_height;
        } else {
          o.kind = ObjectKind::cylinder;
          const double radius = rng.uniform(cfg.cylinder_radius_range[0],
                                            cfg.cylinder_radius_range[1]);
          o.footprint = regular_polygon(radius, cfg.cylinder_sides);
          o.height = rng.uniform(cfg.cylinder_height_range[0],
                                 cfg.cylinder_height_range[1]);
        }
        o.pose.translation.x = rng.uniform(0.0, shelf.width);
        o.pose.translation.z = rng.uniform(0.0, shelf.depth);
        o.pose.rotation =
            static_cast<double>(rng.uniform_int(kOccluderRotations)) *
            (2.0 * std::numbers::pi / kOccluderRotations);

        const Footprint posed = o.posed();
        if (!footprint_in_rect(posed, wall, shelf.width - wall, 0.0,
                               shelf.depth)) {
          ++n_bounds;
          continue;
        }
        bool hit = false;
        for (const PlacedOccluder& p : placed) {
          if (polygons_intersect(posed, p.posed)) {
            hit = true;
            break;
          }
        }
        if (hit) {
          ++n_collision;
          continue;
        }
        placed.push_back({posed, o.height});
        objects.push_back(std::move(o));
        break;
      }
    }

    // Enumerate every admissible lattice pose for the target and draw one
    // uniformly; an empty set sends the whole layout back for resampling.
    spend_attempt();
    std::vector<Pose2> feasible;
    for (int ix = 0; ix < cfg.lattice_nx; ++ix) {
      for (int iz = 0; iz < cfg.lattice_nz; ++iz) {
        for (int it = 0; it < cfg.lattice_ntheta; ++it) {
          const Pose2 pose =
              lattice_pose(shelf, cfg.lattice_nx, cfg.lattice_nz,
                           cfg.lattice_ntheta, cfg.full_rotation_range, ix,
                           iz, it);
          const Footprint posed = transform_footprint(target_fp, pose);
          if (!footprint_in_rect(posed, wall, shelf.width - wall, 0.0,
                                 shelf.depth)) {
            continue;
          }
          bool hit = false;
          for (const PlacedOccluder& p : placed) {
            if (polygons_intersect(posed, p.posed)) {
              hit = true;
              break;
            }
          }
          if (hit) continue;
          if (cfg.require_full_occlusion &&
              !fully_occluded(posed, cfg.target_height, placed, shelf,
                              cfg.image_width, cfg.image_height)) {
            continue;
          }
          feasible.push_back(pose);
        }
      }
    }
    if (feasible.empty()) {
      ++n_target;
      continue;
    }

    ObjectSpec target;
    target.id = "target";
    target.kind = ObjectKind::cuboid;
    target.footprint = target_fp;
    target.height = cfg.target_height;
    target.pose = feasible[rng.uniform_int(feasible.size())];
    target.is_target = true;
    objects.push_back(std::move(target));

    Scene scene;
    scene.shelf = shelf;
    scene.objects = std::move(objects);
    scene.target_id = "target";
    return scene;
  }
}

}  // namespace shelfsearch
