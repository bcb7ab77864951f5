// Orthographic front-view depth rendering, per-object pixel masks,
// depth-discontinuity segmentation and target-visibility measurement.
//
// Pixel (c, r) sees lateral coordinate x = (c + 0.5) * pitch_x and height
// y = (r + 0.5) * pitch_y; row 0 is the shelf floor. Background pixels
// hold exactly shelf.back_depth().
#pragma once

#include <string>
#include <vector>

#include "shelfsearch/scene.hpp"

namespace shelfsearch {

struct DepthImage {
  int width_px = 0;
  int height_px = 0;
  double pitch_x = 0.0;
  double pitch_y = 0.0;
  double back_depth = 0.0;
  std::vector<double> data;  // column-major: data[c * height_px + r]

  double at(int c, int r) const { return data[c * height_px + r]; }
  double& at(int c, int r) { return data[c * height_px + r]; }
};

struct PixelMask {
  int width_px = 0;
  int height_px = 0;
  std::vector<uint8_t> data;  // column-major, 0/1

  static PixelMask zeros(int w, int h) {
    return PixelMask{w, h, std::vector<uint8_t>(size_t(w) * h, 0)};
  }
  bool at(int c, int r) const { return data[c * height_px + r] != 0; }
  void set(int c, int r, bool v) { data[c * height_px + r] = v ? 1 : 0; }
  int count() const;
};

struct RenderResult {
  DepthImage depth;
  /// One mask per scene object (same order); a mask marks the pixels where
  /// that object is the nearest surface.
  std::vector<PixelMask> object_masks;
};

/// Renders the scene orthographically looking along +z. Depth ties go to the
/// target, then to the earlier object in the scene list.
RenderResult render_depth(const Scene& scene, int width_px, int height_px);

/// Connected observed region bounded by depth discontinuities; what the
/// planner treats as one pushable object.
struct Segment {
  int id = 0;
  PixelMask mask;
  int col_min = 0, col_max = 0;
  int row_min = 0, row_max = 0;
  double front_depth = 0.0;  // min depth over the mask
  double far_depth = 0.0;    // max depth + observed lateral width
  int pixel_count = 0;
};

/// Partitions non-background pixels into segments: 4-adjacent pixels belong
/// together iff their depth difference is below the threshold. Segments are
/// ordered by (col_min, row_min, col_max, row_max).
std::vector<Segment> segment_observation(const DepthImage& depth,
                                         double discontinuity_threshold);

/// Pixels where the target is the nearest surface.
PixelMask target_visible_mask(const Scene& scene, int width_px = 256,
                              int height_px = 256);

/// Visible pixels divided by the pixels the target covers when rendered
/// alone on the same shelf. Throws when the lone target renders to zero
/// pixels.
double visible_fraction(const Scene& scene, int width_px = 256,
                        int height_px = 256);

/// 16-bit binary PGM (P5) export. Values are scaled so that `scale_max`
/// maps to 65535; the scale is recorded in a header comment. Rows are
/// written top-down (largest y first).
void write_pgm(const std::string& path, int width_px, int height_px,
               const std::vector<double>& column_major, double scale_max);

void write_depth_pgm(const std::string& path, const DepthImage& depth);

std::string depth_digest(const DepthImage& depth);

}  // namespace shelfsearch
