#include "shelfsearch/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "shelfsearch/digest.hpp"

namespace shelfsearch {

int PixelMask::count() const {
  return static_cast<int>(
      std::count_if(data.begin(), data.end(), [](uint8_t v) { return v; }));
}

RenderResult render_depth(const Scene& scene, int width_px, int height_px) {
  if (width_px <= 0 || height_px <= 0) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  const int n = static_cast<int>(scene.objects.size());
  const int target = scene.target_index();

  RenderResult out;
  DepthImage& img = out.depth;
  img.width_px = width_px;
  img.height_px = height_px;
  img.pitch_x = scene.shelf.width / width_px;
  img.pitch_y = scene.shelf.height / height_px;
  img.back_depth = scene.shelf.back_depth();
  img.data.assign(size_t(width_px) * height_px, img.back_depth);
  out.object_masks.assign(static_cast<size_t>(n),
                          PixelMask::zeros(width_px, height_px));

  std::vector<Footprint> posed;
  posed.reserve(static_cast<size_t>(n));
  for (const ObjectSpec& o : scene.objects) posed.push_back(o.posed());

  struct Hit {
    double entry;
    double height;
    int index;
    bool is_target;
  };
  std::vector<Hit> hits;
  hits.reserve(static_cast<size_t>(n));

  for (int c = 0; c < width_px; ++c) {
    const double x = (c + 0.5) * img.pitch_x;
    hits.clear();
    for (int i = 0; i < n; ++i) {
      const double e = entry_depth(posed[i], x);
      if (e != kInfiniteDepth) {
        hits.push_back({e, scene.objects[i].height, i, i == target});
      }
    }
    if (hits.empty()) continue;
    // Nearest-first; equal depths prefer the target, then scene order.
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
      if (a.entry != b.entry) return a.entry < b.entry;
      if (a.is_target != b.is_target) return a.is_target;
      return a.index < b.index;
    });
    for (int r = 0; r < height_px; ++r) {
      const double y = (r + 0.5) * img.pitch_y;
      for (const Hit& h : hits) {
        if (h.height >= y) {
          img.at(c, r) = h.entry;
          out.object_masks[static_cast<size_t>(h.index)].set(c, r, true);
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Segment> segment_observation(const DepthImage& depth,
                                         double discontinuity_threshold) {
  const int w = depth.width_px;
  const int h = depth.height_px;
  std::vector<int> parent(size_t(w) * h);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  auto foreground = [&](int c, int r) {
    return depth.at(c, r) < depth.back_depth;
  };

  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) {
      if (!foreground(c, r)) continue;
      const double d = depth.at(c, r);
      if (r + 1 < h && foreground(c, r + 1) &&
          std::abs(depth.at(c, r + 1) - d) < discontinuity_threshold) {
        unite(c * h + r, c * h + r + 1);
      }
      if (c + 1 < w && foreground(c + 1, r) &&
          std::abs(depth.at(c + 1, r) - d) < discontinuity_threshold) {
        unite(c * h + r, (c + 1) * h + r);
      }
    }
  }

  std::vector<int> root_to_segment(size_t(w) * h, -1);
  std::vector<Segment> segments;
  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) {
      if (!foreground(c, r)) continue;
      const int root = find(c * h + r);
      int s = root_to_segment[root];
      if (s < 0) {
        s = static_cast<int>(segments.size());
        root_to_segment[root] = s;
        Segment seg;
        seg.mask = PixelMask::zeros(w, h);
        seg.col_min = seg.col_max = c;
        seg.row_min = seg.row_max = r;
        seg.front_depth = depth.at(c, r);
        seg.far_depth = depth.at(c, r);  // max depth for now
        segments.push_back(std::move(seg));
      }
      Segment& seg = segments[static_cast<size_t>(s)];
      seg.mask.set(c, r, true);
      seg.col_min = std::min(seg.col_min, c);
      seg.col_max = std::max(seg.col_max, c);
      seg.row_min = std::min(seg.row_min, r);
      seg.row_max = std::max(seg.row_max, r);
      seg.front_depth = std::min(seg.front_depth, depth.at(c, r));
      seg.far_depth = std::max(seg.far_depth, depth.at(c, r));
      ++seg.pixel_count;
    }
  }

  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) {
              if (a.col_min != b.col_min) return a.col_min < b.col_min;
              if (a.row_min != b.row_min) return a.row_min < b.row_min;
              if (a.col_max != b.col_max) return a.col_max < b.col_max;
              return a.row_max < b.row_max;
            });
  for (size_t i = 0; i < segments.size(); ++i) {
    Segment& seg = segments[i];
    seg.id = static_cast<int>(i);
    // The observation cannot reveal an object's true z extent; over-estimate
    // it as max observed depth plus the observed lateral width.
    seg.far_depth += (seg.col_max - seg.col_min + 1) * depth.pitch_x;
  }
  return segments;
}

PixelMask target_visible_mask(const Scene& scene, int width_px,
                              int height_px) {
  const int t = scene.target_index();
  if (t < 0) throw std::logic_error("scene has no target");
  return render_depth(scene, width_px, height_px)
      .object_masks[static_cast<size_t>(t)];
}

double visible_fraction(const Scene& scene, int width_px, int height_px) {
  const ObjectSpec& target = scene.target();
  Scene alone;
  alone.shelf = scene.shelf;
  alone.objects = {target};
  alone.target_id = target.id;
  const int denom =
      target_visible_mask(alone, width_px, height_px).count();
  if (denom == 0) {
    throw std::runtime_error(
        "target renders to zero pixels at this resolution");
  }
  const int num = target_visible_mask(scene, width_px, height_px).count();
  return static_cast<double>(num) / denom;
}

void write_pgm(const std::string& path, int width_px, int height_px,
               const std::vector<double>& column_major, double scale_max) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  char header[160];
  std::snprintf(header, sizeof(header),
                "P5\n# meters_per_level %.12g\n%d %d\n65535\n",
                scale_max > 0 ? scale_max / 65535.0 : 0.0, width_px,
                height_px);
  out << header;
  for (int r = height_px - 1; r >= 0; --r) {
    for (int c = 0; c < width_px; ++c) {
      const double v = column_major[size_t(c) * height_px + r];
      double scaled = scale_max > 0 ? v / scale_max * 65535.0 : 0.0;
      scaled = std::clamp(scaled, 0.0, 65535.0);
      const auto q = static_cast<uint16_t>(std::lround(scaled));
      const char bytes[2] = {static_cast<char>(q >> 8),
                             static_cast<char>(q & 0xFF)};
      out.write(bytes, 2);
    }
  }
}

void write_depth_pgm(const std::string& path, const DepthImage& depth) {
  write_pgm(path, depth.width_px, depth.height_px, depth.data,
            depth.back_depth);
}

std::string depth_digest(const DepthImage& depth) {
  return hex64(fnv1a64(depth.data.data(),
                       depth.data.size() * sizeof(double)));
}

}  // namespace shelfsearch
