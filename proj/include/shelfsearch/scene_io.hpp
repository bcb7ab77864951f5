// Scene document serialization. Human-readable JSON with stable field
// ordering; schema versioned with a top-level "format": 1.
#pragma once

#include <stdexcept>
#include <string>

#include "shelfsearch/scene.hpp"

namespace shelfsearch {

class SceneParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string save_scene(const Scene& scene);
Scene load_scene(const std::string& text);

void save_scene_file(const Scene& scene, const std::string& path);
Scene load_scene_file(const std::string& path);

bool scenes_equal(const Scene& a, const Scene& b);

/// Stable 64-bit digest of the serialized scene, as 16 hex characters.
std::string scene_digest(const Scene& scene);

}  // namespace shelfsearch
