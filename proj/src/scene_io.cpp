#include "shelfsearch/scene_io.hpp"

#include <fstream>
#include <sstream>

#include "shelfsearch/digest.hpp"

#include <json.hpp>

namespace shelfsearch {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(ObjectKind k) {
  return k == ObjectKind::cuboid ? "cuboid" : "cylinder";
}

ObjectKind kind_from_name(const std::string& s) {
  if (s == "cuboid") return ObjectKind::cuboid;
  if (s == "cylinder") return ObjectKind::cylinder;
  throw SceneParseError("unknown object kind: " + s);
}

}  // namespace

std::string save_scene(const Scene& scene) {
  ordered_json doc;
  doc["format"] = 1;
  doc["shelf"] = {{"width", scene.shelf.width},
                  {"depth", scene.shelf.depth},
                  {"height", scene.shelf.height}};
  doc["objects"] = ordered_json::array();
  for (const ObjectSpec& o : scene.objects) {
    ordered_json jo;
    jo["id"] = o.id;
    jo["kind"] = kind_name(o.kind);
    auto verts = ordered_json::array();
    for (const Vec2& v : o.footprint.vertices) {
      verts.push_back(ordered_json::array({v.x, v.z}));
    }
    jo["vertices"] = std::move(verts);
    jo["height"] = o.height;
    jo["pose"] = {{"x", o.pose.translation.x},
                  {"z", o.pose.translation.z},
                  {"theta", o.pose.rotation}};
    jo["is_target"] = o.is_target;
    doc["objects"].push_back(std::move(jo));
  }
  doc["target_id"] = scene.target_id;
  return doc.dump(2) + "\n";
}

Scene load_scene(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SceneParseError(std::string("scene document is not valid JSON: ") +
                          e.what());
  }
  try {
    if (doc.at("format").get<int>() != 1) {
      throw SceneParseError("unsupported scene format version");
    }
    Scene scene;
    const auto& shelf = doc.at("shelf");
    scene.shelf.width = shelf.at("width").get<double>();
    scene.shelf.depth = shelf.at("depth").get<double>();
    scene.shelf.height = shelf.at("height").get<double>();
    if (!(scene.shelf.width > 0 && scene.shelf.depth > 0 &&
          scene.shelf.height > 0)) {
      throw SceneParseError("shelf dimensions must be positive");
    }
    for (const auto& jo : doc.at("objects")) {
      ObjectSpec o;
      o.id = jo.at("id").get<std::string>();
      o.kind = kind_from_name(jo.at("kind").get<std::string>());
      for (const auto& jv : jo.at("vertices")) {
        o.footprint.vertices.push_back(
            {jv.at(0).get<double>(), jv.at(1).get<double>()});
      }
      o.height = jo.at("height").get<double>();
      const auto& jp = jo.at("pose");
      o.pose.translation.x = jp.at("x").get<double>();
      o.pose.translation.z = jp.at("z").get<double>();
      o.pose.rotation = jp.at("theta").get<double>();
      o.is_target = jo.at("is_target").get<bool>();
      scene.objects.push_back(std::move(o));
    }
    scene.target_id = doc.at("target_id").get<std::string>();

    int n_targets = 0;
    for (const ObjectSpec& o : scene.objects) n_targets += o.is_target ? 1 : 0;
    if (n_targets != 1) {
      throw SceneParseError("scene must contain exactly one target, found " +
                            std::to_string(n_targets));
    }
    if (scene.target().id != scene.target_id) {
      throw SceneParseError("target_id does not name the target object");
    }
    return scene;
  } catch (const nlohmann::json::exception& e) {
    throw SceneParseError(std::string("malformed scene document: ") +
                          e.what());
  }
}

void save_scene_file(const Scene& scene, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << save_scene(scene);
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_scene(ss.str());
}

bool scenes_equal(const Scene& a, const Scene& b) {
  if (a.shelf.width != b.shelf.width || a.shelf.depth != b.shelf.depth ||
      a.shelf.height != b.shelf.height) {
    return false;
  }
  if (a.target_id != b.target_id) return false;
  if (a.objects.size() != b.objects.size()) return false;
  for (size_t i = 0; i < a.objects.size(); ++i) {
    const ObjectSpec& x = a.objects[i];
    const ObjectSpec& y = b.objects[i];
    if (x.id != y.id || x.kind != y.kind || x.height != y.height ||
        x.is_target != y.is_target ||
        !(x.pose.translation == y.pose.translation) ||
        x.pose.rotation != y.pose.rotation ||
        x.footprint.vertices != y.footprint.vertices) {
      return false;
    }
  }
  return true;
}

std::string scene_digest(const Scene& scene) {
  return hex_digest(save_scene(scene));
}

}  // namespace shelfsearch
