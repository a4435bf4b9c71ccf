#include "qhall/quiver_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qhall/error.hpp"

namespace qhall {

using nlohmann::json;

namespace {

long require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    fail(Errc::InvalidInput, std::string("expected integer field '") + key + "'");
  }
  return j.at(key).get<long>();
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    fail(Errc::InvalidInput, std::string("expected string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

}  // namespace

ValuedQuiver quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array()) {
    fail(Errc::InvalidInput, "quiver spec needs a 'vertices' array");
  }
  ValuedGraph g;
  for (const auto& v : j.at("vertices")) {
    g.ids.push_back(require_string(v, "id"));
    g.d_vertex.push_back(require_int(v, "d"));
  }
  g.d_edge = IntMatrix(g.ids.size(), g.ids.size());
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j.at("arrows").is_array()) fail(Errc::InvalidInput, "'arrows' must be an array");
    for (const auto& a : j.at("arrows")) {
      const std::size_t s = g.index_of(require_string(a, "src"));
      const std::size_t t = g.index_of(require_string(a, "tgt"));
      if (g.d_edge(s, t) != 0 || g.d_edge(t, s) != 0) fail(Errc::InvalidInput, "pair listed twice");
      g.d_edge(s, t) = require_int(a, "src_val");
      g.d_edge(t, s) = require_int(a, "dst_val");
      arrows.push_back({s, t});
    }
  }
  return ValuedQuiver(std::move(g), std::move(arrows));
}

json quiver_to_json(const ValuedQuiver& q) {
  const ValuedGraph& g = q.graph();
  json vertices = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) vertices.push_back({{"id", g.ids[i]}, {"d", g.d_vertex[i]}});
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) {
    arrows.push_back({{"src", g.ids[a.src]},
                      {"tgt", g.ids[a.tgt]},
                      {"src_val", q.src_val(a)},
                      {"dst_val", q.dst_val(a)}});
  }
  return {{"vertices", vertices}, {"arrows", arrows}};
}

ValuedQuiver load_quiver(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidInput, "cannot open quiver file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::InvalidInput, "malformed JSON in " + path.string() + ": " + e.what());
  }
  return quiver_from_json(j);
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json matrix_to_json(const IntMatrix& m) { return m.to_rows(); }

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::InvalidInput, "matrix must be a nonempty JSON array");
  try {
    if (j.front().is_array()) return IntMatrix::from_rows(j.get<std::vector<std::vector<long>>>());
    const auto flat = j.get<std::vector<long>>();
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
    if (n * n != flat.size()) fail(Errc::InvalidInput, "flat matrix length is not a square");
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = flat[r * n + c];
    }
    return m;
  } catch (const json::exception& e) {
    fail(Errc::InvalidInput, std::string("matrix entries must be integers: ") + e.what());
  }
}

}  // namespace qhall
