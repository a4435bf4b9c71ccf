#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "qhall/cartan.hpp"

namespace qhall {

/// Quiver-spec JSON:
///   { "vertices": [{"id": str, "d": int}],
///     "arrows":   [{"src": str, "tgt": str, "src_val": int, "dst_val": int}] }
/// with src_val = d_{src,tgt} and dst_val = d_{tgt,src}. Extra top-level keys
/// (e.g. "q", "caps") are ignored here.
ValuedQuiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const ValuedQuiver& q);

ValuedQuiver load_quiver(const std::filesystem::path& path);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
/// Accepts nested rows "[[2,-1],[-1,2]]" or a flat square list such as "[2]".
IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qhall
