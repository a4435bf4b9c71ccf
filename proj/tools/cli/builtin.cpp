#include "builtin.hpp"

#include <map>

#include "qhall/error.hpp"
#include "qhall/quiver_io.hpp"

namespace qhall::cli {

namespace {

// Same content as the JSON files under tests/data.
const std::map<std::string, const char*>& corpus() {
  static const std::map<std::string, const char*> c = {
      {"a1", R"({"arrows": [], "vertices": [{"d": 1, "id": "1"}]})"},
      {"a2", R"({"arrows": [{"dst_val": 1, "src": "1", "src_val": 1, "tgt": "2"}],
                 "vertices": [{"d": 1, "id": "1"}, {"d": 1, "id": "2"}]})"},
      {"a3", R"({"arrows": [{"dst_val": 1, "src": "1", "src_val": 1, "tgt": "2"},
                            {"dst_val": 1, "src": "2", "src_val": 1, "tgt": "3"}],
                 "vertices": [{"d": 1, "id": "1"}, {"d": 1, "id": "2"}, {"d": 1, "id": "3"}]})"},
      {"b2", R"({"arrows": [{"dst_val": 2, "src": "1", "src_val": 1, "tgt": "2"}],
                 "vertices": [{"d": 2, "id": "1"}, {"d": 1, "id": "2"}]})"},
      {"kronecker", R"({"arrows": [{"dst_val": 2, "src": "1", "src_val": 2, "tgt": "2"}],
                        "vertices": [{"d": 1, "id": "1"}, {"d": 1, "id": "2"}]})"},
  };
  return c;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"a1", "a2", "a3", "b2", "kronecker"};
  return names;
}

ValuedQuiver builtin_quiver(const std::string& name) {
  auto it = corpus().find(name);
  if (it == corpus().end()) fail(Errc::InvalidInput, "no builtin quiver named '" + name + "'");
  return quiver_from_json(nlohmann::json::parse(it->second));
}

}  // namespace qhall::cli
