#include "vword/json_io.hpp"

#include <fstream>
#include <map>

namespace vword {

GeneratingSet generating_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") ||
      !j.at("generators").is_object()) {
    throw std::invalid_argument(
        "generating-set file must be an object with a \"generators\" object");
  }
  std::map<std::string, TableElement> gens;
  for (const auto& [name, pairs] : j.at("generators").items()) {
    if (!pairs.is_array() || pairs.empty()) {
      throw std::invalid_argument("generator \"" + name +
                                  "\" must be a non-empty array of pairs");
    }
    std::vector<TableEntry> entries;
    for (const auto& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("generator \"" + name +
                                    "\" has a malformed [dom, im] pair");
      }
      entries.push_back(TableEntry{Bitstring(pair.at(0).get<std::string>()),
                                   Bitstring(pair.at(1).get<std::string>())});
    }
    try {
      gens.emplace(name, TableElement::parse(entries));
    } catch (const TableError& e) {
      throw std::invalid_argument("generator \"" + name + "\": " + e.what());
    }
  }
  return GeneratingSet(std::move(gens));
}

GeneratingSet load_generating_set(std::istream& in) {
  nlohmann::json j;
  in >> j;
  return generating_set_from_json(j);
}

GeneratingSet load_generating_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open generating-set file " +
                             path.string());
  }
  return load_generating_set(in);
}

nlohmann::ordered_json generating_set_to_json(const GeneratingSet& gs) {
  nlohmann::ordered_json gens;
  for (const auto& name : gs.names()) {
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& e : gs.generator(name).entries()) {
      pairs.push_back({e.dom.str(), e.im.str()});
    }
    gens[name] = std::move(pairs);
  }
  nlohmann::ordered_json j;
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace vword
