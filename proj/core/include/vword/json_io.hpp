#ifndef VWORD_JSON_IO_HPP
#define VWORD_JSON_IO_HPP

#include <filesystem>
#include <istream>

#include <nlohmann/json.hpp>

#include "vword/generating_set.hpp"

namespace vword {

/// Reads {"generators": {"<name>": [["<dom>","<im>"], …], …}}; bitstrings
/// are strings over "0"/"1" with "" for the empty word. Every table is
/// validated and reduced; names are checked against the endmarker.
GeneratingSet generating_set_from_json(const nlohmann::json& j);

GeneratingSet load_generating_set(std::istream& in);
GeneratingSet load_generating_set(const std::filesystem::path& path);

nlohmann::ordered_json generating_set_to_json(const GeneratingSet& gs);

}  // namespace vword

#endif  // VWORD_JSON_IO_HPP
