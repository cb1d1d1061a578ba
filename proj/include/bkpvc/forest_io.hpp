#ifndef BKPVC_FOREST_IO_HPP
#define BKPVC_FOREST_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bkpvc/forest.hpp"

namespace bkpvc {

// {"kind":"undirected","n":N,"edges":[[u,v],...]}
// {"kind":"directed","n":N,"parent":[p0 or null,...]}
nlohmann::json to_json(const UndirectedForest& forest);
nlohmann::json to_json(const RootedDirectedForest& forest);
nlohmann::json to_json(const AnyForest& forest);

/// Malformed documents raise ParseError; structurally invalid forests raise
/// the builder's error (CycleDetected, InvalidVertex, ...).
AnyForest forest_from_json(const nlohmann::json& doc);
AnyForest read_forest_file(const std::filesystem::path& path);

// Leaves are drawn as boxes, branching vertices as diamonds.
std::string to_dot(const UndirectedForest& forest);
std::string to_dot(const RootedDirectedForest& forest);
std::string to_dot(const AnyForest& forest);

}  // namespace bkpvc

#endif
