#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gridknot/grid.hpp"
#include "gridknot/moves.hpp"

namespace gridknot {

using Json = nlohmann::ordered_json;

/// Grid text format: first line n, second line the column spans "lo-hi"
/// separated by spaces (commas are accepted on input).
std::string to_text(const GridDiagram& d);
GridDiagram parse_text(const std::string& text);

Json to_json(const GridDiagram& d);
GridDiagram grid_from_json(const Json& j);

/// Accepts either the text format or the JSON mirror.
GridDiagram parse_grid(const std::string& content);
GridDiagram read_grid_file(const std::string& path);

Json to_json(const CromwellMove& m);
CromwellMove move_from_json(const Json& j);

Json to_json(const std::vector<CromwellMove>& moves);
std::vector<CromwellMove> moves_from_json(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gridknot
