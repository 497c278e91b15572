#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "roadrank/graph.hpp"

namespace roadrank::ingest {

/// Reads a node CSV (`id,lat,lon`). Rows come back in file order.
/// Throws MalformedRow, DuplicateNodeId or CoordinateOutOfRange.
std::vector<GeoNode> parse_nodes(std::istream& in);

/// Reads an edge CSV (`source,target`). Graph exports carrying a third
/// `distance_km` column are accepted too; that column is validated and then
/// ignored since weights are always recomputed from coordinates.
std::vector<EdgePair> parse_edges(std::istream& in);

std::vector<GeoNode> read_nodes_file(const std::filesystem::path& path);
std::vector<EdgePair> read_edges_file(const std::filesystem::path& path);

RoadGraph load_graph(const std::filesystem::path& nodes_path, const std::filesystem::path& edges_path);

/// Node CSV with coordinates at 17 significant digits (exact round trip).
void write_nodes_csv(std::ostream& out, const RoadGraph& graph);
/// Edge CSV `source,target,distance_km` in CSR order.
void write_edges_csv(std::ostream& out, const RoadGraph& graph);

}  // namespace roadrank::ingest
