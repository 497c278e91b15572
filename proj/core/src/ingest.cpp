#include "roadrank/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "roadrank/errors.hpp"
#include "text_io.hpp"

namespace roadrank::ingest {
namespace {

NodeId parse_id(std::string_view field, std::size_t line, std::string_view column) {
  NodeId value = 0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end)
    throw MalformedRow(line, fmt::format("column '{}' is not an unsigned integer: '{}'", column, field));
  return value;
}

double parse_coordinate(std::string_view field, std::size_t line, std::string_view column) {
  const auto value = detail::parse_double(field);
  if (!value || !std::isfinite(*value))
    throw MalformedRow(line, fmt::format("column '{}' is not a finite number: '{}'", column, field));
  return *value;
}

}  // namespace

std::vector<GeoNode> parse_nodes(std::istream& in) {
  detail::CsvReader reader(in, {{"id", "lat", "lon"}});
  std::vector<GeoNode> nodes;
  std::unordered_set<NodeId> seen;
  while (auto row = reader.next()) {
    const std::size_t line = reader.line();
    if (row->size() != 3)
      throw MalformedRow(line, fmt::format("expected 3 columns, found {}", row->size()));
    GeoNode node;
    node.node_id = parse_id((*row)[0], line, "id");
    node.point.lat_deg = parse_coordinate((*row)[1], line, "lat");
    node.point.lon_deg = parse_coordinate((*row)[2], line, "lon");
    if (!node.point.valid()) throw CoordinateOutOfRange(line, node.point.lat_deg, node.point.lon_deg);
    if (!seen.insert(node.node_id).second) throw DuplicateNodeId(line, node.node_id);
    nodes.push_back(node);
  }
  return nodes;
}

std::vector<EdgePair> parse_edges(std::istream& in) {
  detail::CsvReader reader(in, {{"source", "target"}, {"source", "target", "distance_km"}});
  const std::size_t columns = reader.header_width();
  std::vector<EdgePair> edges;
  while (auto row = reader.next()) {
    const std::size_t line = reader.line();
    if (row->size() != columns)
      throw MalformedRow(line, fmt::format("expected {} columns, found {}", columns, row->size()));
    EdgePair e{parse_id((*row)[0], line, "source"), parse_id((*row)[1], line, "target")};
    if (columns == 3) parse_coordinate((*row)[2], line, "distance_km");
    edges.push_back(e);
  }
  return edges;
}

std::vector<GeoNode> read_nodes_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open node file '{}'", path.string()));
  return parse_nodes(in);
}

std::vector<EdgePair> read_edges_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open edge file '{}'", path.string()));
  return parse_edges(in);
}

RoadGraph load_graph(const std::filesystem::path& nodes_path, const std::filesystem::path& edges_path) {
  auto nodes = read_nodes_file(nodes_path);
  const auto edges = read_edges_file(edges_path);
  return build_graph(std::move(nodes), edges);
}

void write_nodes_csv(std::ostream& out, const RoadGraph& graph) {
  out << "id,lat,lon\n";
  for (const GeoNode& n : graph.nodes())
    fmt::print(out, "{},{:.17g},{:.17g}\n", n.node_id, n.point.lat_deg, n.point.lon_deg);
}

void write_edges_csv(std::ostream& out, const RoadGraph& graph) {
  out << "source,target,distance_km\n";
  graph.for_each_edge([&](NodeIndex from, const Arc& arc) {
    fmt::print(out, "{},{},{:.17g}\n", graph.node(from).node_id, graph.node(arc.node).node_id,
               arc.distance_km);
  });
}

}  // namespace roadrank::ingest
