#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "roadrank/geo.hpp"

namespace roadrank {

using NodeId = std::uint64_t;     // external identifier from the input files
using NodeIndex = std::uint32_t;  // dense 0-based position inside a RoadGraph

struct GeoNode {
  NodeId node_id = 0;
  geo::GeoPoint point;

  friend bool operator==(const GeoNode&, const GeoNode&) = default;
};

/// Directed link between two external node ids, as read from an edge file.
struct EdgePair {
  NodeId source = 0;
  NodeId target = 0;

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// One adjacency entry. In out-adjacency `node` is the link's head, in
/// in-adjacency it is the tail.
struct Arc {
  NodeIndex node = 0;
  double distance_km = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Subgraph;

/// Immutable sparse directed road graph.
///
/// Nodes are stored in ascending node_id order, so the dense index of a node
/// is the rank of its id. Both adjacency directions are kept in CSR form with
/// each per-node list sorted by neighbour index. The graph is simple: no
/// self-loops and at most one arc per ordered pair.
class RoadGraph {
 public:
  RoadGraph() = default;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return out_arcs_.size(); }

  std::span<const GeoNode> nodes() const noexcept { return nodes_; }
  const GeoNode& node(NodeIndex i) const { return nodes_[i]; }

  std::span<const Arc> out_arcs(NodeIndex i) const noexcept {
    return {out_arcs_.data() + out_offsets_[i], out_arcs_.data() + out_offsets_[i + 1]};
  }
  std::span<const Arc> in_arcs(NodeIndex i) const noexcept {
    return {in_arcs_.data() + in_offsets_[i], in_arcs_.data() + in_offsets_[i + 1]};
  }
  std::size_t out_degree(NodeIndex i) const noexcept { return out_offsets_[i + 1] - out_offsets_[i]; }
  std::size_t in_degree(NodeIndex i) const noexcept { return in_offsets_[i + 1] - in_offsets_[i]; }

  std::optional<NodeIndex> index_of(NodeId id) const noexcept;

  /// All links as (tail index, arc) in CSR order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (NodeIndex i = 0; i < nodes_.size(); ++i)
      for (const Arc& a : out_arcs(i)) fn(i, a);
  }

 private:
  friend RoadGraph build_graph(std::vector<GeoNode> nodes, std::span<const EdgePair> edges);
  friend Subgraph induced_subgraph(const RoadGraph& graph, const std::vector<bool>& keep);

  struct Link {
    NodeIndex from;
    NodeIndex to;
    double distance_km;
  };
  static RoadGraph assemble(std::vector<GeoNode> nodes, std::vector<Link> links);

  std::vector<GeoNode> nodes_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
};

/// Builds the working graph from parsed nodes and links.
///
/// Links are weighted by great-circle distance. Self-loops are dropped and
/// repeated (source, target) pairs collapse into one link. Throws
/// DuplicateNodeId, CoordinateOutOfRange or UnknownEndpoint.
RoadGraph build_graph(std::vector<GeoNode> nodes, std::span<const EdgePair> edges);

struct Subgraph {
  RoadGraph graph;
  /// For every index of the source graph, its index in `graph` if kept.
  std::vector<std::optional<NodeIndex>> index_map;
};

/// Subgraph induced by the nodes with `keep[i]` set. Arc weights are copied
/// unchanged and the kept nodes retain their relative order.
Subgraph induced_subgraph(const RoadGraph& graph, const std::vector<bool>& keep);

}  // namespace roadrank
