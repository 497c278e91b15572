#include "roadrank/graph.hpp"

#include <algorithm>
#include <cassert>

#include "roadrank/errors.hpp"

namespace roadrank {

std::optional<NodeIndex> RoadGraph::index_of(NodeId id) const noexcept {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id,
                             [](const GeoNode& n, NodeId v) { return n.node_id < v; });
  if (it == nodes_.end() || it->node_id != id) return std::nullopt;
  return static_cast<NodeIndex>(it - nodes_.begin());
}

RoadGraph RoadGraph::assemble(std::vector<GeoNode> nodes, std::vector<Link> links) {
  RoadGraph g;
  g.nodes_ = std::move(nodes);
  const std::size_t n = g.nodes_.size();

  std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  links.erase(std::unique(links.begin(), links.end(),
                          [](const Link& a, const Link& b) { return a.from == b.from && a.to == b.to; }),
              links.end());

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Link& l : links) {
    ++g.out_offsets_[l.from + 1];
    ++g.in_offsets_[l.to + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }

  // Links are sorted by (from, to), so filling in order leaves every
  // out-list sorted by head and every in-list sorted by tail.
  g.out_arcs_.resize(links.size());
  g.in_arcs_.resize(links.size());
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t k = 0; k < links.size(); ++k) {
    const Link& l = links[k];
    g.out_arcs_[k] = Arc{l.to, l.distance_km};
    g.in_arcs_[in_fill[l.to]++] = Arc{l.from, l.distance_km};
  }
  return g;
}

RoadGraph build_graph(std::vector<GeoNode> nodes, std::span<const EdgePair> edges) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].point.valid())
      throw CoordinateOutOfRange(i + 2, nodes[i].point.lat_deg, nodes[i].point.lon_deg);
  }
  // Stable so that the reported duplicate is the later of the two rows.
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return nodes[a].node_id < nodes[b].node_id; });
  std::vector<GeoNode> sorted;
  sorted.reserve(nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && nodes[order[k]].node_id == nodes[order[k - 1]].node_id)
      throw DuplicateNodeId(order[k] + 2, nodes[order[k]].node_id);
    sorted.push_back(nodes[order[k]]);
  }

  RoadGraph lookup;
  lookup.nodes_ = std::move(sorted);

  std::vector<RoadGraph::Link> links;
  links.reserve(edges.size());
  for (std::size_t row = 0; row < edges.size(); ++row) {
    const auto from = lookup.index_of(edges[row].source);
    if (!from) throw UnknownEndpoint(row, edges[row].source);
    const auto to = lookup.index_of(edges[row].target);
    if (!to) throw UnknownEndpoint(row, edges[row].target);
    if (*from == *to) continue;
    links.push_back({*from, *to,
                     geo::great_circle_distance(lookup.nodes_[*from].point, lookup.nodes_[*to].point)});
  }
  return RoadGraph::assemble(std::move(lookup.nodes_), std::move(links));
}

Subgraph induced_subgraph(const RoadGraph& graph, const std::vector<bool>& keep) {
  assert(keep.size() == graph.node_count());
  Subgraph result;
  result.index_map.assign(graph.node_count(), std::nullopt);
  std::vector<GeoNode> nodes;
  NodeIndex next = 0;
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    if (!keep[i]) continue;
    result.index_map[i] = next++;
    nodes.push_back(graph.node(i));
  }
  std::vector<RoadGraph::Link> links;
  graph.for_each_edge([&](NodeIndex from, const Arc& arc) {
    if (keep[from] && keep[arc.node])
      links.push_back({*result.index_map[from], *result.index_map[arc.node], arc.distance_km});
  });
  result.graph = RoadGraph::assemble(std::move(nodes), std::move(links));
  return result;
}

}  // namespace roadrank
