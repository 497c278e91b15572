#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "roadrank/graph.hpp"

namespace roadrank::scc {

using ComponentId = std::uint32_t;

struct SccPartition {
  /// Component label of every node, dense and 0-based. Labels are assigned in
  /// the order Tarjan's algorithm completes components, which is a reverse
  /// topological order of the condensation.
  std::vector<ComponentId> component_of;
  std::vector<std::size_t> component_sizes;

  std::size_t component_count() const noexcept { return component_sizes.size(); }
};

/// Strongly connected components in O(V + E) time. The depth-first search
/// keeps its own stack, so path length is not limited by the call stack.
SccPartition tarjan_scc(const RoadGraph& graph);

/// Component with the most nodes; ties go to the component holding the
/// smallest node_id. Throws EmptyGraph when the graph has no nodes.
ComponentId largest_component(const RoadGraph& graph, const SccPartition& partition);

/// Induced subgraph on the largest component, densely re-indexed.
Subgraph largest_scc_subgraph(const RoadGraph& graph, const SccPartition& partition);

}  // namespace roadrank::scc
