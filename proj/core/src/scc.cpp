#include "roadrank/scc.hpp"

#include <algorithm>
#include <limits>

#include "roadrank/errors.hpp"

namespace roadrank::scc {
namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

struct Frame {
  NodeIndex node;
  std::size_t next_arc;  // position within out_arcs(node) still to explore
};

}  // namespace

SccPartition tarjan_scc(const RoadGraph& graph) {
  const std::size_t n = graph.node_count();
  SccPartition result;
  result.component_of.assign(n, 0);

  std::vector<std::uint32_t> order(n, kUnvisited);  // discovery index
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeIndex> stack;
  std::vector<Frame> call_stack;
  std::uint32_t counter = 0;

  for (NodeIndex root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const NodeIndex v = frame.node;
      const auto arcs = graph.out_arcs(v);

      if (frame.next_arc < arcs.size()) {
        const NodeIndex w = arcs[frame.next_arc++].node;
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});  // invalidates `frame`
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }

      // All successors of v are done.
      if (low[v] == order[v]) {
        const auto id = static_cast<ComponentId>(result.component_sizes.size());
        std::size_t size = 0;
        NodeIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component_of[w] = id;
          ++size;
        } while (w != v);
        result.component_sizes.push_back(size);
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const NodeIndex parent = call_stack.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return result;
}

ComponentId largest_component(const RoadGraph& graph, const SccPartition& partition) {
  if (graph.node_count() == 0) throw EmptyGraph();
  // Nodes are ordered by id, so the first node seen of each component holds
  // its smallest id. Scanning in index order and keeping strict improvements
  // breaks size ties towards the smallest id.
  std::vector<bool> seen(partition.component_count(), false);
  ComponentId best = partition.component_of[0];
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    const ComponentId c = partition.component_of[i];
    if (seen[c]) continue;
    seen[c] = true;
    if (partition.component_sizes[c] > partition.component_sizes[best]) best = c;
  }
  return best;
}

Subgraph largest_scc_subgraph(const RoadGraph& graph, const SccPartition& partition) {
  const ComponentId keep_id = largest_component(graph, partition);
  std::vector<bool> keep(graph.node_count());
  for (NodeIndex i = 0; i < graph.node_count(); ++i) keep[i] = partition.component_of[i] == keep_id;
  return induced_subgraph(graph, keep);
}

}  // namespace roadrank::scc
