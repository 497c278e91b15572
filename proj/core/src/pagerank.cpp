#include "roadrank/pagerank.hpp"

#include <cmath>

#include <fmt/format.h>

#include "roadrank/errors.hpp"
#include "roadrank/ranking.hpp"

namespace roadrank::pagerank {

TransitionModel::TransitionModel(const RoadGraph& graph) {
  const std::size_t n = graph.node_count();
  out_degree_.resize(n);
  for (NodeIndex j = 0; j < n; ++j) {
    out_degree_[j] = graph.out_degree(j);
    if (out_degree_[j] == 0) throw DanglingNode(graph.node(j).node_id);
  }
  offsets_.assign(n + 1, 0);
  entries_.reserve(graph.edge_count());
  for (NodeIndex i = 0; i < n; ++i) {
    for (const Arc& arc : graph.in_arcs(i))
      entries_.push_back({arc.node, 1.0 / static_cast<double>(out_degree_[arc.node])});
    offsets_[i + 1] = entries_.size();
  }
}

const char* to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::kResidual: return "residual";
    case StopReason::kRankStable: return "rank_stable";
    case StopReason::kMaxIterations: return "max_iterations";
  }
  return "unknown";
}

NotConverged::NotConverged(PageRankResult partial)
    : std::runtime_error(fmt::format("PageRank did not converge within {} iterations (residual {:.3g})",
                                     partial.iterations, partial.final_residual)),
      partial_(std::move(partial)) {}

double accurate_sum(std::span<const double> values) noexcept {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      compensation += (sum - t) + v;
    else
      compensation += (v - t) + sum;
    sum = t;
  }
  return sum + compensation;
}

std::vector<double> normalize(std::span<const double> c) {
  const double total = accurate_sum(c);
  std::vector<double> norm(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) norm[i] = c[i] / total;
  return norm;
}

PageRankResult pagerank_iterate(const TransitionModel& model, const PageRankOptions& options) {
  const double d = options.damping;
  if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("damping must lie in (0, 1)");
  if (!(options.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (options.max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");

  const std::size_t n = model.node_count();
  PageRankResult result;
  result.damping = d;
  result.epsilon = options.epsilon;

  std::vector<double> current(n, 1.0);
  std::vector<double> next(n);
  std::vector<std::uint32_t> previous_ranks;
  std::size_t stable_run = 0;

  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    double residual = 0.0;
    for (NodeIndex i = 0; i < n; ++i) {
      double sp = 0.0;
      for (const auto& e : model.row(i)) sp += e.probability * current[e.source];
      next[i] = (1.0 - d) + d * sp;
      residual += std::abs(next[i] - current[i]);
    }
    current.swap(next);
    result.iterations = iter;
    result.final_residual = residual;
    if (options.observer) options.observer(iter, current, residual);

    if (residual < options.epsilon) {
      result.converged = true;
      result.stop_reason = StopReason::kResidual;
      break;
    }
    if (options.rank_stable_iterations > 0) {
      auto ranks = ranking::competition_rank(current);
      stable_run = ranks == previous_ranks ? stable_run + 1 : 0;
      previous_ranks = std::move(ranks);
      if (stable_run >= options.rank_stable_iterations) {
        result.converged = true;
        result.stop_reason = StopReason::kRankStable;
        break;
      }
    }
  }

  result.c = std::move(current);
  result.norm = normalize(result.c);
  if (!result.converged) throw NotConverged(std::move(result));
  return result;
}

}  // namespace roadrank::pagerank
