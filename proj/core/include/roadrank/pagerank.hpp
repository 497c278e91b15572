#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "roadrank/graph.hpp"

namespace roadrank::pagerank {

/// Column-stochastic transition probabilities over the unweighted adjacency.
///
/// Stored by destination: row i lists every source j linking to i together
/// with p_ij = 1 / outdeg(j). Link distances play no part; ranking depends on
/// topology only.
class TransitionModel {
 public:
  struct Entry {
    NodeIndex source;
    double probability;
  };

  /// Throws DanglingNode if some node has no outgoing link.
  explicit TransitionModel(const RoadGraph& graph);

  std::size_t node_count() const noexcept { return out_degree_.size(); }
  std::span<const Entry> row(NodeIndex i) const noexcept {
    return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
  }
  std::size_t out_degree(NodeIndex j) const noexcept { return out_degree_[j]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> out_degree_;
};

enum class StopReason { kResidual, kRankStable, kMaxIterations };

const char* to_string(StopReason reason) noexcept;

struct PageRankOptions {
  double damping = 0.85;
  /// Stop once the L1 change between successive iterates drops below this.
  double epsilon = 1e-8;
  std::size_t max_iterations = 1000;
  /// When positive, also stop after the competition ranks have stayed the
  /// same for this many consecutive iterations.
  std::size_t rank_stable_iterations = 0;
  /// Called after every iteration with the iteration number (from 1), the
  /// new scores and the L1 residual.
  std::function<void(std::size_t, std::span<const double>, double)> observer;
};

struct PageRankResult {
  std::vector<double> c;
  std::vector<double> norm;
  std::size_t iterations = 0;
  bool converged = false;
  StopReason stop_reason = StopReason::kMaxIterations;
  double damping = 0.0;
  double epsilon = 0.0;
  double final_residual = 0.0;
};

/// Raised when the iteration budget runs out; carries the last iterate.
class NotConverged : public std::runtime_error {
 public:
  explicit NotConverged(PageRankResult partial);
  const PageRankResult& result() const noexcept { return partial_; }

 private:
  PageRankResult partial_;
};

/// Damped sum-product iteration.
///
/// Starts from c = 1 everywhere and repeats, synchronously,
///   sp_i = sum_j p_ij * c_j,   c_i = (1 - d) + d * sp_i
/// until the stopping rule fires. With a column-stochastic model the sum of
/// c stays equal to the node count at every step. Throws NotConverged after
/// `max_iterations` and std::invalid_argument on bad options.
PageRankResult pagerank_iterate(const TransitionModel& model, const PageRankOptions& options = {});

/// c_i / sum(c). Requires every c_i > 0.
std::vector<double> normalize(std::span<const double> c);

/// Neumaier-compensated sum.
double accurate_sum(std::span<const double> values) noexcept;

}  // namespace roadrank::pagerank
