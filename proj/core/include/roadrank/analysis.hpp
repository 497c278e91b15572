#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "roadrank/graph.hpp"
#include "roadrank/pagerank.hpp"
#include "roadrank/ranking.hpp"

namespace roadrank::analysis {

struct Degrees {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t total = 0;

  friend bool operator==(const Degrees&, const Degrees&) = default;
};

std::vector<Degrees> degrees(const RoadGraph& graph);

enum class ModelKind { kLinear, kExponential };

const char* to_string(ModelKind kind) noexcept;

/// Least-squares fit. For the linear model y = intercept + slope * x. For the
/// exponential model y = intercept * exp(slope * x), fitted on ln y, so
/// `intercept` is the prefactor A and `r_squared` refers to the log scale.
struct RegressionFit {
  ModelKind model_kind = ModelKind::kLinear;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
};

/// Ordinary least squares with R^2 = 1 - SS_res / SS_tot.
/// Throws std::invalid_argument on mismatched or short (< 3) series and
/// ZeroVariance if x or y is constant.
RegressionFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Log-linear fit of y = A * exp(B x). Throws NonPositiveValue for y <= 0.
RegressionFit exponential_fit(std::span<const double> x, std::span<const double> y);

struct CurvePoint {
  std::uint32_t rank = 0;
  double strength = 0.0;
};

/// One point per report row, in rank order. Tied ranks repeat and leave
/// gaps in the rank coordinate.
std::vector<CurvePoint> rank_strength_curve(const ranking::HubReport& report);

struct AttackOutcome {
  std::size_t k = 0;
  std::vector<NodeId> removed_ids;
  /// Largest surviving SCC size divided by (m - k).
  double largest_scc_fraction = 0.0;
};

/// Removes the k best-ranked nodes (ties by ascending node_id) and measures
/// how much of the remainder is still strongly connected. Throws
/// InvalidSelection unless k < m.
AttackOutcome attack_simulation(const RoadGraph& graph, const pagerank::PageRankResult& result,
                                std::size_t k);

/// Nested removals for k = 0 .. max_k.
std::vector<AttackOutcome> attack_sweep(const RoadGraph& graph, std::span<const double> c,
                                        std::size_t max_k);

/// One row of the analysis CSV. An empty `fit` means the series was
/// degenerate and no coefficients exist.
struct FitRow {
  std::string x_variable;
  std::string y_variable;
  ModelKind requested = ModelKind::kLinear;
  std::optional<RegressionFit> fit;
  std::size_t n_points = 0;
};

/// Linear and exponential fits of {c, strength} against every degree
/// variable, in a fixed order.
std::vector<FitRow> degree_fits(std::span<const ranking::HubRow> rows);

void write_analysis_csv(std::ostream& out, std::span<const FitRow> fits);
void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve);
void write_attack_csv(std::ostream& out, std::span<const AttackOutcome> outcomes);

}  // namespace roadrank::analysis
