#include "roadrank/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "roadrank/errors.hpp"
#include "roadrank/scc.hpp"

namespace roadrank::analysis {

std::vector<Degrees> degrees(const RoadGraph& graph) {
  std::vector<Degrees> out(graph.node_count());
  for (NodeIndex i = 0; i < graph.node_count(); ++i) {
    out[i].in = graph.in_degree(i);
    out[i].out = graph.out_degree(i);
    out[i].total = out[i].in + out[i].out;
  }
  return out;
}

const char* to_string(ModelKind kind) noexcept {
  return kind == ModelKind::kLinear ? "linear" : "exponential";
}

namespace {

bool constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
}

}  // namespace

RegressionFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in length");
  if (x.size() < 3) throw std::invalid_argument("a fit needs at least 3 points");
  if (constant(x)) throw ZeroVariance("x");
  if (constant(y)) throw ZeroVariance("y");

  const auto n = static_cast<double>(x.size());
  const double mean_x = pagerank::accurate_sum(x) / n;
  const double mean_y = pagerank::accurate_sum(y) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  RegressionFit fit;
  fit.model_kind = ModelKind::kLinear;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.n_points = x.size();
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

RegressionFit exponential_fit(std::span<const double> x, std::span<const double> y) {
  std::vector<double> log_y(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0.0)) throw NonPositiveValue(i);
    log_y[i] = std::log(y[i]);
  }
  RegressionFit fit = linear_fit(x, log_y);
  fit.model_kind = ModelKind::kExponential;
  fit.intercept = std::exp(fit.intercept);
  return fit;
}

std::vector<CurvePoint> rank_strength_curve(const ranking::HubReport& report) {
  std::vector<CurvePoint> curve;
  curve.reserve(report.rows().size());
  for (const auto& row : report.rows()) curve.push_back({row.rank, row.strength});
  return curve;
}

namespace {

std::size_t largest_scc_size(const RoadGraph& graph) {
  const auto partition = scc::tarjan_scc(graph);
  std::size_t best = 0;
  for (std::size_t s : partition.component_sizes) best = std::max(best, s);
  return best;
}

AttackOutcome remove_prefix(const RoadGraph& graph, std::span<const NodeIndex> order, std::size_t k) {
  std::vector<bool> keep(graph.node_count(), true);
  AttackOutcome outcome;
  outcome.k = k;
  for (std::size_t r = 0; r < k; ++r) {
    keep[order[r]] = false;
    outcome.removed_ids.push_back(graph.node(order[r]).node_id);
  }
  const auto survivors = induced_subgraph(graph, keep);
  outcome.largest_scc_fraction = static_cast<double>(largest_scc_size(survivors.graph)) /
                                 static_cast<double>(graph.node_count() - k);
  return outcome;
}

}  // namespace

AttackOutcome attack_simulation(const RoadGraph& graph, const pagerank::PageRankResult& result,
                                std::size_t k) {
  if (k >= graph.node_count()) throw InvalidSelection(k, graph.node_count());
  const auto order = ranking::rank_order(graph, result.c);
  return remove_prefix(graph, order, k);
}

std::vector<AttackOutcome> attack_sweep(const RoadGraph& graph, std::span<const double> c,
                                        std::size_t max_k) {
  if (max_k >= graph.node_count()) throw InvalidSelection(max_k, graph.node_count());
  const auto order = ranking::rank_order(graph, c);
  std::vector<AttackOutcome> outcomes;
  outcomes.reserve(max_k + 1);
  for (std::size_t k = 0; k <= max_k; ++k) outcomes.push_back(remove_prefix(graph, order, k));
  return outcomes;
}

std::vector<FitRow> degree_fits(std::span<const ranking::HubRow> rows) {
  struct Variable {
    const char* name;
    std::vector<double> values;
  };
  std::vector<Variable> xs{{"out_degree", {}}, {"in_degree", {}}, {"total_degree", {}}};
  std::vector<Variable> ys{{"c", {}}, {"strength", {}}};
  for (const auto& r : rows) {
    xs[0].values.push_back(static_cast<double>(r.out_degree));
    xs[1].values.push_back(static_cast<double>(r.in_degree));
    xs[2].values.push_back(static_cast<double>(r.total_degree));
    ys[0].values.push_back(r.c);
    ys[1].values.push_back(r.strength);
  }

  std::vector<FitRow> fits;
  for (const auto& xv : xs) {
    for (const auto& yv : ys) {
      for (ModelKind kind : {ModelKind::kLinear, ModelKind::kExponential}) {
        FitRow row{xv.name, yv.name, kind, std::nullopt, rows.size()};
        try {
          row.fit = kind == ModelKind::kLinear ? linear_fit(xv.values, yv.values)
                                               : exponential_fit(xv.values, yv.values);
        } catch (const InputError&) {
        } catch (const std::invalid_argument&) {
        }
        fits.push_back(std::move(row));
      }
    }
  }
  return fits;
}

void write_analysis_csv(std::ostream& out, std::span<const FitRow> fits) {
  out << "fit,x_variable,y_variable,slope,intercept,r_squared,n_points\n";
  for (const auto& row : fits) {
    if (!row.fit) {
      fmt::print(out, "degenerate,{},{},,,,{}\n", row.x_variable, row.y_variable, row.n_points);
      continue;
    }
    const auto& f = *row.fit;
    fmt::print(out, "{},{},{},{:.17g},{:.17g},{:.17g},{}\n", to_string(f.model_kind), row.x_variable,
               row.y_variable, f.slope, f.intercept, f.r_squared, f.n_points);
  }
}

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> curve) {
  out << "rank,strength\n";
  for (const auto& p : curve) fmt::print(out, "{},{:.10g}\n", p.rank, p.strength);
}

void write_attack_csv(std::ostream& out, std::span<const AttackOutcome> outcomes) {
  out << "k,removed_node_ids,largest_scc_fraction\n";
  for (const auto& o : outcomes)
    fmt::print(out, "{},{},{:.17g}\n", o.k, fmt::join(o.removed_ids, ";"), o.largest_scc_fraction);
}

}  // namespace roadrank::analysis
