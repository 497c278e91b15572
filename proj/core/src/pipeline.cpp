#include "roadrank/pipeline.hpp"

#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "roadrank/analysis.hpp"
#include "roadrank/errors.hpp"
#include "roadrank/geo.hpp"
#include "roadrank/ingest.hpp"
#include "roadrank/pagerank.hpp"
#include "roadrank/ranking.hpp"
#include "roadrank/scc.hpp"

namespace roadrank::pipeline {
namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("missing artifact '{}'", path.string()));
  return in;
}

void validate(const PipelineConfig& config) {
  if (!(config.damping > 0.0 && config.damping < 1.0)) throw InputError("--damping must lie in (0, 1)");
  if (!(config.epsilon > 0.0)) throw InputError("--epsilon must be positive");
  if (config.max_iters < 1) throw InputError("--max-iters must be at least 1");
}

struct RunSummary {
  std::size_t m_before = 0;
  std::size_t edges_before = 0;
  std::size_t scc_count = 0;
  std::size_t m_after = 0;
  std::size_t edges_after = 0;
};

void write_manifest(std::ostream& out, const PipelineConfig& config, const RunSummary& summary,
                    const pagerank::PageRankResult& result) {
  fmt::print(out, "m_before={}\n", summary.m_before);
  fmt::print(out, "edges_before={}\n", summary.edges_before);
  fmt::print(out, "scc_count={}\n", summary.scc_count);
  fmt::print(out, "m_after={}\n", summary.m_after);
  fmt::print(out, "edges_after={}\n", summary.edges_after);
  fmt::print(out, "damping={}\n", result.damping);
  fmt::print(out, "epsilon={}\n", result.epsilon);
  fmt::print(out, "max_iters={}\n", config.max_iters);
  fmt::print(out, "rank_stable_iters={}\n", config.rank_stable_iters);
  fmt::print(out, "iterations={}\n", result.iterations);
  fmt::print(out, "converged={}\n", result.converged ? "true" : "false");
  fmt::print(out, "stop_reason={}\n", pagerank::to_string(result.stop_reason));
  fmt::print(out, "final_residual={}\n", result.final_residual);
  fmt::print(out, "earth_radius_km={}\n", geo::kEarthRadiusKm);
  fmt::print(out, "top_n={}\n", config.top_n);
  fmt::print(out, "bottom_n={}\n", config.bottom_n);
}

int rank_impl(const PipelineConfig& config, std::ostream& log) {
  validate(config);
  const RoadGraph raw = ingest::load_graph(config.node_path, config.edge_path);
  const auto partition = scc::tarjan_scc(raw);
  const auto cleaned = scc::largest_scc_subgraph(raw, partition);
  const RoadGraph& graph = cleaned.graph;

  RunSummary summary{raw.node_count(), raw.edge_count(), partition.component_count(), graph.node_count(),
                     graph.edge_count()};
  fmt::print(log, "cleaning: {} nodes in {} SCCs, kept {} nodes / {} edges\n", summary.m_before,
             summary.scc_count, summary.m_after, summary.edges_after);

  if (config.top_n > graph.node_count()) throw InvalidSelection(config.top_n, graph.node_count());
  if (config.bottom_n > graph.node_count()) throw InvalidSelection(config.bottom_n, graph.node_count());

  pagerank::PageRankOptions options;
  options.damping = config.damping;
  options.epsilon = config.epsilon;
  options.max_iterations = config.max_iters;
  options.rank_stable_iterations = config.rank_stable_iters;

  const pagerank::TransitionModel model(graph);
  pagerank::PageRankResult result;
  int status = kSuccess;
  try {
    result = pagerank::pagerank_iterate(model, options);
  } catch (const pagerank::NotConverged& e) {
    result = e.result();
    status = kNotConverged;
    fmt::print(log, "warning: {}\n", e.what());
  }
  fmt::print(log, "pagerank: {} iterations, residual {:.3g}\n", result.iterations, result.final_residual);

  fs::create_directories(config.output_dir);
  {
    auto out = open_output(config.output_dir / files::kNodes);
    ingest::write_nodes_csv(out, graph);
  }
  {
    auto out = open_output(config.output_dir / files::kEdges);
    ingest::write_edges_csv(out, graph);
  }
  const auto report = ranking::hub_report(graph, result, config.top_n, config.bottom_n);
  {
    auto out = open_output(config.output_dir / files::kRank);
    ranking::write_rank_csv(out, report.rows());
  }
  {
    auto out = open_output(config.output_dir / files::kTop);
    ranking::write_rank_csv(out, report.top());
  }
  {
    auto out = open_output(config.output_dir / files::kBottom);
    ranking::write_rank_csv(out, report.bottom());
  }
  {
    auto out = open_output(config.output_dir / files::kGeoJson);
    ranking::write_geojson(out, report.rows());
  }
  {
    auto out = open_output(config.output_dir / files::kManifest);
    write_manifest(out, config, summary, result);
  }
  return status;
}

std::vector<ranking::HubRow> load_rank_rows(const fs::path& dir) {
  auto in = open_input(dir / files::kRank);
  return ranking::read_rank_csv(in);
}

int analyze_impl(const PipelineConfig& config, std::ostream& log) {
  const auto rows = load_rank_rows(config.output_dir);
  const ranking::HubReport report(rows, 0, 0);
  {
    auto out = open_output(config.output_dir / files::kCurve);
    analysis::write_curve_csv(out, analysis::rank_strength_curve(report));
  }
  const auto fits = analysis::degree_fits(rows);
  {
    auto out = open_output(config.output_dir / files::kAnalysis);
    analysis::write_analysis_csv(out, fits);
  }
  std::size_t degenerate = 0;
  for (const auto& f : fits) degenerate += f.fit ? 0 : 1;
  fmt::print(log, "analysis: {} fits ({} degenerate) over {} nodes\n", fits.size(), degenerate, rows.size());
  return kSuccess;
}

int attack_impl(const PipelineConfig& config, std::ostream& log) {
  const RoadGraph graph =
      ingest::load_graph(config.output_dir / files::kNodes, config.output_dir / files::kEdges);
  const auto rows = load_rank_rows(config.output_dir);
  if (rows.size() != graph.node_count())
    throw InputError(fmt::format("rank table has {} rows but the graph has {} nodes", rows.size(),
                                 graph.node_count()));
  std::vector<double> c(graph.node_count());
  std::vector<bool> filled(graph.node_count(), false);
  for (const auto& r : rows) {
    const auto i = graph.index_of(r.node_id);
    if (!i || filled[*i]) throw InputError(fmt::format("rank table node {} does not match the graph", r.node_id));
    c[*i] = r.c;
    filled[*i] = true;
  }
  const auto outcomes = analysis::attack_sweep(graph, c, config.attack_k);
  auto out = open_output(config.output_dir / files::kAttack);
  analysis::write_attack_csv(out, outcomes);
  fmt::print(log, "attack: k={} leaves largest SCC fraction {:.6f}\n", config.attack_k,
             outcomes.back().largest_scc_fraction);
  return kSuccess;
}

template <typename Fn>
int guarded(Fn&& fn, std::ostream& log) {
  try {
    return fn();
  } catch (const InputError& e) {
    fmt::print(log, "error: {}\n", e.what());
  } catch (const fs::filesystem_error& e) {
    fmt::print(log, "error: {}\n", e.what());
  }
  return kInputError;
}

}  // namespace

int run_rank(const PipelineConfig& config, std::ostream& log) {
  return guarded([&] { return rank_impl(config, log); }, log);
}

int run_analyze(const PipelineConfig& config, std::ostream& log) {
  return guarded([&] { return analyze_impl(config, log); }, log);
}

int run_attack(const PipelineConfig& config, std::ostream& log) {
  return guarded([&] { return attack_impl(config, log); }, log);
}

}  // namespace roadrank::pipeline
