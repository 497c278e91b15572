#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

namespace roadrank::pipeline {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kInputError = 1, kNotConverged = 2 };

struct PipelineConfig {
  std::filesystem::path node_path;
  std::filesystem::path edge_path;
  std::filesystem::path output_dir;
  double damping = 0.85;
  double epsilon = 1e-8;
  std::size_t max_iters = 1000;
  std::size_t rank_stable_iters = 0;
  std::size_t top_n = 25;
  std::size_t bottom_n = 5;
  std::size_t attack_k = 0;
};

/// Artifact file names inside the output directory.
namespace files {
inline constexpr const char* kNodes = "nodes.csv";
inline constexpr const char* kEdges = "edges.csv";
inline constexpr const char* kRank = "rank.csv";
inline constexpr const char* kTop = "top.csv";
inline constexpr const char* kBottom = "bottom.csv";
inline constexpr const char* kGeoJson = "hubs.geojson";
inline constexpr const char* kManifest = "manifest.txt";
inline constexpr const char* kCurve = "curve.csv";
inline constexpr const char* kAnalysis = "analysis.csv";
inline constexpr const char* kAttack = "attack.csv";
}  // namespace files

/// Ingest, keep the largest SCC, rank, and write the cleaned graph, the rank
/// table with its top/bottom selections, GeoJSON and a key=value manifest.
/// Artifacts are still written when PageRank fails to converge.
int run_rank(const PipelineConfig& config, std::ostream& log);

/// Rank-strength curve and degree regressions from a finished rank run.
int run_analyze(const PipelineConfig& config, std::ostream& log);

/// Nested top-k removals for k = 0 .. attack_k on a finished rank run.
int run_attack(const PipelineConfig& config, std::ostream& log);

}  // namespace roadrank::pipeline
