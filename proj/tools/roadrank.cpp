// roadrank: batch front end for road-network hub ranking.
//
//   roadrank rank    --nodes N.csv --edges E.csv --out DIR [--damping f] [--epsilon f]
//                    [--max-iters n] [--top n] [--bottom n]
//   roadrank analyze --out DIR
//   roadrank attack  --out DIR --k n

#include <iostream>

#include <CLI11.hpp>

#include "roadrank/pipeline.hpp"

int main(int argc, char** argv) {
  using roadrank::pipeline::PipelineConfig;

  CLI::App app{"Identify critical hubs in road networks with PageRank"};
  app.require_subcommand(1);
  PipelineConfig config;

  auto* rank = app.add_subcommand("rank", "Clean the network, rank every node and export hub reports");
  rank->add_option("--nodes", config.node_path, "Node CSV (id,lat,lon)")->required();
  rank->add_option("--edges", config.edge_path, "Edge CSV (source,target)")->required();
  rank->add_option("--out", config.output_dir, "Output directory")->required();
  rank->add_option("--damping", config.damping, "Damping factor d")->capture_default_str();
  rank->add_option("--epsilon", config.epsilon, "L1 convergence tolerance")->capture_default_str();
  rank->add_option("--max-iters", config.max_iters, "Iteration budget")->capture_default_str();
  rank->add_option("--rank-stable-iters", config.rank_stable_iters,
                   "Also stop once ranks are unchanged for this many iterations (0 = off)")
      ->capture_default_str();
  rank->add_option("--top", config.top_n, "Rows in top.csv")->capture_default_str();
  rank->add_option("--bottom", config.bottom_n, "Rows in bottom.csv")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Rank-strength curve and degree regressions");
  analyze->add_option("--out", config.output_dir, "Directory of a finished rank run")->required();

  auto* attack = app.add_subcommand("attack", "Remove the top-k hubs and measure SCC survival");
  attack->add_option("--out", config.output_dir, "Directory of a finished rank run")->required();
  attack->add_option("--k", config.attack_k, "Largest number of hubs to remove")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : roadrank::pipeline::kInputError;
  }

  if (*rank) return roadrank::pipeline::run_rank(config, std::cerr);
  if (*analyze) return roadrank::pipeline::run_analyze(config, std::cerr);
  return roadrank::pipeline::run_attack(config, std::cerr);
}
