#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "roadrank/graph.hpp"
#include "roadrank/pagerank.hpp"

namespace roadrank::ranking {

/// Scale from normalized score to strength.
inline constexpr double kStrengthScale = 1e6;

/// Standard competition ("1224") ranking, highest value first. Equal values
/// share a rank and the next distinct value skips ahead by the tie count.
std::vector<std::uint32_t> competition_rank(std::span<const double> values);

std::vector<double> strength(std::span<const double> norm);

/// Node indices ordered by descending score, ties by ascending node_id.
std::vector<NodeIndex> rank_order(const RoadGraph& graph, std::span<const double> c);

struct HubRow {
  NodeId node_id = 0;
  geo::GeoPoint point;
  std::uint32_t rank = 0;
  double strength = 0.0;
  double norm = 0.0;
  double c = 0.0;
  std::size_t in_degree = 0;
  std::size_t out_degree = 0;
  std::size_t total_degree = 0;
};

/// Per-node ranking table, ordered by rank and then by node_id.
class HubReport {
 public:
  HubReport(std::vector<HubRow> rows, std::size_t top_n, std::size_t bottom_n);

  std::span<const HubRow> rows() const noexcept { return rows_; }
  std::span<const HubRow> top() const noexcept { return {rows_.data(), top_n_}; }
  std::span<const HubRow> bottom() const noexcept {
    return {rows_.data() + rows_.size() - bottom_n_, bottom_n_};
  }

 private:
  std::vector<HubRow> rows_;
  std::size_t top_n_;
  std::size_t bottom_n_;
};

/// Joins scores, ranks, strengths and degrees for every node of `graph`.
/// Throws InvalidSelection if top_n or bottom_n exceeds the node count.
HubReport hub_report(const RoadGraph& graph, const pagerank::PageRankResult& result, std::size_t top_n,
                     std::size_t bottom_n);

/// `node_id,lat,lon,rank,strength,norm,c,in_degree,out_degree,total_degree`
void write_rank_csv(std::ostream& out, std::span<const HubRow> rows);
std::vector<HubRow> read_rank_csv(std::istream& in);

/// FeatureCollection of Point features carrying the rank CSV fields.
void write_geojson(std::ostream& out, std::span<const HubRow> rows);

}  // namespace roadrank::ranking
