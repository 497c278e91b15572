#include "roadrank/ranking.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "roadrank/errors.hpp"
#include "text_io.hpp"

namespace roadrank::ranking {

std::vector<std::uint32_t> competition_rank(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::uint32_t> ranks(values.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && values[order[k]] == values[order[k - 1]])
      ranks[order[k]] = ranks[order[k - 1]];
    else
      ranks[order[k]] = static_cast<std::uint32_t>(k + 1);
  }
  return ranks;
}

std::vector<double> strength(std::span<const double> norm) {
  std::vector<double> out(norm.size());
  std::transform(norm.begin(), norm.end(), out.begin(), [](double v) { return v * kStrengthScale; });
  return out;
}

std::vector<NodeIndex> rank_order(const RoadGraph& graph, std::span<const double> c) {
  std::vector<NodeIndex> order(graph.node_count());
  std::iota(order.begin(), order.end(), NodeIndex{0});
  // Index order is node_id order, so a stable sort settles ties by id.
  std::stable_sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) { return c[a] > c[b]; });
  return order;
}

HubReport::HubReport(std::vector<HubRow> rows, std::size_t top_n, std::size_t bottom_n)
    : rows_(std::move(rows)), top_n_(top_n), bottom_n_(bottom_n) {
  if (top_n_ > rows_.size()) throw InvalidSelection(top_n_, rows_.size());
  if (bottom_n_ > rows_.size()) throw InvalidSelection(bottom_n_, rows_.size());
}

HubReport hub_report(const RoadGraph& graph, const pagerank::PageRankResult& result, std::size_t top_n,
                     std::size_t bottom_n) {
  const std::size_t m = graph.node_count();
  if (top_n > m) throw InvalidSelection(top_n, m);
  if (bottom_n > m) throw InvalidSelection(bottom_n, m);

  // Ties are decided on c itself, never on the derived display values.
  const auto ranks = competition_rank(result.c);
  const auto strengths = strength(result.norm);
  std::vector<HubRow> rows;
  rows.reserve(m);
  for (NodeIndex i : rank_order(graph, result.c)) {
    HubRow row;
    row.node_id = graph.node(i).node_id;
    row.point = graph.node(i).point;
    row.rank = ranks[i];
    row.strength = strengths[i];
    row.norm = result.norm[i];
    row.c = result.c[i];
    row.in_degree = graph.in_degree(i);
    row.out_degree = graph.out_degree(i);
    row.total_degree = row.in_degree + row.out_degree;
    rows.push_back(row);
  }
  return HubReport(std::move(rows), top_n, bottom_n);
}

void write_rank_csv(std::ostream& out, std::span<const HubRow> rows) {
  out << "node_id,lat,lon,rank,strength,norm,c,in_degree,out_degree,total_degree\n";
  for (const HubRow& r : rows) {
    fmt::print(out, "{},{:.17g},{:.17g},{},{:.10g},{:.17g},{:.17g},{},{},{}\n", r.node_id, r.point.lat_deg,
               r.point.lon_deg, r.rank, r.strength, r.norm, r.c, r.in_degree, r.out_degree, r.total_degree);
  }
}

namespace {

template <typename T>
T parse_unsigned(std::string_view field, std::size_t line) {
  T value{};
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end)
    throw MalformedRow(line, fmt::format("expected an unsigned integer, found '{}'", field));
  return value;
}

double parse_real(std::string_view field, std::size_t line) {
  const auto value = detail::parse_double(field);
  if (!value) throw MalformedRow(line, fmt::format("expected a number, found '{}'", field));
  return *value;
}

}  // namespace

std::vector<HubRow> read_rank_csv(std::istream& in) {
  detail::CsvReader reader(in, {{"node_id", "lat", "lon", "rank", "strength", "norm", "c", "in_degree",
                                 "out_degree", "total_degree"}});
  std::vector<HubRow> rows;
  while (auto fields = reader.next()) {
    const std::size_t line = reader.line();
    const auto& f = *fields;
    if (f.size() != 10) throw MalformedRow(line, fmt::format("expected 10 columns, found {}", f.size()));
    HubRow r;
    r.node_id = parse_unsigned<NodeId>(f[0], line);
    r.point = {parse_real(f[1], line), parse_real(f[2], line)};
    r.rank = parse_unsigned<std::uint32_t>(f[3], line);
    r.strength = parse_real(f[4], line);
    r.norm = parse_real(f[5], line);
    r.c = parse_real(f[6], line);
    r.in_degree = parse_unsigned<std::size_t>(f[7], line);
    r.out_degree = parse_unsigned<std::size_t>(f[8], line);
    r.total_degree = parse_unsigned<std::size_t>(f[9], line);
    rows.push_back(r);
  }
  return rows;
}

void write_geojson(std::ostream& out, std::span<const HubRow> rows) {
  using Json = nlohmann::ordered_json;
  Json features = Json::array();
  for (const HubRow& r : rows) {
    Json properties = {{"node_id", r.node_id},       {"lat", r.point.lat_deg},
                       {"lon", r.point.lon_deg},     {"rank", r.rank},
                       {"strength", r.strength},     {"norm", r.norm},
                       {"c", r.c},                   {"in_degree", r.in_degree},
                       {"out_degree", r.out_degree}, {"total_degree", r.total_degree}};
    features.push_back({{"type", "Feature"},
                        {"geometry", {{"type", "Point"}, {"coordinates", {r.point.lon_deg, r.point.lat_deg}}}},
                        {"properties", std::move(properties)}});
  }
  const Json collection = {{"type", "FeatureCollection"}, {"features", std::move(features)}};
  out << collection.dump(1) << '\n';
}

}  // namespace roadrank::ranking
