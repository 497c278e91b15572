#include "roadrank/errors.hpp"

#include <fmt/format.h>

namespace roadrank {

MalformedRow::MalformedRow(std::size_t line, const std::string& reason)
    : InputError(fmt::format("malformed row at line {}: {}", line, reason)), line_(line) {}

DuplicateNodeId::DuplicateNodeId(std::size_t line, std::uint64_t node_id)
    : InputError(fmt::format("duplicate node id {} at line {}", node_id, line)),
      line_(line),
      node_id_(node_id) {}

CoordinateOutOfRange::CoordinateOutOfRange(std::size_t line, double lat_deg, double lon_deg)
    : InputError(fmt::format("coordinate ({}, {}) out of range at line {}", lat_deg, lon_deg, line)),
      line_(line) {}

UnknownEndpoint::UnknownEndpoint(std::size_t edge_row, std::uint64_t node_id)
    : InputError(fmt::format("edge #{} references unknown node id {}", edge_row, node_id)),
      edge_row_(edge_row),
      node_id_(node_id) {}

EmptyGraph::EmptyGraph() : InputError("graph has no nodes") {}

DanglingNode::DanglingNode(std::uint64_t node_id)
    : InputError(fmt::format("node {} has no outgoing links", node_id)), node_id_(node_id) {}

InvalidSelection::InvalidSelection(std::size_t requested, std::size_t available)
    : InputError(fmt::format("selection of {} exceeds the {} available nodes", requested, available)) {}

ZeroVariance::ZeroVariance(const std::string& which)
    : InputError(fmt::format("{} has zero variance", which)) {}

NonPositiveValue::NonPositiveValue(std::size_t index)
    : InputError(fmt::format("value at index {} is not positive", index)), index_(index) {}

}  // namespace roadrank
