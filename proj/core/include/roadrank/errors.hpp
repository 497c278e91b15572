#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace roadrank {

/// Base of every error the library raises on bad input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A CSV row that cannot be parsed. `line()` is 1-based and counts the header.
class MalformedRow : public InputError {
 public:
  MalformedRow(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateNodeId : public InputError {
 public:
  DuplicateNodeId(std::size_t line, std::uint64_t node_id);
  std::size_t line() const noexcept { return line_; }
  std::uint64_t node_id() const noexcept { return node_id_; }

 private:
  std::size_t line_;
  std::uint64_t node_id_;
};

class CoordinateOutOfRange : public InputError {
 public:
  CoordinateOutOfRange(std::size_t line, double lat_deg, double lon_deg);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An edge names a node id that is not in the node list. `edge_row()` is the
/// 0-based position of the offending edge in the edge list.
class UnknownEndpoint : public InputError {
 public:
  UnknownEndpoint(std::size_t edge_row, std::uint64_t node_id);
  std::size_t edge_row() const noexcept { return edge_row_; }
  std::uint64_t node_id() const noexcept { return node_id_; }

 private:
  std::size_t edge_row_;
  std::uint64_t node_id_;
};

class EmptyGraph : public InputError {
 public:
  EmptyGraph();
};

/// A node without outgoing links; the transition model is undefined for it.
class DanglingNode : public InputError {
 public:
  explicit DanglingNode(std::uint64_t node_id);
  std::uint64_t node_id() const noexcept { return node_id_; }

 private:
  std::uint64_t node_id_;
};

/// A requested top/bottom/removal count exceeds what the graph holds.
class InvalidSelection : public InputError {
 public:
  InvalidSelection(std::size_t requested, std::size_t available);
};

class ZeroVariance : public InputError {
 public:
  explicit ZeroVariance(const std::string& which);
};

class NonPositiveValue : public InputError {
 public:
  explicit NonPositiveValue(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace roadrank
