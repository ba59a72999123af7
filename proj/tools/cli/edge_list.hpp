#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "distspec/graph.hpp"

namespace distspec::cli {

class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Parses the edge-list format:
///
///   # comment
///   p <vertex_count>
///   e <u> <v>        (0-based, one line per edge)
///
/// Blank lines and lines starting with '#' are ignored. Self-loops, duplicate
/// edges, out-of-range endpoints and malformed lines are rejected with the
/// offending line number.
Graph parse_edge_list(std::string_view text, const std::string& name = "edge-list");

/// Inverse of parse_edge_list (labels are dropped).
std::string write_edge_list(const Graph& g);

}  // namespace distspec::cli
