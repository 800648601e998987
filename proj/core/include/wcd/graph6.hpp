#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wcd/graph.hpp"

namespace wcd {

/// graph6 decode failure; byte_offset points at the offending byte of the
/// input line (0-based, after any ">>graph6<<" header has been skipped).
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Decodes one graph6 line (an optional ">>graph6<<" header prefix is
/// accepted and skipped). Orders 1..62 use the single-byte N(n) prefix;
/// 63 and 64 use the standard 126-prefixed 18-bit form. Anything outside
/// [1, 64], an out-of-range byte, a truncated line, or nonzero padding
/// bits raises Graph6Error.
Graph parse_graph6(std::string_view line);

/// Encodes g as a graph6 line (no trailing newline). Inverse of
/// parse_graph6 for every supported order.
std::string to_graph6(const Graph& g);

}  // namespace wcd
