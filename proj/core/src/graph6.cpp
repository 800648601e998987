#include "wcd/graph6.hpp"

namespace wcd {

namespace {

constexpr int kLo = 63;   // printable offset: byte value 63 encodes 0
constexpr int kHi = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view s, std::size_t off) {
  const unsigned char c = static_cast<unsigned char>(s[off]);
  if (c < kLo || c > kHi) throw Graph6Error("byte outside graph6 range [63,126]", off);
  return c - kLo;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) throw Graph6Error("empty graph6 string", 0);

  std::size_t off = 0;
  long order;
  if (static_cast<unsigned char>(line[0]) == 126) {
    // N(n) long form: 126 then 18 bits in three bytes. 126 126 (the 36-bit
    // form) only encodes orders far past the cap, so reject it outright.
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
      throw Graph6Error("order exceeds the supported maximum of 64", 1);
    if (line.size() < 4) throw Graph6Error("truncated long-form order prefix", line.size());
    order = 0;
    for (off = 1; off <= 3; ++off) order = (order << 6) | decode_byte(line, off);
  } else {
    order = decode_byte(line, 0);
    off = 1;
  }
  if (order < 1 || order > kMaxOrder)
    throw Graph6Error("order " + std::to_string(order) + " outside supported range [1, 64]", 0);

  const int n = static_cast<int>(order);
  Graph g(n);
  int bits_left = 0, current = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (bits_left == 0) {
        if (off >= line.size()) throw Graph6Error("truncated adjacency data", line.size());
        current = decode_byte(line, off);
        ++off;
        bits_left = 6;
      }
      if (current & (1 << (bits_left - 1))) g.add_edge(row, col);
      --bits_left;
    }
  }
  if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0)
    throw Graph6Error("nonzero padding bits", off - 1);
  if (off != line.size()) throw Graph6Error("trailing bytes after adjacency data", off);
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLo));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kLo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kLo));
    out.push_back(static_cast<char>((n & 0x3f) + kLo));
  }
  int bits_used = 0, current = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      current = (current << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++bits_used == 6) {
        out.push_back(static_cast<char>(current + kLo));
        bits_used = 0;
        current = 0;
      }
    }
  }
  if (bits_used > 0) out.push_back(static_cast<char>((current << (6 - bits_used)) + kLo));
  return out;
}

}  // namespace wcd
