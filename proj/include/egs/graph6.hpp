#ifndef EGS_GRAPH6_HPP
#define EGS_GRAPH6_HPP

// graph6 codec for the single-byte header range (1 <= n <= 62).
//
// Layout: one byte n+63, then the upper triangle x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed six bits per byte (most significant first), each
// byte offset by 63, final byte zero-padded.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "egs/graph.hpp"

namespace egs {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline constexpr std::size_t graph6_length(std::size_t n) {
  std::size_t bits = n * (n - 1) / 2;
  return 1 + (bits + 5) / 6;
}

template <std::size_t Words>
std::string encode_graph6(const BasicGraph<Words>& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > kGraph6MaxOrder)
    throw GraphError("graph6 supports 1..62 vertices, got " + std::to_string(n));
  std::string out;
  out.reserve(graph6_length(n));
  out.push_back(static_cast<char>(n + 63));
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw FormatError("empty graph6 word");
  for (std::size_t i = 0; i < line.size(); ++i) {
    auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      throw FormatError("byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                        " outside graph6 range 63..126");
  }
  const std::size_t n = static_cast<unsigned char>(line[0]) - 63;
  if (n == 0 || n > kGraph6MaxOrder)
    throw FormatError("unsupported graph6 order header '" + std::string(1, line[0]) + "'");
  if (line.size() != graph6_length(n))
    throw FormatError("graph6 length " + std::to_string(line.size()) + " does not match n=" +
                      std::to_string(n) + " (expected " + std::to_string(graph6_length(n)) + ")");

  GraphBuilder<1> b(n);
  std::size_t byte = 1;
  int bit = 5;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      unsigned value = static_cast<unsigned char>(line[byte]) - 63u;
      if ((value >> bit) & 1u) b.add_edge(i, j);
      if (--bit < 0) {
        bit = 5;
        ++byte;
      }
    }
  }
  if (bit != 5) {
    unsigned pad = (static_cast<unsigned char>(line[byte]) - 63u) & ((1u << (bit + 1)) - 1);
    if (pad != 0) throw FormatError("nonzero padding bits in graph6 word");
  }
  return b.build();
}

}  // namespace egs

#endif  // EGS_GRAPH6_HPP
