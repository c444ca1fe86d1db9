#include <string>

#include "repnum/errors.hpp"
#include "repnum/graph.hpp"

namespace repnum {

// Bit layout: byte 0 is 63 + n. The pairs (i, j), i < j, are taken column
// by column (j = 1..n-1, i = 0..j-1), packed six to a byte, most
// significant bit first, each byte offset by 63, last byte zero-padded.

SimpleGraph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > 62) throw ParseError("graph6: only graphs with at most 62 vertices are supported", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() < 1 + bytes) throw ParseError("graph6: truncated bit stream", line.size());
  if (line.size() > 1 + bytes) throw ParseError("graph6: trailing bytes", 1 + bytes);

  SimpleGraph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
      if ((value >> (5 - bit % 6)) & 1) g.set_edge(i, j);
    }
  }
  return g;
}

std::string write_graph6(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 62) throw ContractError("graph6: only graphs with at most 62 vertices are supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

}  // namespace repnum
