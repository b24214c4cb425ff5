#ifndef CSR_GRAPH6_HPP
#define CSR_GRAPH6_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csr/errors.hpp"
#include "csr/graph.hpp"

namespace csr {

namespace detail {

inline void graph6_put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

inline unsigned graph6_value(char c, std::size_t pos) {
  auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw Graph6Error("graph6: byte " + std::to_string(b) + " at offset " +
                      std::to_string(pos) + " outside 63..126");
  return b - 63U;
}

}  // namespace detail

// Standard graph6: order header, then the upper triangle column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, MSB first.
inline std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  detail::graph6_put_order(out, n);
  unsigned acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

// Accepts an optional ">>graph6<<" header and one trailing newline.
inline Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw Graph6Error("graph6: truncated order header");
      v = (v << 6) | detail::graph6_value(text[pos], pos);
      ++pos;
    }
    return v;
  };
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = take(1);
  } else {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      n = take(6);
    } else {
      n = take(3);
    }
  }

  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes)
    throw Graph6Error("graph6: truncated adjacency section (expected " +
                      std::to_string(nbytes) + " bytes, got " +
                      std::to_string(text.size() - pos) + ")");
  if (text.size() - pos > nbytes) throw Graph6Error("graph6: trailing bytes after adjacency section");

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      unsigned v = detail::graph6_value(text[at], at);
      if ((v >> (5 - bit % 6)) & 1U) b.add_edge(i, j);
    }
  }
  // Padding bytes are validated too.
  for (std::size_t at = pos; at < text.size(); ++at) detail::graph6_value(text[at], at);
  return std::move(b).finish();
}

}  // namespace csr

#endif  // CSR_GRAPH6_HPP
