#pragma once

// graph6 reader/writer. Only the dense undirected format is supported:
//
//   N(n)  one byte n+63 for n <= 62, otherwise 126 followed by three 6-bit
//         big-endian groups (each +63)
//   R(x)  the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed
//         big-endian into 6-bit groups, zero padded, each +63

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"

namespace bugraph {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline int graph6_value(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw MalformedGraph6("character code " + std::to_string(v) + " outside 63..126");
  return v - 63;
}

}  // namespace detail

/// Decodes a single graph6 string (no trailing newline). A leading
/// ">>graph6<<" header is tolerated.
inline Graph decode_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw MalformedGraph6("empty graph6 string");

  for (char c : line) detail::graph6_value(c);

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = detail::graph6_value(line[0]);
    pos = 1;
  } else {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
      throw Unsupported("graph6 size field for n > 258047");
    if (line.size() < 4) throw MalformedGraph6("truncated size field");
    n = (detail::graph6_value(line[1]) << 12) | (detail::graph6_value(line[2]) << 6) |
        detail::graph6_value(line[3]);
    if (n < 63) throw MalformedGraph6("four-byte size field used for n < 63");
    pos = 4;
  }
  if (n == 0) throw Unsupported("graphs with zero vertices are not supported");
  if (n > kMaxVertices) throw Unsupported("graph6 graph with " + std::to_string(n) + " vertices exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (line.size() - pos != groups) {
    throw MalformedGraph6("expected " + std::to_string(groups) + " data bytes for n=" + std::to_string(n) +
                          ", found " + std::to_string(line.size() - pos));
  }

  std::array<std::uint64_t, kMaxVertices> rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = detail::graph6_value(line[pos + k / 6]);
      if (((group >> (5 - k % 6)) & 1) != 0) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = detail::graph6_value(line.back());
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((last & pad_mask) != 0) throw MalformedGraph6("nonzero padding bits");
  }
  return Graph::from_rows(static_cast<int>(n), std::span<const std::uint64_t>(rows.data(), n));
}

/// Shortest graph6 encoding of `g`, without header or newline.
inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Line-oriented graph6 reader over a stream. Holds one line at a time.
/// Blank lines are skipped; a ">>graph6<<" header may prefix any line.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}

  struct Entry {
    std::size_t line;
    Graph graph;
  };

  /// Next graph, or std::nullopt at end of input. Throws MalformedGraph6
  /// carrying the 1-based line number.
  std::optional<Entry> next() {
    while (std::getline(*in_, buffer_)) {
      ++line_;
      std::string_view view(buffer_);
      if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
      if (view.starts_with(kGraph6Header)) view.remove_prefix(kGraph6Header.size());
      if (view.empty()) continue;
      try {
        return Entry{line_, decode_graph6(view)};
      } catch (const MalformedGraph6& e) {
        throw MalformedGraph6(e.what(), line_);
      } catch (const Unsupported& e) {
        throw Unsupported("line " + std::to_string(line_) + ": " + e.what());
      }
    }
    return std::nullopt;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream* in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace bugraph
