#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bugraph/errors.hpp"

namespace bugraph {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

/// A set of vertices of a graph with at most 64 vertices, stored as a bit mask.
/// Iteration yields members in increasing order.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet from(std::span<const Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  /// The set {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return ((bits_ >> v) & 1U) != 0; }
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  void insert(Vertex v) {
    if (v < 0 || v >= kMaxVertices) throw GraphError("vertex id out of range");
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order on the sorted member lists.
  friend bool lexicographically_less(VertexSet a, VertexSet b) {
    auto av = a.to_vector();
    auto bv = b.to_vector();
    return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on 1..64 vertices.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges) {
    check_order(n);
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has an endpoint outside 0.." + std::to_string(n - 1));
      }
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      g.adj_[u] |= std::uint64_t{1} << v;
      g.adj_[v] |= std::uint64_t{1} << u;
    }
    return g;
  }
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds a graph from adjacency rows; the rows must already be symmetric
  /// and loop-free.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows) {
    check_order(n);
    if (static_cast<int>(rows.size()) != n) throw GraphError("row count does not match order");
    Graph g(n);
    const std::uint64_t mask = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
      if ((rows[v] & ~mask) != 0) throw GraphError("adjacency row refers to missing vertex");
      if (((rows[v] >> v) & 1U) != 0) throw GraphError("self-loop at vertex " + std::to_string(v));
      g.adj_[v] = rows[v];
    }
    for (int u = 0; u < n; ++u)
      for (Vertex v : VertexSet(rows[u]))
        if (((rows[v] >> u) & 1U) == 0) throw GraphError("adjacency rows are not symmetric");
    return g;
  }

  static Graph empty(int n) {
    check_order(n);
    return Graph(n);
  }

  int order() const { return n_; }
  int size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  std::uint64_t row(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return ((adj_[u] >> v) & 1U) != 0; }
  int degree(Vertex v) const { return std::popcount(adj_[v]); }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }
  int min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : VertexSet(adj_[u] & ~VertexSet::range(u + 1).bits())) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const { return 2 * size() == n_ * (n_ - 1); }

  Graph with_edge(Vertex u, Vertex v) const {
    const Edge e{u, v};
    Graph g = from_edge_list(n_, std::span<const Edge>(&e, 1));
    for (int i = 0; i < n_; ++i) g.adj_[i] |= adj_[i];
    return g;
  }

  Graph without_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.adj_[u] &= ~(std::uint64_t{1} << v);
    g.adj_[v] &= ~(std::uint64_t{1} << u);
    return g;
  }

  /// Same graph with vertex `v` mapped to `perm[v]`.
  Graph relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation has wrong length");
    Graph g(n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u)) g.adj_[perm[u]] |= std::uint64_t{1} << perm[v];
    return g;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  explicit Graph(int n) : n_(n) {}

  static void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
      throw GraphError("vertex count " + std::to_string(n) + " outside 1..64");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Hop distance; std::nullopt marks an unreachable vertex.
using Distance = std::optional<int>;
using DistanceVector = std::vector<Distance>;

/// Vertices reachable from `source` inside the vertex mask `allowed`.
inline VertexSet reachable_within(const Graph& g, Vertex source, VertexSet allowed) {
  std::uint64_t seen = std::uint64_t{1} << source;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.row(v);
    next &= allowed.bits() & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

/// True when the subgraph induced by `vs` is connected (empty sets count as
/// connected).
inline bool is_connected_within(const Graph& g, VertexSet vs) {
  if (vs.empty()) return true;
  return reachable_within(g, vs.front(), vs) == vs;
}

inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

inline DistanceVector bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  DistanceVector dist(g.order());
  dist[source] = 0;
  std::uint64_t seen = std::uint64_t{1} << source;
  std::uint64_t frontier = seen;
  for (int level = 1; frontier != 0; ++level) {
    std::uint64_t next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.row(v);
    next &= ~seen;
    for (Vertex v : VertexSet(next)) dist[v] = level;
    seen |= next;
    frontier = next;
  }
  return dist;
}

/// All-pairs hop distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.order()) {
    rows_.reserve(n_);
    for (Vertex s = 0; s < n_; ++s) rows_.push_back(bfs_distances(g, s));
  }

  int order() const { return n_; }
  Distance at(Vertex u, Vertex v) const { return rows_[u][v]; }
  const DistanceVector& row(Vertex u) const { return rows_[u]; }

  bool all_finite() const {
    for (const auto& r : rows_)
      for (const auto& d : r)
        if (!d) return false;
    return true;
  }

 private:
  int n_;
  std::vector<DistanceVector> rows_;
};

inline int diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const Distance& d : bfs_distances(g, s)) {
      if (!d) throw DisconnectedGraph("diameter is undefined for a disconnected graph");
      best = std::max(best, *d);
    }
  }
  return best;
}

/// Connected components of the subgraph induced by `vs`, ordered by minimum
/// vertex id.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet vs) {
  std::vector<VertexSet> out;
  VertexSet rest = vs;
  while (!rest.empty()) {
    VertexSet c = reachable_within(g, rest.front(), rest);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

struct InducedSubgraph {
  Graph graph;
  /// new id -> original id
  std::vector<Vertex> to_original;
  /// original id -> new id, std::nullopt when the vertex was dropped
  std::vector<std::optional<Vertex>> from_original;
};

/// Subgraph induced by `vs`; vertices keep their relative order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs) {
  if (vs.empty()) throw GraphError("induced subgraph of an empty vertex set");
  if (!(vs - g.vertices()).empty()) throw GraphError("vertex set refers to missing vertices");
  std::vector<Vertex> to_original = vs.to_vector();
  std::vector<std::optional<Vertex>> from_original(g.order());
  for (std::size_t i = 0; i < to_original.size(); ++i) from_original[to_original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (vs.contains(u) && vs.contains(v)) edges.emplace_back(*from_original[u], *from_original[v]);
  return {Graph::from_edge_list(static_cast<int>(to_original.size()), edges), std::move(to_original),
          std::move(from_original)};
}

inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace bugraph
