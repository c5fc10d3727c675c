#pragma once

// Exact betweenness centrality.
//
// All sums run over unordered vertex pairs {s, t}; each pair is attributed
// once by accumulating only targets t > s from every source s. Values are
// exact rationals; nothing in this file uses floating point.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"
#include "bugraph/rational.hpp"

namespace bugraph {

/// Shortest-path counts and the shortest-path DAG from one source.
struct PathCounts {
  Vertex source = 0;
  std::vector<BigInt> sigma;
  std::vector<int> dist;
  /// predecessors[v] = neighbours u of v with dist[u] + 1 == dist[v]
  std::vector<VertexSet> predecessors;
  /// vertices in non-decreasing distance order (BFS order)
  std::vector<Vertex> order;
};

inline PathCounts path_counts(const Graph& g, Vertex source) {
  g.check_vertex(source);
  const int n = g.order();
  PathCounts pc;
  pc.source = source;
  pc.sigma.assign(n, BigInt(0));
  pc.dist.assign(n, -1);
  pc.predecessors.assign(n, VertexSet{});
  pc.order.reserve(n);

  pc.dist[source] = 0;
  pc.sigma[source] = 1;
  pc.order.push_back(source);
  for (std::size_t head = 0; head < pc.order.size(); ++head) {
    const Vertex v = pc.order[head];
    for (Vertex w : g.neighbors(v)) {
      if (pc.dist[w] < 0) {
        pc.dist[w] = pc.dist[v] + 1;
        pc.order.push_back(w);
      }
      if (pc.dist[w] == pc.dist[v] + 1) {
        pc.sigma[w] += pc.sigma[v];
        pc.predecessors[w].insert(v);
      }
    }
  }
  if (static_cast<int>(pc.order.size()) != n)
    throw DisconnectedGraph("betweenness is only defined for connected graphs");
  return pc;
}

struct EdgeValue {
  Edge edge;
  Rational value;
};

struct BetweennessReport {
  std::vector<Rational> vertex_bc;
  /// in Graph::edges() order
  std::vector<EdgeValue> edge_bc;
  std::vector<Rational> adjusted;
  bool uniform = false;
  /// max - min of vertex_bc
  Rational spread;
};

namespace detail {

struct Accumulated {
  std::vector<Rational> vertex;
  std::vector<Rational> edge;  // indexed like Graph::edges()
};

inline Accumulated accumulate_betweenness(const Graph& g, bool with_edges) {
  const int n = g.order();
  Accumulated acc;
  acc.vertex.assign(n, Rational(0));

  std::vector<Edge> edges;
  std::vector<int> edge_index;
  if (with_edges) {
    edges = g.edges();
    acc.edge.assign(edges.size(), Rational(0));
    edge_index.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      edge_index[u * n + v] = edge_index[v * n + u] = static_cast<int>(i);
    }
  }

  std::vector<Rational> delta(n);
  for (Vertex s = 0; s < n; ++s) {
    const PathCounts pc = path_counts(g, s);
    std::fill(delta.begin(), delta.end(), Rational(0));
    for (auto it = pc.order.rbegin(); it != pc.order.rend(); ++it) {
      const Vertex w = *it;
      if (w == s) continue;
      // (1[w is a counted target] + delta[w]) / sigma[w]
      Rational share = delta[w];
      if (w > s) share += 1;
      share /= pc.sigma[w];
      for (Vertex v : pc.predecessors[w]) {
        Rational c = share * pc.sigma[v];
        if (with_edges) acc.edge[edge_index[v * n + w]] += c;
        if (v != s) delta[v] += c;
      }
      acc.vertex[w] += delta[w];
    }
  }
  return acc;
}

}  // namespace detail

/// B(x) for every vertex.
inline std::vector<Rational> vertex_betweenness(const Graph& g) {
  return detail::accumulate_betweenness(g, false).vertex;
}

/// B(e) for every edge, in Graph::edges() order.
inline std::vector<EdgeValue> edge_betweenness(const Graph& g) {
  auto acc = detail::accumulate_betweenness(g, true);
  auto edges = g.edges();
  std::vector<EdgeValue> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) out.push_back({edges[i], std::move(acc.edge[i])});
  return out;
}

namespace detail {

inline std::vector<Rational> adjusted_from_edges(int n, std::span<const EdgeValue> edges) {
  std::vector<Rational> adjusted(n, Rational(0));
  for (const auto& e : edges) {
    adjusted[e.edge.first] += e.value;
    adjusted[e.edge.second] += e.value;
  }
  return adjusted;
}

}  // namespace detail

/// B_a(x): sum of B(e) over edges incident to x.
inline std::vector<Rational> adjusted_betweenness(const Graph& g) {
  auto edges = edge_betweenness(g);
  return detail::adjusted_from_edges(g.order(), edges);
}

inline BetweennessReport betweenness_report(const Graph& g) {
  auto acc = detail::accumulate_betweenness(g, true);
  BetweennessReport r;
  auto edges = g.edges();
  r.edge_bc.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) r.edge_bc.push_back({edges[i], std::move(acc.edge[i])});
  r.adjusted = detail::adjusted_from_edges(g.order(), r.edge_bc);
  r.vertex_bc = std::move(acc.vertex);
  auto [lo, hi] = std::minmax_element(r.vertex_bc.begin(), r.vertex_bc.end());
  r.spread = *hi - *lo;
  r.uniform = r.spread == 0;
  return r;
}

/// Right-hand side of B(x) = (B_a(x) - n + 1) / 2.
inline Rational betweenness_from_adjusted(const Rational& adjusted, int n) { return (adjusted - n + 1) / 2; }

struct UniformityVerdict {
  bool uniform = false;
  /// common value when uniform
  std::optional<Rational> value;
};

inline UniformityVerdict is_betweenness_uniform(const Graph& g) {
  auto bc = vertex_betweenness(g);
  for (const auto& b : bc)
    if (b != bc.front()) return {false, std::nullopt};
  return {true, bc.front()};
}

/// All-pairs distances and geodesic counts of a connected graph.
class GeodesicTable {
 public:
  explicit GeodesicTable(const Graph& g) : n_(g.order()) {
    dist_.reserve(static_cast<std::size_t>(n_) * n_);
    sigma_.reserve(static_cast<std::size_t>(n_) * n_);
    for (Vertex s = 0; s < n_; ++s) {
      PathCounts pc = path_counts(g, s);
      dist_.insert(dist_.end(), pc.dist.begin(), pc.dist.end());
      for (auto& c : pc.sigma) sigma_.push_back(std::move(c));
    }
  }

  int order() const { return n_; }
  int dist(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  const BigInt& sigma(Vertex u, Vertex v) const { return sigma_[u * n_ + v]; }

  /// sigma_{x,y}(u) / sigma_{x,y}; zero when u is an endpoint.
  Rational dependency(Vertex x, Vertex y, Vertex u) const {
    if (u == x || u == y || x == y) return Rational(0);
    if (dist(x, u) + dist(u, y) != dist(x, y)) return Rational(0);
    return Rational(sigma(x, u) * sigma(u, y), sigma(x, y));
  }

 private:
  int n_;
  std::vector<int> dist_;
  std::vector<BigInt> sigma_;
};

using PairSet = std::vector<Edge>;

/// All unordered pairs {x, y} with x < y inside `s`.
inline PairSet pairs_within(VertexSet s) {
  PairSet out;
  auto vs = s.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) out.emplace_back(vs[i], vs[j]);
  return out;
}

/// All pairs {x, y} with x in `a`, y in `b`; `a` and `b` must be disjoint.
inline PairSet pairs_between(VertexSet a, VertexSet b) {
  if (!(a & b).empty()) throw Error("pairs_between requires disjoint sets");
  PairSet out;
  for (Vertex x : a)
    for (Vertex y : b) out.emplace_back(std::min(x, y), std::max(x, y));
  return out;
}

inline Rational pair_induced_betweenness(const GeodesicTable& t, std::span<const Edge> pairs, Vertex u) {
  Rational sum(0);
  for (auto [x, y] : pairs) sum += t.dependency(x, y, u);
  return sum;
}

/// Sum over {x, y} in `pairs`, u not in {x, y}, of sigma_{x,y}(u) / sigma_{x,y}.
inline Rational pair_induced_betweenness(const Graph& g, std::span<const Edge> pairs, Vertex u) {
  g.check_vertex(u);
  for (auto [x, y] : pairs) {
    g.check_vertex(x);
    g.check_vertex(y);
  }
  return pair_induced_betweenness(GeodesicTable(g), pairs, u);
}

/// B_S(u): betweenness of u counting only pairs inside s \ {u}.
inline Rational subset_induced_betweenness(const Graph& g, VertexSet s, Vertex u) {
  if (s.empty()) throw Error("subset_induced_betweenness requires a nonempty set");
  s.erase(u);
  return pair_induced_betweenness(g, pairs_within(s), u);
}

inline Rational average_of(std::span<const Rational> values, VertexSet subset) {
  if (subset.empty()) throw Error("average over an empty vertex set");
  Rational sum(0);
  for (Vertex v : subset) sum += values[v];
  return sum / subset.size();
}

/// Mean of B(u) over the subset.
inline Rational average_betweenness(const Graph& g, VertexSet subset) {
  if (subset.empty()) throw Error("average over an empty vertex set");
  if (!(subset - g.vertices()).empty()) throw GraphError("subset refers to missing vertices");
  auto bc = vertex_betweenness(g);
  return average_of(bc, subset);
}

/// Mean betweenness from the ordered distance sum:
/// (n-1)/2 * (sum_{(u,v)} d(u,v) / (n(n-1)) - 1). Zero for a single vertex.
inline Rational mean_betweenness_via_distance(const Graph& g) {
  const int n = g.order();
  BigInt total = 0;
  for (Vertex s = 0; s < n; ++s) {
    for (const Distance& d : bfs_distances(g, s)) {
      if (!d) throw DisconnectedGraph("mean betweenness is only defined for connected graphs");
      total += *d;
    }
  }
  if (n == 1) return Rational(0);
  return Rational(n - 1, 2) * (Rational(total, BigInt(n) * (n - 1)) - 1);
}

}  // namespace bugraph
