#pragma once

#include <string>
#include <vector>

#include "bugraph/connectivity.hpp"
#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"

namespace bugraph {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameters(what);
}

}  // namespace detail

/// C_n: 0-1-...-(n-1)-0.
inline Graph cycle(int n) {
  detail::require(n >= 3 && n <= kMaxVertices, "cycle needs 3 <= n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

inline Graph complete(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "complete graph needs 1 <= n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

/// P_n on n vertices: 0-1-...-(n-1).
inline Graph path(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "path needs 1 <= n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

/// K_{a,b} with parts [0, a) and [a, a + b).
inline Graph complete_bipartite(int a, int b) {
  detail::require(a >= 1 && b >= 1 && a + b <= kMaxVertices, "complete bipartite needs a, b >= 1, a + b <= 64");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(a + b, e);
}

/// K_{1,k}, centre 0.
inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, e);
}

/// rows x cols grid, vertex r*cols + c.
inline Graph grid(int rows, int cols) {
  detail::require(rows >= 1 && cols >= 1 && rows * cols <= kMaxVertices, "grid needs rows*cols <= 64");
  std::vector<Edge> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  return Graph::from_edge_list(rows * cols, e);
}

/// Two hubs 0 and 1 joined by `paths` internally disjoint paths of `length`
/// edges each; interiors numbered path by path from 2.
inline Graph theta(int paths, int length) {
  detail::require(paths >= 2 && length >= 2 && 2 + paths * (length - 1) <= kMaxVertices,
                  "theta needs >= 2 paths of length >= 2");
  std::vector<Edge> e;
  int next = 2;
  for (int i = 0; i < paths; ++i) {
    Vertex prev = 0;
    for (int j = 1; j < length; ++j) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph::from_edge_list(next, e);
}

/// Parameters of the extremal diameter construction. k = ell (d - 4) + 3.
struct TightnessParams {
  int ell = 2;
  int d = 5;
  int n = 12;

  int k() const { return ell * (d - 4) + 3; }
  /// number of extra vertices attached to every midpoint
  int w_count() const { return n - k() - 3 * ell + 1; }
  /// the bound floor((k - 3) / ell) + 4
  int diameter_bound() const { return (k() - 3) / ell + 4; }

  void validate() const {
    detail::require(ell >= 2, "ell must be at least 2");
    detail::require(d >= 5, "d must be at least 5");
    detail::require(w_count() >= 0, "n must be at least k + 3*ell - 1 = " + std::to_string(k() + 3 * ell - 1));
    detail::require(n <= kMaxVertices, "construction exceeds 64 vertices");
  }
};

namespace detail {

inline Graph build_tightness(const TightnessParams& p, bool level_cliques) {
  p.validate();
  const int interior = p.d - 1;
  const Vertex u = 0;
  const Vertex v = 1 + p.ell * interior;
  auto on_path = [&](int i, int dist_from_u) -> Vertex {
    if (dist_from_u == 0) return u;
    if (dist_from_u == p.d) return v;
    return 1 + i * interior + (dist_from_u - 1);
  };
  const int mid = p.d / 2;

  std::vector<Edge> e;
  for (int i = 0; i < p.ell; ++i)
    for (int s = 0; s < p.d; ++s) e.emplace_back(on_path(i, s), on_path(i, s + 1));
  for (int i = 0; i < p.ell; ++i) {
    const Vertex y = on_path(i, mid);
    for (int j = 0; j < p.ell; ++j) {
      e.emplace_back(y, on_path(j, mid - 1));
      if (j != i) {
        e.emplace_back(y, on_path(j, mid));
        e.emplace_back(y, on_path(j, mid + 1));
      }
    }
  }
  if (level_cliques) {
    for (int s = 1; s < p.d; ++s)
      for (int i = 0; i < p.ell; ++i)
        for (int j = i + 1; j < p.ell; ++j) e.emplace_back(on_path(i, s), on_path(j, s));
  }
  for (int j = 0; j < p.w_count(); ++j) {
    const Vertex w = v + 1 + j;
    for (int i = 0; i < p.ell; ++i) e.emplace_back(w, on_path(i, mid));
  }
  const Graph g = Graph::from_edge_list(p.n, e);

  if (g.max_degree() != p.n - p.k())
    throw ConstructionError("maximum degree " + std::to_string(g.max_degree()) + " != n - k");
  const int diam = diameter(g);
  if (diam != p.diameter_bound() || diam != p.d)
    throw ConstructionError("diameter " + std::to_string(diam) + " != " + std::to_string(p.diameter_bound()));
  return g;
}

}  // namespace detail

/// Graph with u, v at distance d joined by ell disjoint length-d paths. On
/// path i the vertices at distance floor(d/2) - 1, floor(d/2), floor(d/2) + 1
/// from u are x_i, y_i, z_i. Each y_i is joined to every x_j, every other
/// y_i', and every z_j' with j' != i; each extra vertex w_j is joined to every
/// y_i. Then deg(y_i) = n - k is the maximum degree.
///
/// The path vertices at each distance 1..d-1 from u are also made a clique.
/// Without these level edges the vertices next to u and v keep degree 2 and
/// the graph is only 2-connected; with them it is ell-connected, while
/// distances from u, the diameter and the maximum degree are unchanged.
///
/// Numbering: u = 0, path interiors path-major from 1, v = 1 + ell (d - 1),
/// extra vertices after v. The result is checked for maximum degree n - k,
/// diameter floor((k - 3) / ell) + 4 and ell-connectivity before returning.
inline Graph tightness_construction(const TightnessParams& p) {
  Graph g = detail::build_tightness(p, true);
  if (vertex_connectivity(g) < p.ell) throw ConstructionError("construction is not ell-connected");
  return g;
}

/// The same construction without the level cliques. Maximum degree and
/// diameter are checked; connectivity is only 2 once ell >= 3.
inline Graph tightness_construction_without_levels(const TightnessParams& p) {
  return detail::build_tightness(p, false);
}

}  // namespace bugraph
