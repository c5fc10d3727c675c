#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"
#include "bugraph/rational.hpp"

namespace bugraph {

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s, t, computed by unit-capacity augmenting paths on the vertex-split
/// graph. Stops early once `limit` paths are found.
inline int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t,
                                     int limit = std::numeric_limits<int>::max()) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t || g.adjacent(s, t)) throw Error("local connectivity needs distinct non-adjacent vertices");

  // node 2v = v_in, 2v+1 = v_out
  const int n = g.order();
  const int nodes = 2 * n;
  constexpr int kInf = 1 << 20;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  for (Vertex v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
    for (Vertex w : g.neighbors(v)) at(2 * v + 1, 2 * w) = kInf;
  }

  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  std::vector<int> queue;
  queue.reserve(nodes);
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
      const int a = queue[head];
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

/// kappa(G): 0 for disconnected graphs, n - 1 for complete graphs.
inline int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) return 0;
  const int n = g.order();
  if (g.is_complete()) return n - 1;
  int best = g.min_degree();
  // Some vertex among the first best+1 lies outside any minimum separator.
  for (Vertex s = 0; s < n && s <= best; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

/// n > k and no vertex cut of size < k.
inline bool is_k_connected(const Graph& g, int k) {
  if (g.order() <= k) return false;
  if (k <= 0) return true;
  if (!is_connected(g)) return false;
  return vertex_connectivity(g) >= k;
}

/// True when removing `cut` leaves at least two vertices that are not all
/// connected.
inline bool is_vertex_cut(const Graph& g, VertexSet cut) {
  const VertexSet rest = g.vertices() - cut;
  return rest.size() >= 2 && !is_connected_within(g, rest);
}

/// Every pair {p, q} whose removal disconnects g, lexicographically sorted.
inline std::vector<Edge> all_two_cuts(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("two-cuts require a connected graph");
  std::vector<Edge> out;
  for (Vertex p = 0; p < g.order(); ++p)
    for (Vertex q = p + 1; q < g.order(); ++q)
      if (is_vertex_cut(g, VertexSet{p, q})) out.emplace_back(p, q);
  return out;
}

enum class CaseTag {
  A,             // |K| = 1
  B,             // p and q each have >= 2 neighbours in K
  Unclassified,  // neither; impossible for a minimal cut
};

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::Unclassified: return "unclassified";
  }
  return "?";
}

/// A two-cut {p, q}, a chosen component K of G - {p, q}, and the remaining
/// components L_1..L_j.
struct TwoCutAnalysis {
  Vertex p = 0;
  Vertex q = 0;
  VertexSet K;
  std::vector<VertexSet> Ls;
  CaseTag case_tag = CaseTag::Unclassified;
  int k = 0;
  /// |V| - k - 2
  int ell = 0;

  VertexSet cut() const { return VertexSet{p, q}; }
  VertexSet k_plus_vertices() const { return K | cut(); }
  VertexSet l_vertices() const {
    VertexSet all;
    for (VertexSet c : Ls) all = all | c;
    return all;
  }
};

inline CaseTag classify_case(const Graph& g, Vertex p, Vertex q, VertexSet K) {
  if (K.size() == 1) return CaseTag::A;
  if ((g.neighbors(p) & K).size() >= 2 && (g.neighbors(q) & K).size() >= 2) return CaseTag::B;
  return CaseTag::Unclassified;
}

namespace detail {

inline TwoCutAnalysis make_analysis(const Graph& g, Vertex p, Vertex q, VertexSet K,
                                    const std::vector<VertexSet>& comps) {
  TwoCutAnalysis a;
  a.p = std::min(p, q);
  a.q = std::max(p, q);
  a.K = K;
  for (VertexSet c : comps)
    if (c != K) a.Ls.push_back(c);
  a.k = K.size();
  a.ell = g.order() - a.k - 2;
  a.case_tag = classify_case(g, a.p, a.q, K);
  return a;
}

inline std::vector<VertexSet> cut_components(const Graph& g, Vertex p, Vertex q) {
  g.check_vertex(p);
  g.check_vertex(q);
  if (p == q) throw InvalidCut("cut vertices must be distinct");
  if (!is_vertex_cut(g, VertexSet{p, q}))
    throw InvalidCut("{" + std::to_string(p) + "," + std::to_string(q) + "} is not a vertex cut");
  return components_within(g, g.vertices() - VertexSet{p, q});
}

}  // namespace detail

/// Analysis of the cut {p, q} with K chosen as a smallest component of
/// G - {p, q} (lexicographically smallest on ties).
inline TwoCutAnalysis analyze_two_cut(const Graph& g, Vertex p, Vertex q) {
  auto comps = detail::cut_components(g, p, q);
  VertexSet best = comps.front();
  for (VertexSet c : comps)
    if (c.size() < best.size() || (c.size() == best.size() && lexicographically_less(c, best))) best = c;
  return detail::make_analysis(g, p, q, best, comps);
}

/// Analysis of the cut {p, q} with an explicitly chosen component K.
inline TwoCutAnalysis analyze_two_cut(const Graph& g, Vertex p, Vertex q, VertexSet K) {
  auto comps = detail::cut_components(g, p, q);
  if (std::find(comps.begin(), comps.end(), K) == comps.end())
    throw InvalidCut("K is not a component of G - {p, q}");
  return detail::make_analysis(g, p, q, K, comps);
}

/// Throws InvalidCut unless `a` describes a valid cut and component split of g.
inline void validate_analysis(const Graph& g, const TwoCutAnalysis& a) {
  auto comps = detail::cut_components(g, a.p, a.q);
  if (std::find(comps.begin(), comps.end(), a.K) == comps.end())
    throw InvalidCut("analysis K is not a component of G - {p, q}");
  std::vector<VertexSet> rest;
  for (VertexSet c : comps)
    if (c != a.K) rest.push_back(c);
  if (rest != a.Ls) throw InvalidCut("analysis components do not match the graph");
  if (a.k != a.K.size() || a.ell != g.order() - a.k - 2) throw InvalidCut("analysis sizes are inconsistent");
}

/// Among all two-cuts, one minimizing the smallest component K. Ties go to
/// the lexicographically smallest (p, q), then the smallest K.
inline TwoCutAnalysis minimal_two_cut(const Graph& g) {
  const int kappa = vertex_connectivity(g);
  if (kappa != 2) throw NotExactlyTwoConnected(kappa);
  std::optional<TwoCutAnalysis> best;
  for (auto [p, q] : all_two_cuts(g)) {
    TwoCutAnalysis a = analyze_two_cut(g, p, q);
    if (!best || a.k < best->k) best = std::move(a);
  }
  return *best;
}

/// G_i = G[K + {p, q} + L_i] for each remaining component L_i.
inline std::vector<InducedSubgraph> component_subgraphs(const Graph& g, const TwoCutAnalysis& a) {
  validate_analysis(g, a);
  std::vector<InducedSubgraph> out;
  for (VertexSet li : a.Ls) out.push_back(induced_subgraph(g, a.k_plus_vertices() | li));
  return out;
}

/// K+ = G[K + {p, q}].
inline InducedSubgraph k_plus(const Graph& g, const TwoCutAnalysis& a) {
  validate_analysis(g, a);
  return induced_subgraph(g, a.k_plus_vertices());
}

/// Mean distance from u: sum_v d(v, u) / n.
inline Rational mean_distance_to(const Graph& g, Vertex u) {
  BigInt total = 0;
  for (const Distance& d : bfs_distances(g, u)) {
    if (!d) throw DisconnectedGraph("mean distance requires a connected graph");
    total += *d;
  }
  return Rational(total, g.order());
}

/// Largest possible mean distance to a vertex in a 2-connected graph on n
/// vertices: n/4 for even n, n/4 - 1/(4n) for odd n. Attained by cycles.
inline Rational two_connected_mean_distance_bound(int n) {
  if (n % 2 == 0) return Rational(n, 4);
  return Rational(n, 4) - Rational(1, 4 * n);
}

}  // namespace bugraph
