#pragma once

// Discrepancy between the cut {p, q} and a component K of G - {p, q}:
//
//   disc   = avg_{p,q} B(.) - avg_K B(.)
//   disc_P = the same difference with B replaced by its restriction to the
//            pair set P
//
// Pair sets are the primitive; the subset form B_S is the pair set of all
// pairs inside S.

#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bugraph/betweenness.hpp"
#include "bugraph/connectivity.hpp"
#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"
#include "bugraph/rational.hpp"

namespace bugraph {

/// disc restricted to the pair set `pairs`.
inline Rational disc_over_pairs(const GeodesicTable& t, Vertex p, Vertex q, VertexSet K,
                                std::span<const Edge> pairs) {
  Rational cut_side = (pair_induced_betweenness(t, pairs, p) + pair_induced_betweenness(t, pairs, q)) / 2;
  Rational k_side(0);
  for (Vertex u : K) k_side += pair_induced_betweenness(t, pairs, u);
  return cut_side - k_side / K.size();
}

/// avg B over {p, q} minus avg B over K, from full-graph betweenness.
inline Rational disc(const Graph& g, Vertex p, Vertex q, VertexSet K) {
  analyze_two_cut(g, p, q, K);  // validates the cut and the component
  auto bc = vertex_betweenness(g);
  return average_of(bc, VertexSet{p, q}) - average_of(bc, K);
}

struct DiscrepancyBreakdown {
  Rational total;
  /// pairs inside V(K+)
  Rational part_kplus;
  /// pairs inside V(L)
  Rational part_l;
  /// pairs V(K+) x V(L)
  Rational part_cross;

  Rational parts_sum() const { return part_kplus + part_l + part_cross; }
};

/// Three-way split of disc by pair class. `total` comes from full-graph
/// betweenness, the parts from pair-restricted sums, so total == parts_sum()
/// is a real check rather than a tautology.
inline DiscrepancyBreakdown disc_breakdown(const Graph& g, const TwoCutAnalysis& a) {
  validate_analysis(g, a);
  const GeodesicTable table(g);
  const VertexSet kplus = a.k_plus_vertices();
  const VertexSet l = a.l_vertices();
  DiscrepancyBreakdown out;
  out.total = disc(g, a.p, a.q, a.K);
  out.part_kplus = disc_over_pairs(table, a.p, a.q, a.K, pairs_within(kplus));
  out.part_l = disc_over_pairs(table, a.p, a.q, a.K, pairs_within(l));
  out.part_cross = disc_over_pairs(table, a.p, a.q, a.K, pairs_between(kplus, l));
  return out;
}

struct ComponentBreakdown {
  InducedSubgraph subgraph;
  /// analysis in the subgraph's own vertex ids
  TwoCutAnalysis analysis;
  DiscrepancyBreakdown breakdown;
};

struct MultiComponentDiscrepancy {
  Rational whole;
  std::vector<ComponentBreakdown> components;
};

/// Whole-graph disc plus one breakdown per G_i = G[K + {p, q} + L_i].
inline MultiComponentDiscrepancy disc_by_component(const Graph& g, const TwoCutAnalysis& a) {
  MultiComponentDiscrepancy out;
  out.whole = disc(g, a.p, a.q, a.K);
  for (auto& sub : component_subgraphs(g, a)) {
    VertexSet local_k;
    for (Vertex v : a.K) local_k.insert(*sub.from_original[v]);
    TwoCutAnalysis local =
        analyze_two_cut(sub.graph, *sub.from_original[a.p], *sub.from_original[a.q], local_k);
    DiscrepancyBreakdown parts = disc_breakdown(sub.graph, local);
    out.components.push_back({std::move(sub), std::move(local), std::move(parts)});
  }
  return out;
}

/// alpha(w) = d(w, p) - d(w, q); entries for p, q and excluded vertices are
/// empty.
struct AlphaProfile {
  Vertex p = 0;
  Vertex q = 0;
  std::vector<std::optional<int>> alpha;
};

inline AlphaProfile alpha_profile(const Graph& g, Vertex p, Vertex q, VertexSet exclude = {}) {
  g.check_vertex(p);
  g.check_vertex(q);
  if (!is_connected(g)) throw DisconnectedGraph("alpha profile requires a connected graph");
  auto dp = bfs_distances(g, p);
  auto dq = bfs_distances(g, q);
  AlphaProfile out{p, q, std::vector<std::optional<int>>(g.order())};
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == p || w == q || exclude.contains(w)) continue;
    out.alpha[w] = *dp[w] - *dq[w];
  }
  return out;
}

/// Throws InvalidCut unless v has degree 2 with N(v) = {p, q} and pq is not
/// an edge of the connected graph g.
inline void check_case_a(const Graph& g, Vertex p, Vertex q, Vertex v) {
  g.check_vertex(p);
  g.check_vertex(q);
  g.check_vertex(v);
  if (!is_connected(g)) throw DisconnectedGraph("case A analysis requires a connected graph");
  if (p == q || v == p || v == q) throw InvalidCut("case A needs three distinct vertices");
  if (g.neighbors(v) != VertexSet{p, q})
    throw InvalidCut("vertex " + std::to_string(v) + " does not have neighbourhood {p, q}");
  if (g.adjacent(p, q)) throw InvalidCut("pq is an edge, so no geodesic passes through v");
}

namespace detail {

inline PairSet pairs_with(Vertex w, std::initializer_list<Vertex> others) {
  PairSet out;
  for (Vertex o : others) out.emplace_back(std::min(w, o), std::max(w, o));
  return out;
}

inline Rational case_a_measured(const GeodesicTable& t, Vertex p, Vertex q, Vertex v, Vertex w) {
  const PairSet pairs = pairs_with(w, {p, v, q});
  return disc_over_pairs(t, p, q, VertexSet{v}, pairs);
}

inline Rational case_a_closed_form(const GeodesicTable& t, Vertex p, Vertex q, Vertex w) {
  const int alpha = t.dist(w, p) - t.dist(w, q);
  if (std::abs(alpha) <= 1) return Rational(1, 2);
  if (alpha == -2) return (1 - Rational(t.sigma(w, p), t.sigma(w, q))) / 2;
  if (alpha == 2) return (1 - Rational(t.sigma(w, q), t.sigma(w, p))) / 2;
  return Rational(0);
}

}  // namespace detail

/// disc over the pairs K+ x {w} in the case A configuration K = {v},
/// measured from geodesic counts.
inline Rational proposition1_contribution(const Graph& g, Vertex p, Vertex q, Vertex v, Vertex w) {
  check_case_a(g, p, q, v);
  g.check_vertex(w);
  if (w == p || w == q || w == v) throw InvalidCut("w must lie outside K+");
  return detail::case_a_measured(GeodesicTable(g), p, q, v, w);
}

/// Closed form of the same quantity: 1/2 for |alpha| <= 1,
/// (1 - sigma_wp / sigma_wq) / 2 for alpha = -2 (mirrored for +2), 0 for
/// |alpha| >= 3.
inline Rational case_a_prediction(const Graph& g, Vertex p, Vertex q, Vertex v, Vertex w) {
  check_case_a(g, p, q, v);
  g.check_vertex(w);
  if (w == p || w == q || w == v) throw InvalidCut("w must lie outside K+");
  return detail::case_a_closed_form(GeodesicTable(g), p, q, w);
}

struct CaseAInstance {
  Vertex w = 0;
  int alpha = 0;
  Rational measured;
  Rational predicted;
};

/// Measured and predicted contributions for every w outside K+.
inline std::vector<CaseAInstance> case_a_cases(const Graph& g, Vertex p, Vertex q, Vertex v) {
  check_case_a(g, p, q, v);
  const GeodesicTable t(g);
  std::vector<CaseAInstance> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == p || w == q || w == v) continue;
    out.push_back({w, t.dist(w, p) - t.dist(w, q), detail::case_a_measured(t, p, q, v, w),
                   detail::case_a_closed_form(t, p, q, w)});
  }
  return out;
}

/// Contribution of the single pair {p, q}: -1/sigma_pq, which is -1 exactly
/// when p-v-q is the unique pq-geodesic.
inline Rational disc_pq_pair(const Graph& g, Vertex p, Vertex q, Vertex v) {
  check_case_a(g, p, q, v);
  const Edge pair{std::min(p, q), std::max(p, q)};
  return disc_over_pairs(GeodesicTable(g), p, q, VertexSet{v}, std::span<const Edge>(&pair, 1));
}

}  // namespace bugraph
