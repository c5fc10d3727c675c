#pragma once

// Canonical forms for small graphs.
//
// The form is the lexicographically smallest upper-triangle bit string, in
// graph6 column order, over all vertex orderings that list the cells of the
// stable degree refinement in their canonical order. The search places
// vertices position by position, prunes any prefix larger than the best
// string found so far, and skips siblings that are equivalent under
// automorphisms already discovered (those fixing the current prefix).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"

namespace bugraph {

inline constexpr int kMaxCanonicalOrder = 10;

struct CanonicalForm {
  int n = 0;
  /// bit k of the graph6 upper-triangle string sits at position total-1-k,
  /// so integer order equals lexicographic order
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  Graph to_graph() const {
    const int total = n * (n - 1) / 2;
    std::vector<Edge> edges;
    int k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (((bits >> (total - 1 - k)) & 1U) != 0) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[pos] = original vertex placed at canonical position pos
  std::vector<Vertex> order;
};

namespace detail {

/// Stable colouring by iterated (colour, sorted neighbour colours); colours
/// are ranks of the sorted signatures, so the result is label-invariant.
inline std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  std::vector<std::vector<int>> sig(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      sig[v].assign(1, color[v]);
      for (Vertex w : g.neighbors(v)) sig[v].push_back(color[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_(n_ * (n_ - 1) / 2) {
    color_ = refined_colors(g);
    cell_of_position_ = color_;
    std::sort(cell_of_position_.begin(), cell_of_position_.end());
    perm_.assign(n_, -1);
  }

  CanonicalLabeling run() {
    descend(0, 0, 0, false);
    return {CanonicalForm{n_, best_}, best_perm_};
  }

 private:
  static constexpr std::size_t kMaxAutomorphisms = 64;

  void descend(int pos, std::uint64_t used, std::uint64_t cur, bool below) {
    if (pos == n_) {
      if (!have_best_ || cur < best_) {
        best_ = cur;
        best_perm_ = perm_;
        have_best_ = true;
      } else if (cur == best_ && automorphisms_.size() < kMaxAutomorphisms) {
        std::vector<Vertex> gamma(n_);
        for (int i = 0; i < n_; ++i) gamma[best_perm_[i]] = perm_[i];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }
    // bits still unfixed after placing position pos
    const int shift = total_ - (pos * (pos + 1)) / 2;
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (((used >> v) & 1U) != 0 || color_[v] != cell_of_position_[pos]) continue;
      if (equivalent_to_tried(pos, v, tried)) continue;
      tried.push_back(v);

      std::uint64_t next = cur;
      const int base = pos * (pos - 1) / 2;
      for (int i = 0; i < pos; ++i)
        if (g_.adjacent(perm_[i], v)) next |= std::uint64_t{1} << (total_ - 1 - (base + i));

      bool next_below = below;
      if (have_best_ && !below) {
        const std::uint64_t a = shift >= 64 ? 0 : (next >> shift);
        const std::uint64_t b = shift >= 64 ? 0 : (best_ >> shift);
        if (a > b) continue;
        next_below = a < b;
      }
      perm_[pos] = v;
      descend(pos + 1, used | (std::uint64_t{1} << v), next, next_below);
      perm_[pos] = -1;
    }
  }

  /// True when v lies in the orbit of an already explored sibling under the
  /// automorphisms found so far that fix perm_[0..pos) pointwise.
  bool equivalent_to_tried(int pos, Vertex v, const std::vector<Vertex>& tried) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < pos && fixes; ++i) fixes = gamma[perm_[i]] == perm_[i];
      if (!fixes) continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const Vertex root = find(v);
    for (Vertex u : tried)
      if (find(u) == root) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::vector<Vertex> perm_;
  std::vector<Vertex> best_perm_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw TooLarge("canonical forms are limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

/// g relabelled into canonical order.
inline Graph canonical_graph(const Graph& g) { return canonical_form(g).to_graph(); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace bugraph
