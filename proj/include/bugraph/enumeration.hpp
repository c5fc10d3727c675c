#pragma once

// Isomorph-free generation of connected graphs by canonical augmentation.
//
// Every connected graph G on n >= 2 vertices has a non-cut vertex. Among the
// non-cut vertices of minimum degree take the one placed last by the
// canonical labelling; call it the canonical deletion c(G). G is accepted as
// a child of the parent H (one representative per class on n-1 vertices)
// exactly when G - c(G) is isomorphic to H. Children of one parent are
// deduplicated locally, so each class is emitted once and no global set of
// graphs is kept.

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "bugraph/betweenness.hpp"
#include "bugraph/canonical.hpp"
#include "bugraph/connectivity.hpp"
#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"
#include "bugraph/graph6.hpp"

namespace bugraph {

inline constexpr int kDefaultMaxGenerated = 9;

struct GenerationOptions {
  /// largest n generated in-process; at most kMaxCanonicalOrder
  int max_n = kDefaultMaxGenerated;
  unsigned threads = 1;
};

namespace detail {

inline VertexSet cut_vertices(const Graph& g) {
  VertexSet out;
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v)
    if (!is_connected_within(g, all - VertexSet::single(v))) out.insert(v);
  return out;
}

/// Connected children of the canonical parent graph `parent` whose canonical
/// deletion returns to the parent's class.
inline std::vector<CanonicalForm> augment(const Graph& parent, const CanonicalForm& parent_form) {
  const int m = parent.order();
  const int n = m + 1;
  const Vertex fresh = m;
  std::vector<CanonicalForm> out;
  std::unordered_set<std::uint64_t> seen;
  std::array<std::uint64_t, kMaxVertices> rows{};

  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
    for (Vertex v = 0; v < m; ++v) rows[v] = parent.row(v) | (((subset >> v) & 1U) << fresh);
    rows[fresh] = subset;
    const Graph child = Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), n));

    const VertexSet eligible = child.vertices() - cut_vertices(child);
    int min_deg = n;
    for (Vertex v : eligible) min_deg = std::min(min_deg, child.degree(v));
    if (child.degree(fresh) != min_deg) continue;

    const CanonicalLabeling lab = canonical_labeling(child);
    if (seen.contains(lab.form.bits)) continue;

    Vertex chosen = -1;
    for (int pos = n - 1; pos >= 0; --pos) {
      const Vertex v = lab.order[pos];
      if (eligible.contains(v) && child.degree(v) == min_deg) {
        chosen = v;
        break;
      }
    }
    if (chosen != fresh) {
      const Graph reduced = induced_subgraph(child, child.vertices() - VertexSet::single(chosen)).graph;
      if (canonical_form(reduced) != parent_form) continue;
    }
    seen.insert(lab.form.bits);
    out.push_back(lab.form);
  }
  return out;
}

}  // namespace detail

/// Canonical forms of all connected graphs on n vertices, one per
/// isomorphism class, sorted.
inline std::vector<CanonicalForm> generate_connected_forms(int n, const GenerationOptions& opts = {}) {
  if (n < 1) throw InvalidParameters("vertex count must be positive");
  const int cap = std::min(opts.max_n, kMaxCanonicalOrder);
  if (n > cap)
    throw TooLarge("in-process generation is capped at n=" + std::to_string(cap) + "; use a graph6 corpus");

  std::vector<CanonicalForm> level{canonical_form(Graph::empty(1))};
  for (int m = 2; m <= n; ++m) {
    const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(level.size())));
    std::vector<std::vector<CanonicalForm>> shards(workers);
    auto work = [&](unsigned id) {
      for (std::size_t i = id; i < level.size(); i += workers) {
        auto kids = detail::augment(level[i].to_graph(), level[i]);
        shards[id].insert(shards[id].end(), kids.begin(), kids.end());
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    }
    std::vector<CanonicalForm> next;
    for (auto& s : shards) next.insert(next.end(), s.begin(), s.end());
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return level;
}

/// One representative (in canonical labelling) per class of connected
/// graphs on n vertices, in canonical-form order.
inline std::vector<Graph> generate_connected(int n, const GenerationOptions& opts = {}) {
  std::vector<Graph> out;
  for (const auto& f : generate_connected_forms(n, opts)) out.push_back(f.to_graph());
  return out;
}

/// Conjunction of corpus predicates. Predicates that need a connected graph
/// reject disconnected ones instead of throwing.
struct CorpusFilter {
  bool connected = false;
  bool two_connected = false;
  bool betweenness_uniform = false;
  std::optional<int> min_degree;
  std::function<bool(const Graph&)> custom;

  bool accepts(const Graph& g) const {
    if (min_degree && g.min_degree() < *min_degree) return false;
    const bool needs_connected = connected || two_connected || betweenness_uniform;
    if (needs_connected && !is_connected(g)) return false;
    if (two_connected && !is_k_connected(g, 2)) return false;
    if (betweenness_uniform && !is_betweenness_uniform(g).uniform) return false;
    if (custom && !custom(g)) return false;
    return true;
  }

  std::string describe() const {
    std::string out;
    auto add = [&](const std::string& s) { out += (out.empty() ? "" : ",") + s; };
    if (connected) add("connected");
    if (two_connected) add("two_connected");
    if (betweenness_uniform) add("betweenness_uniform");
    if (min_degree) add("min_degree>=" + std::to_string(*min_degree));
    if (custom) add("custom");
    return out.empty() ? "all" : out;
  }
};

/// Lazily decoded graph6 stream restricted to graphs passing a filter.
class FilteredGraph6Stream {
 public:
  FilteredGraph6Stream(std::istream& in, CorpusFilter filter) : reader_(in), filter_(std::move(filter)) {}

  std::optional<Graph6Reader::Entry> next() {
    while (auto e = reader_.next())
      if (filter_.accepts(e->graph)) return e;
    return std::nullopt;
  }

 private:
  Graph6Reader reader_;
  CorpusFilter filter_;
};

inline FilteredGraph6Stream stream_graph6(std::istream& in, CorpusFilter filter = {}) {
  return FilteredGraph6Stream(in, std::move(filter));
}

struct PredicateCount {
  std::size_t count = 0;
  /// graph6 of each accepted graph, in canonical order
  std::vector<std::string> witnesses;
};

inline PredicateCount count_by_predicate(int n, const CorpusFilter& filter, const GenerationOptions& opts = {}) {
  PredicateCount out;
  for (const auto& f : generate_connected_forms(n, opts)) {
    Graph g = f.to_graph();
    if (!filter.accepts(g)) continue;
    ++out.count;
    out.witnesses.push_back(encode_graph6(g));
  }
  return out;
}

}  // namespace bugraph
