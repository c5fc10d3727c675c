#pragma once

// Claim replay harness. Each registered claim is a predicate over a corpus
// of connected graphs (or, for the tightness construction, a parameter
// grid). A run counts the graphs checked and the graphs meeting the claim's
// hypothesis, collects counterexamples as graph6 strings with a diagnostic,
// and tallies claim-specific data. Reports are independent of the worker
// count: outcomes are merged in corpus order.
//
// `mutate` shifts every checked relation by the smallest relevant unit
// (bound - 1, strict instead of non-strict, threshold + 1). A correct harness
// must report counterexamples under mutation on the standard corpus.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bugraph/betweenness.hpp"
#include "bugraph/connectivity.hpp"
#include "bugraph/constructions.hpp"
#include "bugraph/discrepancy.hpp"
#include "bugraph/enumeration.hpp"
#include "bugraph/errors.hpp"
#include "bugraph/graph.hpp"
#include "bugraph/graph6.hpp"
#include "bugraph/rational.hpp"

namespace bugraph {

enum class Verdict { Pass, Fail, Warn };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Warn: return "WARN";
  }
  return "?";
}

struct Counterexample {
  std::string graph6;
  std::string diagnostic;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string claim_id;
  std::string corpus;
  std::size_t graphs_checked = 0;
  /// graphs satisfying the claim's hypothesis
  std::size_t hypothesis_count = 0;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, long long> tallies;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;

  /// FAIL on any counterexample, WARN when nothing met the hypothesis.
  Verdict verdict() const {
    if (!counterexamples.empty()) return Verdict::Fail;
    if (hypothesis_count == 0) return Verdict::Warn;
    return Verdict::Pass;
  }
};

struct VerifyOptions {
  unsigned threads = 1;
  bool mutate = false;
  /// treat every corpus graph as meeting a uniformity hypothesis
  bool assume_hypothesis = false;
  GenerationOptions generation{};
};

/// Outcome of one claim on one graph.
struct GraphOutcome {
  bool hypothesis = false;
  std::vector<std::string> violations;
  std::map<std::string, long long> tallies;
};

enum class ClaimKind { GraphCorpus, TightnessGrid };

struct Claim {
  std::string id;
  std::string statement;
  std::string hypothesis;
  ClaimKind kind = ClaimKind::GraphCorpus;
  int default_max_n = 8;
  std::function<GraphOutcome(const Graph&, const VerifyOptions&)> check;
};

/// Where the graphs come from: in-process generation over an n range, a
/// graph6 file, or an explicit list.
struct CorpusSource {
  enum class Kind { Generated, File, Explicit };
  Kind kind = Kind::Generated;
  int n_min = 1;
  int n_max = 8;
  std::string path;
  std::vector<Graph> graphs;
  std::string label;

  static CorpusSource generated(int n_min, int n_max) {
    CorpusSource c;
    c.n_min = n_min;
    c.n_max = n_max;
    return c;
  }
  static CorpusSource file(std::string path) {
    CorpusSource c;
    c.kind = Kind::File;
    c.path = std::move(path);
    return c;
  }
  static CorpusSource explicit_list(std::vector<Graph> graphs, std::string label) {
    CorpusSource c;
    c.kind = Kind::Explicit;
    c.graphs = std::move(graphs);
    c.label = std::move(label);
    return c;
  }

  std::string describe() const {
    switch (kind) {
      case Kind::Generated:
        return "generated connected graphs, n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
      case Kind::File: return "graph6 file " + path;
      case Kind::Explicit: return label.empty() ? "explicit list" : label;
    }
    return "";
  }
};

namespace detail {

inline std::string rat(const Rational& r) { return to_string(r); }

inline int mutation(const VerifyOptions& o) { return o.mutate ? 1 : 0; }

inline bool uniform_hypothesis(const Graph& g, const VerifyOptions& o) {
  return o.assume_hypothesis || is_betweenness_uniform(g).uniform;
}

inline bool kappa_is_two(const Graph& g) { return g.order() >= 4 && vertex_connectivity(g) == 2; }

inline GraphOutcome check_thm_conn(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  if (g.order() < 3 || !uniform_hypothesis(g, o)) return out;
  out.hypothesis = true;
  const int kappa = vertex_connectivity(g);
  if (kappa < 2) out.violations.push_back("uniform but not 2-connected (kappa=" + std::to_string(kappa) + ")");
  const bool cycle = is_cycle_graph(g);
  const int need = 3 + mutation(o);
  if (!cycle && !is_k_connected(g, need))
    out.violations.push_back("uniform, not a cycle and not " + std::to_string(need) +
                             "-connected (kappa=" + std::to_string(kappa) + ")");
  ++out.tallies[cycle ? "uniform_cycles" : "uniform_3_connected"];
  return out;
}

inline GraphOutcome check_thm_diam(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  if (!uniform_hypothesis(g, o)) return out;
  out.hypothesis = true;
  const int n = g.order();
  const int delta = g.max_degree();
  const int k = n - delta;
  const int d = diameter(g);
  const int m = mutation(o);
  if (d > k - m)
    out.violations.push_back("d=" + std::to_string(d) + " > k=" + std::to_string(k - m));
  if (delta >= 3) {
    ++out.tallies["max_degree_at_least_3"];
    const int bound = k / 3 + 3 - m;
    if (d > bound)
      out.violations.push_back("max degree " + std::to_string(delta) + ", d=" + std::to_string(d) +
                               " > floor(k/3)+3=" + std::to_string(bound));
  }
  return out;
}

/// floor((k-3)/ell)+4 for k >= 3, otherwise the base cases 3 (k=2) and 2 (k=1).
inline int genconn_bound(int k, int ell) {
  if (k >= 3) return (k - 3) / ell + 4;
  return k == 2 ? 3 : 2;
}

inline GraphOutcome check_thm_genconn(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  out.hypothesis = true;
  const int n = g.order();
  const int k = n - g.max_degree();
  const int ell = vertex_connectivity(g);
  const int d = diameter(g);
  const int bound = genconn_bound(k, ell);
  if (d > bound - mutation(o))
    out.violations.push_back("k=" + std::to_string(k) + " ell=" + std::to_string(ell) + " d=" + std::to_string(d) +
                             " > " + std::to_string(bound - mutation(o)));
  if (d == bound) ++out.tallies["bound_attained"];
  return out;
}

inline GraphOutcome check_lem_avgdist(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  if (!is_k_connected(g, 2)) return out;
  out.hypothesis = true;
  const Rational bound = two_connected_mean_distance_bound(g.order());
  const bool cycle = is_cycle_graph(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    const Rational mean = mean_distance_to(g, u);
    const bool ok = o.mutate ? mean < bound : mean <= bound;
    if (!ok) out.violations.push_back("vertex " + std::to_string(u) + ": mean distance " + rat(mean) + " exceeds " + rat(bound));
    if (cycle && mean != bound)
      out.violations.push_back("cycle vertex " + std::to_string(u) + ": mean distance " + rat(mean) + " != " + rat(bound));
    if (mean == bound) ++out.tallies["vertices_at_bound"];
  }
  if (cycle) ++out.tallies["cycles"];
  return out;
}

inline GraphOutcome check_lem_avgbc(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  out.hypothesis = true;
  const Rational lhs = average_betweenness(g, g.vertices());
  const Rational rhs = mean_betweenness_via_distance(g) + mutation(o);
  if (lhs != rhs) out.violations.push_back("mean betweenness " + rat(lhs) + " != distance formula " + rat(rhs));
  return out;
}

inline GraphOutcome check_eq1(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  out.hypothesis = true;
  const auto r = betweenness_report(g);
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    const Rational rhs = o.mutate ? (r.adjusted[x] - n) / 2 : betweenness_from_adjusted(r.adjusted[x], n);
    if (r.vertex_bc[x] != rhs)
      out.violations.push_back("vertex " + std::to_string(x) + ": B=" + rat(r.vertex_bc[x]) + " but (B_a-n+1)/2=" + rat(rhs));
  }
  return out;
}

inline GraphOutcome check_edge_bc(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  if (g.size() == 0) return out;
  out.hypothesis = true;
  for (const auto& e : edge_betweenness(g)) {
    if (e.value < 1 + mutation(o))
      out.violations.push_back("edge {" + std::to_string(e.edge.first) + "," + std::to_string(e.edge.second) +
                               "}: B(e)=" + rat(e.value));
    if (e.value == 1) ++out.tallies["edges_at_one"];
  }
  return out;
}

inline std::string sign_name(const Rational& r) { return r > 0 ? "positive" : (r < 0 ? "negative" : "zero"); }

inline GraphOutcome check_eq2(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  if (!kappa_is_two(g)) return out;
  out.hypothesis = true;
  const TwoCutAnalysis a = minimal_two_cut(g);
  const DiscrepancyBreakdown b = disc_breakdown(g, a);
  if (b.total != b.parts_sum() + mutation(o))
    out.violations.push_back("disc=" + rat(b.total) + " but parts sum to " + rat(b.parts_sum() + mutation(o)));
  if (b.part_l < 0) out.violations.push_back("disc over pairs in L is negative: " + rat(b.part_l));
  const auto per = disc_by_component(g, a);
  for (std::size_t i = 0; i < per.components.size(); ++i) {
    const auto& c = per.components[i].breakdown;
    if (c.total != c.parts_sum() + mutation(o))
      out.violations.push_back("G_" + std::to_string(i + 1) + ": disc=" + rat(c.total) + " but parts sum to " +
                               rat(c.parts_sum() + mutation(o)));
  }
  const bool cycle = is_cycle_graph(g);
  ++out.tallies["disc_" + sign_name(b.total) + (cycle ? "_cycle" : "_non_cycle")];
  if (per.components.size() > 1) ++out.tallies["multi_component_L"];
  return out;
}

inline CaseTag classify_with_threshold(const Graph& g, const TwoCutAnalysis& a, int threshold) {
  if (a.k == 1) return CaseTag::A;
  if ((g.neighbors(a.p) & a.K).size() >= threshold && (g.neighbors(a.q) & a.K).size() >= threshold) return CaseTag::B;
  return CaseTag::Unclassified;
}

inline GraphOutcome check_obs_smallk(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  if (!kappa_is_two(g)) return out;
  out.hypothesis = true;
  const TwoCutAnalysis a = minimal_two_cut(g);
  const CaseTag tag = classify_with_threshold(g, a, 2 + mutation(o));
  if (tag == CaseTag::Unclassified)
    out.violations.push_back("minimal cut {" + std::to_string(a.p) + "," + std::to_string(a.q) + "} with k=" +
                             std::to_string(a.k) + " is neither case A nor case B");
  ++out.tallies[std::string("case_") + to_string(a.case_tag)];
  // K+ of a case A cut is the path p-v-q (or a triangle); the 2-connectivity
  // claim concerns components with at least two vertices.
  if (a.k >= 2) {
    ++out.tallies["kplus_checked"];
    const int need = 2 + mutation(o);
    if (!is_k_connected(k_plus(g, a).graph, need))
      out.violations.push_back("K+ of the minimal cut is not " + std::to_string(need) + "-connected");
  }
  return out;
}

inline GraphOutcome check_obs_kzero(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  out.hypothesis = true;
  const auto bc = vertex_betweenness(g);
  const bool all_zero = std::all_of(bc.begin(), bc.end(), [](const Rational& b) { return b == 0; });
  const int n = g.order();
  const bool complete = o.mutate ? (2 * g.size() == n * (n - 1) - 2) : g.is_complete();
  if (all_zero != complete)
    out.violations.push_back(all_zero ? "betweenness identically zero but graph is not complete"
                                      : "complete graph with nonzero betweenness");
  if (all_zero) ++out.tallies["all_zero"];
  return out;
}

/// Closed form with the branch boundaries moved out by one under mutation.
inline Rational case_a_branch(const GeodesicTable& t, Vertex p, Vertex q, Vertex w, int shift) {
  const int alpha = t.dist(w, p) - t.dist(w, q);
  if (std::abs(alpha) <= 1 + shift) return Rational(1, 2);
  if (alpha == -2 - shift) return (1 - Rational(t.sigma(w, p), t.sigma(w, q))) / 2;
  if (alpha == 2 + shift) return (1 - Rational(t.sigma(w, q), t.sigma(w, p))) / 2;
  return Rational(0);
}

inline std::string alpha_bucket(int alpha) {
  if (alpha <= -3) return "alpha_le_-3";
  if (alpha >= 3) return "alpha_ge_3";
  return "alpha_" + std::to_string(alpha);
}

inline GraphOutcome check_prop1(const Graph& g, const VerifyOptions& o) {
  GraphOutcome out;
  if (!is_k_connected(g, 2)) return out;
  const GeodesicTable t(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto nb = g.neighbors(v).to_vector();
    const Vertex p = nb[0];
    const Vertex q = nb[1];
    if (g.adjacent(p, q)) continue;
    out.hypothesis = true;
    ++out.tallies["case_a_instances"];
    const std::string where = "v=" + std::to_string(v) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
    for (const auto& c : case_a_cases(g, p, q, v)) {
      ++out.tallies[alpha_bucket(c.alpha)];
      const Rational expected = case_a_branch(t, p, q, c.w, mutation(o));
      if (c.measured != expected) {
        ++out.tallies["formula_mismatch_" + alpha_bucket(c.alpha)];
        if (t.sigma(p, q) == 1) ++out.tallies["formula_mismatch_unique_pq_geodesic"];
        out.violations.push_back(where + " w=" + std::to_string(c.w) + " alpha=" + std::to_string(c.alpha) +
                                 ": measured " + rat(c.measured) + ", formula " + rat(expected));
      }
      if (std::abs(c.alpha) == 2 && !(c.measured > 0 && c.measured < Rational(1, 2))) {
        ++out.tallies["open_interval_violation"];
        if (t.sigma(p, q) == 1) ++out.tallies["open_interval_violation_unique_pq_geodesic"];
        out.violations.push_back(where + " w=" + std::to_string(c.w) + " alpha=" + std::to_string(c.alpha) +
                                 ": value " + rat(c.measured) + " outside (0, 1/2)");
      }
    }
    const Rational pq = disc_pq_pair(g, p, q, v);
    const bool unique = t.sigma(p, q) == 1;
    if (pq != Rational(-1, t.sigma(p, q)) || (pq == -1) != unique)
      out.violations.push_back(where + ": pair {p,q} contributes " + rat(pq));
  }
  return out;
}

}  // namespace detail

/// The registered claims, in a fixed order.
inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> claims = {
      {"THM-CONN", "connected betweenness-uniform graphs are 2-connected, and are cycles or 3-connected",
       "betweenness-uniform, n >= 3", ClaimKind::GraphCorpus, 8, detail::check_thm_conn},
      {"THM-DIAM", "betweenness-uniform with max degree n-k: d <= k, and d <= floor(k/3)+3 when max degree >= 3",
       "betweenness-uniform", ClaimKind::GraphCorpus, 8, detail::check_thm_diam},
      {"THM-GENCONN", "ell-connected with max degree n-k: d <= floor((k-3)/ell)+4 (d <= 3 for k=2, d <= 2 for k=1)",
       "connected", ClaimKind::GraphCorpus, 7, detail::check_thm_genconn},
      {"LEM-AVGDIST", "2-connected: mean distance to any vertex <= n/4 (even n) or n/4-1/(4n) (odd n), equality on cycles",
       "2-connected", ClaimKind::GraphCorpus, 8, detail::check_lem_avgdist},
      {"LEM-AVGBC", "mean betweenness = (n-1)/2 * (sum of ordered distances / (n(n-1)) - 1)", "connected",
       ClaimKind::GraphCorpus, 7, detail::check_lem_avgbc},
      {"EQ1", "B(x) = (B_a(x) - n + 1)/2 for every vertex", "connected", ClaimKind::GraphCorpus, 7, detail::check_eq1},
      {"EDGE-BC", "B(e) >= 1 for every edge", "connected, at least one edge", ClaimKind::GraphCorpus, 8,
       detail::check_edge_bc},
      {"EQ2", "disc = disc over K+ pairs + disc over L pairs + disc over K+ x L pairs, and the L part is >= 0",
       "vertex connectivity 2 (minimal two-cut)", ClaimKind::GraphCorpus, 8, detail::check_eq2},
      {"OBS-SMALLK", "minimal two-cut has k = 1 or both cut vertices with >= 2 neighbours in K; K+ is 2-connected when k >= 2",
       "vertex connectivity 2", ClaimKind::GraphCorpus, 8, detail::check_obs_smallk},
      {"OBS-KZERO", "betweenness is identically zero iff the graph is complete", "connected", ClaimKind::GraphCorpus, 8,
       detail::check_obs_kzero},
      {"PROP1", "case A contributions over K+ x {w}: 1/2, (1 - sigma ratio)/2 in (0,1/2), or 0 by alpha(w)",
       "2-connected with a degree-2 vertex whose neighbours are non-adjacent", ClaimKind::GraphCorpus, 8,
       detail::check_prop1},
      {"PROP2-TIGHT", "the extremal construction has max degree n-k, is ell-connected, and has diameter floor((k-3)/ell)+4",
       "parameter grid ell in 2..4, d in 5..7", ClaimKind::TightnessGrid, 0, nullptr},
  };
  return claims;
}

inline std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : claim_registry()) out.push_back(c.id);
  return out;
}

class UnknownClaim : public Error {
 public:
  explicit UnknownClaim(const std::string& id) : Error("unknown claim id '" + id + "'") {}
};

inline const Claim& find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownClaim(id);
}

namespace detail {

inline void merge_outcome(VerificationReport& r, const Graph& g, GraphOutcome&& o) {
  ++r.graphs_checked;
  if (o.hypothesis) ++r.hypothesis_count;
  for (auto& [k, v] : o.tallies) r.tallies[k] += v;
  if (!o.violations.empty()) {
    std::string diag;
    for (const auto& v : o.violations) diag += (diag.empty() ? "" : "; ") + v;
    r.counterexamples.push_back({encode_graph6(g), std::move(diag)});
  }
}

/// Runs `claim` over a batch with up to `threads` workers and merges the
/// outcomes in batch order.
inline void run_batch(const Claim& claim, const std::vector<Graph>& batch, const VerifyOptions& opts,
                      VerificationReport& report) {
  std::vector<GraphOutcome> outcomes(batch.size());
  std::vector<char> skipped(batch.size(), 0);
  auto work = [&](unsigned id, unsigned workers) {
    for (std::size_t i = id; i < batch.size(); i += workers) {
      if (!is_connected(batch[i])) {
        skipped[i] = 1;
        continue;
      }
      outcomes[i] = claim.check(batch[i], opts);
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(batch.size())));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id, workers);
  }
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (skipped[i]) {
      ++report.tallies["skipped_disconnected"];
      continue;
    }
    merge_outcome(report, batch[i], std::move(outcomes[i]));
  }
}

inline std::vector<TightnessParams> tightness_grid() {
  std::vector<TightnessParams> grid;
  for (int ell = 2; ell <= 4; ++ell)
    for (int d = 5; d <= 7; ++d)
      for (int extra = 0; extra <= 2; ++extra) {
        TightnessParams p{ell, d, 0};
        p.n = p.k() + 3 * ell - 1 + extra;
        if (p.n <= kMaxVertices) grid.push_back(p);
      }
  return grid;
}

inline void run_tightness(const VerifyOptions& opts, VerificationReport& report) {
  report.corpus = "tightness parameter grid ell=2..4, d=5..7, w=0..2";
  for (const auto& p : tightness_grid()) {
    ++report.graphs_checked;
    ++report.hypothesis_count;
    const std::string where =
        "ell=" + std::to_string(p.ell) + " d=" + std::to_string(p.d) + " n=" + std::to_string(p.n);
    try {
      const Graph g = tightness_construction(p);
      std::vector<std::string> bad;
      const int delta = g.max_degree();
      const int kappa = vertex_connectivity(g);
      const int diam = diameter(g);
      const int bound = p.diameter_bound() + mutation(opts);
      if (delta != p.n - p.k()) bad.push_back(where + ": max degree " + std::to_string(delta));
      if (kappa < p.ell) bad.push_back(where + ": kappa " + std::to_string(kappa));
      if (diam != bound) bad.push_back(where + ": diameter " + std::to_string(diam) + " != " + std::to_string(bound));
      if ((p.k() - 3) % p.ell == 0) ++report.tallies["ell_divides_k_minus_3"];
      if (p.ell % (p.k() - 3) == 0) ++report.tallies["k_minus_3_divides_ell"];
      if (!bad.empty()) {
        std::string diag;
        for (const auto& b : bad) diag += (diag.empty() ? "" : "; ") + b;
        report.counterexamples.push_back({encode_graph6(g), diag});
      }
    } catch (const Error& e) {
      report.counterexamples.push_back({"", where + ": " + e.what()});
    }
  }
}

}  // namespace detail

/// Runs one claim over a corpus. File corpora are streamed in fixed-size
/// batches.
inline VerificationReport run_claim(const Claim& claim, const CorpusSource& corpus, const VerifyOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim_id = claim.id;
  if (opts.mutate) report.notes.push_back("mutated relations (harness self-test)");
  if (opts.assume_hypothesis) report.notes.push_back("uniformity hypothesis assumed for every graph (harness self-test)");

  if (claim.kind == ClaimKind::TightnessGrid) {
    detail::run_tightness(opts, report);
  } else {
    report.corpus = corpus.describe();
    switch (corpus.kind) {
      case CorpusSource::Kind::Generated:
        for (int n = corpus.n_min; n <= corpus.n_max; ++n) {
          GenerationOptions gen = opts.generation;
          gen.threads = std::max(gen.threads, opts.threads);
          detail::run_batch(claim, generate_connected(n, gen), opts, report);
        }
        break;
      case CorpusSource::Kind::Explicit:
        detail::run_batch(claim, corpus.graphs, opts, report);
        break;
      case CorpusSource::Kind::File: {
        std::ifstream in(corpus.path);
        if (!in) throw Error("cannot open corpus file " + corpus.path);
        Graph6Reader reader(in);
        constexpr std::size_t kBatch = 4096;
        std::vector<Graph> batch;
        while (auto e = reader.next()) {
          batch.push_back(std::move(e->graph));
          if (batch.size() == kBatch) {
            detail::run_batch(claim, batch, opts, report);
            batch.clear();
          }
        }
        detail::run_batch(claim, batch, opts, report);
        break;
      }
    }
  }
  if (report.hypothesis_count == 0) report.notes.push_back("no graph met the hypothesis; result is vacuous");
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline VerificationReport run_claim(const std::string& id, const CorpusSource& corpus, const VerifyOptions& opts = {}) {
  return run_claim(find_claim(id), corpus, opts);
}

/// Default corpus for a claim: generated connected graphs n = 1..default_max_n.
inline CorpusSource default_corpus(const Claim& claim) { return CorpusSource::generated(1, std::max(1, claim.default_max_n)); }

}  // namespace bugraph
