// bugraph command-line tool.
//
// Exit codes: 0 success or PASS, 1 counterexample or failed check,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bugraph/bugraph.hpp"

namespace {

using namespace bugraph;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct InputOptions {
  std::vector<std::string> graphs;
  std::string file;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("graph6", in.graphs, "graph6 strings (default: read lines from --file or standard input)");
  cmd->add_option("-f,--file", in.file, "file with one graph6 string per line");
}

/// Calls f(graph6 text, graph) for every input graph in input order.
void for_each_input(const InputOptions& in, const std::function<void(const std::string&, const Graph&)>& f) {
  if (!in.graphs.empty()) {
    if (!in.file.empty()) throw UsageError("give graph6 arguments or --file, not both");
    for (const auto& s : in.graphs) f(s, decode_graph6(s));
    return;
  }
  std::ifstream file;
  std::istream* stream = &std::cin;
  if (!in.file.empty()) {
    file.open(in.file);
    if (!file) throw UsageError("cannot open " + in.file);
    stream = &file;
  }
  Graph6Reader reader(*stream);
  while (auto e = reader.next()) f(encode_graph6(e->graph), e->graph);
}

Graph single_input(const InputOptions& in) {
  std::optional<Graph> g;
  for_each_input(in, [&](const std::string&, const Graph& x) {
    if (g) throw UsageError("expected exactly one input graph");
    g = x;
  });
  if (!g) throw UsageError("no input graph");
  return *g;
}

void require_connected(const Graph& g, const std::string& g6) {
  if (!is_connected(g)) throw DisconnectedGraph("graph " + g6 + " is disconnected");
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

/// Largest n for in-process generation: BUGRAPH_MAX_N if set (at most 10),
/// otherwise 9 with --large and 8 without.
int generation_cap(bool large) {
  if (const char* env = std::getenv("BUGRAPH_MAX_N")) {
    int v = 0;
    try {
      v = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("BUGRAPH_MAX_N must be an integer");
    }
    if (v < 1 || v > kMaxCanonicalOrder)
      throw UsageError("BUGRAPH_MAX_N must lie in 1.." + std::to_string(kMaxCanonicalOrder));
    return v;
  }
  return large ? 9 : 8;
}

void check_cap(int n, bool large) {
  const int cap = generation_cap(large);
  if (n > cap)
    throw UsageError("n=" + std::to_string(n) + " exceeds the generation cap " + std::to_string(cap) +
                     " (use --large for 9, BUGRAPH_MAX_N up to 10, or --corpus with a graph6 file)");
}

unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

// ---- bc ----

struct BcOptions {
  InputOptions input;
  bool check_eq1 = false;
  bool json = false;
};

int run_bc(const BcOptions& o) {
  Json results = Json::array();
  bool all_ok = true;
  for_each_input(o.input, [&](const std::string& g6, const Graph& g) {
    require_connected(g, g6);
    const BetweennessReport r = betweenness_report(g);
    std::optional<bool> eq1;
    if (o.check_eq1) {
      bool ok = true;
      for (Vertex x = 0; x < g.order(); ++x) ok = ok && r.vertex_bc[x] == betweenness_from_adjusted(r.adjusted[x], g.order());
      eq1 = ok;
      all_ok = all_ok && ok;
    }
    if (o.json) {
      Json item{{"graph6", g6}, {"n", g.order()}, {"betweenness", to_json(r)}};
      if (eq1) item["eq1"] = *eq1 ? "PASS" : "FAIL";
      results.push_back(item);
      return;
    }
    std::cout << g6 << " n=" << g.order() << " uniform=" << (r.uniform ? "true" : "false") << '\n';
    std::cout << "  B: " << join(r.vertex_bc) << '\n';
    std::cout << "  B(e):";
    for (const auto& e : r.edge_bc)
      std::cout << ' ' << e.edge.first << '-' << e.edge.second << ':' << to_string(e.value);
    std::cout << '\n';
    std::cout << "  B_a: " << join(r.adjusted) << '\n';
    if (eq1) std::cout << "  EQ1 " << (*eq1 ? "PASS" : "FAIL") << '\n';
  });
  if (o.json) std::cout << report_document("bc", Json{{"results", results}}).dump(2) << '\n';
  return all_ok ? kExitOk : kExitFail;
}

// ---- uniform ----

struct UniformOptions {
  InputOptions input;
  bool filter = false;
  bool json = false;
};

int run_uniform(const UniformOptions& o) {
  Json results = Json::array();
  std::size_t uniform_count = 0;
  for_each_input(o.input, [&](const std::string& g6, const Graph& g) {
    const bool connected = is_connected(g);
    const UniformityVerdict v = connected ? is_betweenness_uniform(g) : UniformityVerdict{};
    if (v.uniform) ++uniform_count;
    if (o.filter) {
      if (v.uniform) std::cout << g6 << '\n';
      return;
    }
    if (o.json) {
      Json item{{"graph6", g6}, {"connected", connected}, {"uniform", v.uniform}};
      if (v.value) item["value"] = rational_to_json(*v.value);
      results.push_back(item);
      return;
    }
    if (!connected)
      std::cout << g6 << " disconnected\n";
    else if (v.uniform)
      std::cout << g6 << " uniform " << to_string(*v.value) << '\n';
    else
      std::cout << g6 << " non-uniform\n";
  });
  if (o.json && !o.filter)
    std::cout << report_document("uniform", Json{{"results", results}, {"uniform_count", uniform_count}}).dump(2)
              << '\n';
  return kExitOk;
}

// ---- verify ----

struct VerifyCliOptions {
  std::vector<std::string> claims;
  bool all = false;
  bool list = false;
  std::optional<int> n_max;
  int n_min = 1;
  std::string corpus;
  bool json = false;
  unsigned threads = default_threads();
  bool mutate = false;
  bool assume_uniform = false;
  bool large = false;
  std::size_t show = 10;
};

std::string claim_list() {
  std::string out;
  for (const auto& c : claim_registry()) out += "  " + c.id + "  " + c.statement + "\n";
  return out;
}

void print_report(const VerificationReport& r, std::size_t show) {
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << r.elapsed_seconds;
  std::cout << r.claim_id << ": " << to_string(r.verdict()) << " (checked " << r.graphs_checked << ", hypothesis met "
            << r.hypothesis_count << ", counterexamples " << r.counterexamples.size() << ", " << time.str() << "s)\n";
  std::cout << "  corpus: " << r.corpus << '\n';
  if (!r.tallies.empty()) {
    std::cout << "  data:";
    for (const auto& [k, v] : r.tallies) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
  }
  for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
  for (std::size_t i = 0; i < r.counterexamples.size() && i < show; ++i)
    std::cout << "  counterexample " << r.counterexamples[i].graph6 << ": " << r.counterexamples[i].diagnostic << '\n';
  if (r.counterexamples.size() > show)
    std::cout << "  ... " << r.counterexamples.size() - show << " more (use --json for the full list)\n";
}

int run_verify(const VerifyCliOptions& o) {
  if (o.list) {
    std::cout << claim_list();
    return kExitOk;
  }
  std::vector<const Claim*> selected;
  if (o.all) {
    for (const auto& c : claim_registry()) selected.push_back(&c);
  } else {
    if (o.claims.empty()) throw UsageError("no claim given; use --claim ID or --all. Registered claims:\n" + claim_list());
    for (const auto& id : o.claims) {
      try {
        selected.push_back(&find_claim(id));
      } catch (const UnknownClaim& e) {
        throw UsageError(std::string(e.what()) + ". Registered claims:\n" + claim_list());
      }
    }
  }
  if (o.n_min < 1) throw UsageError("--n-min must be positive");
  if (o.n_max) check_cap(*o.n_max, o.large);

  VerifyOptions opts;
  opts.threads = std::max(1U, o.threads);
  opts.mutate = o.mutate;
  opts.assume_hypothesis = o.assume_uniform;
  opts.generation.max_n = generation_cap(o.large);
  opts.generation.threads = opts.threads;

  std::vector<VerificationReport> reports;
  for (const Claim* c : selected) {
    CorpusSource corpus;
    if (!o.corpus.empty())
      corpus = CorpusSource::file(o.corpus);
    else
      corpus = CorpusSource::generated(o.n_min, o.n_max.value_or(std::max(1, c->default_max_n)));
    reports.push_back(run_claim(*c, corpus, opts));
    if (!o.json) print_report(reports.back(), o.show);
  }

  Verdict overall = Verdict::Pass;
  for (const auto& r : reports) {
    if (r.verdict() == Verdict::Fail) overall = Verdict::Fail;
    else if (r.verdict() == Verdict::Warn && overall == Verdict::Pass) overall = Verdict::Warn;
  }
  if (o.json) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    Json inputs{{"claims", o.all ? claim_ids() : o.claims}, {"mutate", o.mutate}, {"assume_uniform", o.assume_uniform}};
    if (!o.corpus.empty()) inputs["corpus"] = o.corpus;
    else {
      inputs["n_min"] = o.n_min;
      if (o.n_max) inputs["n_max"] = *o.n_max;
    }
    std::cout << report_document("verify", Json{{"inputs", inputs}, {"reports", list}, {"verdict", to_string(overall)}})
                     .dump(2)
              << '\n';
  } else if (reports.size() > 1) {
    std::cout << "overall: " << to_string(overall) << '\n';
  }
  return overall == Verdict::Fail ? kExitFail : kExitOk;
}

// ---- construct ----

struct ConstructOptions {
  std::string family;
  std::vector<int> params;
  std::optional<int> ell;
  std::optional<int> d;
  std::optional<int> n;
  bool verify = false;
};

int param(const ConstructOptions& o, std::size_t i, const char* name) {
  if (o.params.size() <= i) throw InvalidParameters(o.family + " needs parameter " + name);
  return o.params[i];
}

int run_construct(const ConstructOptions& o) {
  const std::string& f = o.family;
  std::optional<Graph> built;
  // expected edge count and an optional extra property for --verify
  long expected_edges = -1;
  std::function<std::string(const Graph&)> extra;
  std::size_t arity = 0;

  if (f == "cycle") {
    const int n = param(o, 0, "n");
    built = cycle(n);
    expected_edges = n;
    arity = 1;
    extra = [](const Graph& x) { return is_cycle_graph(x) ? "" : "not a cycle"; };
  } else if (f == "complete") {
    const int n = param(o, 0, "n");
    built = complete(n);
    expected_edges = static_cast<long>(n) * (n - 1) / 2;
    arity = 1;
  } else if (f == "path") {
    const int n = param(o, 0, "n");
    built = path(n);
    expected_edges = n - 1;
    arity = 1;
  } else if (f == "bipartite") {
    const int a = param(o, 0, "a");
    const int b = param(o, 1, "b");
    built = complete_bipartite(a, b);
    expected_edges = static_cast<long>(a) * b;
    arity = 2;
  } else if (f == "star") {
    const int k = param(o, 0, "leaves");
    built = star(k);
    expected_edges = k;
    arity = 1;
  } else if (f == "petersen") {
    built = petersen();
    expected_edges = 15;
    extra = [](const Graph& x) {
      return x.min_degree() == 3 && x.max_degree() == 3 && diameter(x) == 2 ? "" : "not the Petersen graph";
    };
  } else if (f == "grid") {
    const int r = param(o, 0, "rows");
    const int c = param(o, 1, "cols");
    built = grid(r, c);
    expected_edges = static_cast<long>(r) * (c - 1) + static_cast<long>(c) * (r - 1);
    arity = 2;
  } else if (f == "theta") {
    const int p = param(o, 0, "paths");
    const int l = param(o, 1, "length");
    built = theta(p, l);
    expected_edges = static_cast<long>(p) * l;
    arity = 2;
  } else if (f == "tight") {
    if (!o.ell || !o.d || !o.n) throw InvalidParameters("tight needs --ell, --d and --n");
    const TightnessParams p{*o.ell, *o.d, *o.n};
    built = tightness_construction(p);
    extra = [p](const Graph& x) {
      std::string bad;
      if (x.max_degree() != p.n - p.k()) bad += "max degree " + std::to_string(x.max_degree()) + " != n-k; ";
      if (vertex_connectivity(x) < p.ell) bad += "connectivity below ell; ";
      if (diameter(x) != p.diameter_bound()) bad += "diameter " + std::to_string(diameter(x)) + " != bound; ";
      return bad;
    };
  } else {
    throw UsageError("unknown family '" + f + "' (cycle, complete, path, bipartite, star, petersen, grid, theta, tight)");
  }
  if (o.params.size() > arity) throw UsageError("too many parameters for " + f);
  if (f != "tight" && (o.ell || o.d || o.n)) throw UsageError("--ell, --d and --n apply to the tight family only");
  const Graph& g = *built;

  std::cout << encode_graph6(g) << '\n';
  if (!o.verify) return kExitOk;
  std::string bad;
  if (expected_edges >= 0 && g.size() != expected_edges)
    bad += "edge count " + std::to_string(g.size()) + " != " + std::to_string(expected_edges) + "; ";
  if (!is_connected(g)) bad += "disconnected; ";
  if (extra) bad += extra(g);
  if (!bad.empty()) {
    std::cout << "FAIL " << bad << '\n';
    return kExitFail;
  }
  std::cout << "PASS n=" << g.order() << " m=" << g.size() << " max_degree=" << g.max_degree()
            << " connectivity=" << vertex_connectivity(g) << " diameter=" << diameter(g) << '\n';
  return kExitOk;
}

// ---- disc ----

struct DiscOptions {
  InputOptions input;
  std::optional<int> p;
  std::optional<int> q;
  bool minimal = false;
  bool json = false;
};

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

int run_disc(const DiscOptions& o) {
  const Graph g = single_input(o.input);
  const std::string g6 = encode_graph6(g);
  require_connected(g, g6);
  TwoCutAnalysis a;
  if (o.minimal) {
    if (o.p || o.q) throw UsageError("--minimal selects the cut itself; drop --p/--q");
    a = minimal_two_cut(g);
  } else {
    if (!o.p || !o.q) throw UsageError("give --p and --q, or --minimal");
    a = analyze_two_cut(g, *o.p, *o.q);
  }
  const DiscrepancyBreakdown b = disc_breakdown(g, a);
  const AlphaProfile alpha = alpha_profile(g, a.p, a.q, a.K);
  const MultiComponentDiscrepancy per = disc_by_component(g, a);

  if (o.json) {
    Json comps = Json::array();
    for (const auto& c : per.components)
      comps.push_back(Json{{"graph6", encode_graph6(c.subgraph.graph)},
                           {"vertices", c.subgraph.to_original},
                           {"cut", to_json(c.analysis)},
                           {"disc", to_json(c.breakdown)}});
    std::cout << report_document("disc", Json{{"graph6", g6},
                                               {"cut", to_json(a)},
                                               {"disc", to_json(b)},
                                               {"alpha", to_json(alpha)},
                                               {"components", comps}})
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << g6 << " cut " << set_text(a.cut()) << " K=" << set_text(a.K) << " k=" << a.k << " ell=" << a.ell
            << " case " << to_string(a.case_tag) << '\n';
  std::cout << "disc " << to_string(b.total) << '\n';
  std::cout << "  K+ pairs " << to_string(b.part_kplus) << "  L pairs " << to_string(b.part_l) << "  cross pairs "
            << to_string(b.part_cross) << '\n';
  std::cout << "alpha:";
  for (std::size_t w = 0; w < alpha.alpha.size(); ++w)
    if (alpha.alpha[w]) std::cout << ' ' << w << ':' << *alpha.alpha[w];
  std::cout << '\n';
  if (per.components.size() > 1)
    for (std::size_t i = 0; i < per.components.size(); ++i)
      std::cout << "G_" << i + 1 << " disc " << to_string(per.components[i].breakdown.total) << '\n';
  return kExitOk;
}

// ---- enumerate ----

struct EnumerateOptions {
  int n = 0;
  bool two_connected = false;
  bool uniform = false;
  std::optional<int> min_degree;
  bool count = false;
  bool large = false;
  unsigned threads = default_threads();
};

int run_enumerate(const EnumerateOptions& o) {
  if (o.n < 1) throw UsageError("-n must be positive");
  check_cap(o.n, o.large);
  CorpusFilter filter;
  filter.connected = true;
  filter.two_connected = o.two_connected;
  filter.betweenness_uniform = o.uniform;
  filter.min_degree = o.min_degree;
  GenerationOptions gen;
  gen.max_n = generation_cap(o.large);
  gen.threads = std::max(1U, o.threads);
  std::size_t count = 0;
  for (const auto& f : generate_connected_forms(o.n, gen)) {
    const Graph g = f.to_graph();
    if (!filter.accepts(g)) continue;
    ++count;
    if (!o.count) std::cout << encode_graph6(g) << '\n';
  }
  if (o.count) std::cout << count << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact betweenness centrality and claim verification for small graphs"};
  app.set_version_flag("--version", std::string(BUGRAPH_VERSION));
  app.require_subcommand(1);

  BcOptions bc;
  auto* bc_cmd = app.add_subcommand("bc", "exact vertex, edge and adjusted betweenness");
  add_input_options(bc_cmd, bc.input);
  bc_cmd->add_flag("--check-eq1", bc.check_eq1, "check B(x) = (B_a(x) - n + 1)/2 for every vertex");
  bc_cmd->add_flag("--json", bc.json, "JSON report");

  UniformOptions un;
  auto* un_cmd = app.add_subcommand("uniform", "betweenness-uniformity verdict per graph");
  add_input_options(un_cmd, un.input);
  un_cmd->add_flag("--filter", un.filter, "echo only the uniform graphs");
  un_cmd->add_flag("--json", un.json, "JSON report");

  VerifyCliOptions ve;
  auto* ve_cmd = app.add_subcommand("verify", "replay registered claims over a corpus");
  ve_cmd->add_option("-c,--claim", ve.claims, "claim id (repeatable)");
  ve_cmd->add_flag("--all", ve.all, "run every registered claim");
  ve_cmd->add_flag("--list", ve.list, "list registered claims");
  ve_cmd->add_option("-n,--n-max", ve.n_max, "largest generated order (default: per claim)");
  ve_cmd->add_option("--n-min", ve.n_min, "smallest generated order");
  ve_cmd->add_option("--corpus", ve.corpus, "graph6 corpus file instead of generation");
  ve_cmd->add_flag("--json", ve.json, "JSON report");
  ve_cmd->add_option("-t,--threads", ve.threads, "worker threads");
  ve_cmd->add_flag("--mutate", ve.mutate, "shift every checked relation by one (harness self-test)");
  ve_cmd->add_flag("--assume-uniform", ve.assume_uniform, "treat every graph as uniform (harness self-test)");
  ve_cmd->add_flag("--large", ve.large, "allow generation up to n=9");
  ve_cmd->add_option("--show", ve.show, "counterexamples printed per claim");

  ConstructOptions co;
  auto* co_cmd = app.add_subcommand("construct", "print a graph family member as graph6");
  co_cmd->add_option("family", co.family, "cycle, complete, path, bipartite, star, petersen, grid, theta, tight")
      ->required();
  co_cmd->add_option("params", co.params, "family parameters");
  co_cmd->add_option("--ell", co.ell, "tight: connectivity");
  co_cmd->add_option("--d", co.d, "tight: diameter");
  co_cmd->add_option("--n", co.n, "tight: order");
  co_cmd->add_flag("--verify", co.verify, "re-check the construction");

  DiscOptions di;
  auto* di_cmd = app.add_subcommand("disc", "discrepancy of a two-cut and its decomposition");
  add_input_options(di_cmd, di.input);
  di_cmd->add_option("--p", di.p, "first cut vertex");
  di_cmd->add_option("--q", di.q, "second cut vertex");
  di_cmd->add_flag("--minimal", di.minimal, "use the minimal two-cut");
  di_cmd->add_flag("--json", di.json, "JSON report");

  EnumerateOptions en;
  auto* en_cmd = app.add_subcommand("enumerate", "connected graphs on n vertices, one per isomorphism class");
  en_cmd->add_option("-n", en.n, "order")->required();
  en_cmd->add_flag("--two-connected", en.two_connected, "only 2-connected graphs");
  en_cmd->add_flag("--uniform", en.uniform, "only betweenness-uniform graphs");
  en_cmd->add_option("--min-degree", en.min_degree, "minimum degree at least this");
  en_cmd->add_flag("--count", en.count, "print the count only");
  en_cmd->add_flag("--large", en.large, "allow n=9");
  en_cmd->add_option("-t,--threads", en.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bc_cmd->parsed()) return run_bc(bc);
    if (un_cmd->parsed()) return run_uniform(un);
    if (ve_cmd->parsed()) return run_verify(ve);
    if (co_cmd->parsed()) return run_construct(co);
    if (di_cmd->parsed()) return run_disc(di);
    if (en_cmd->parsed()) return run_enumerate(en);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
