#pragma once

// JSON serialization. Rationals are {"num": "...", "den": "..."} with decimal
// strings; no betweenness value is ever written as a float. Object keys are
// sorted, so identical reports serialize to identical bytes apart from the
// "elapsed_seconds" timing field.

#include <string>
#include <vector>

#include <json.hpp>

#include "bugraph/betweenness.hpp"
#include "bugraph/connectivity.hpp"
#include "bugraph/discrepancy.hpp"
#include "bugraph/errors.hpp"
#include "bugraph/rational.hpp"
#include "bugraph/verifier.hpp"

#ifndef BUGRAPH_VERSION
#define BUGRAPH_VERSION "0.1.0"
#endif

namespace bugraph {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& r) {
  return Json{{"num", numerator_of(r).str()}, {"den", denominator_of(r).str()}};
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string())
    throw Error("rational must be an object with string fields num and den");
  return make_rational(j["num"].get<std::string>(), j["den"].get<std::string>());
}

inline Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

inline Json to_json(const BetweennessReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edge_bc)
    edges.push_back(Json{{"u", e.edge.first}, {"v", e.edge.second}, {"value", rational_to_json(e.value)}});
  return Json{{"vertex_betweenness", rationals_to_json(r.vertex_bc)},
              {"edge_betweenness", edges},
              {"adjusted_betweenness", rationals_to_json(r.adjusted)},
              {"uniform", r.uniform},
              {"spread", rational_to_json(r.spread)}};
}

inline BetweennessReport betweenness_report_from_json(const Json& j) {
  BetweennessReport r;
  r.vertex_bc = rationals_from_json(j.at("vertex_betweenness"));
  for (const auto& e : j.at("edge_betweenness"))
    r.edge_bc.push_back({{e.at("u").get<int>(), e.at("v").get<int>()}, rational_from_json(e.at("value"))});
  r.adjusted = rationals_from_json(j.at("adjusted_betweenness"));
  r.uniform = j.at("uniform").get<bool>();
  r.spread = rational_from_json(j.at("spread"));
  return r;
}

inline Json to_json(const VerificationReport& r) {
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(Json{{"graph6", c.graph6}, {"diagnostic", c.diagnostic}});
  Json tallies = Json::object();
  for (const auto& [k, v] : r.tallies) tallies[k] = v;
  return Json{{"claim", r.claim_id},
              {"corpus", r.corpus},
              {"graphs_checked", r.graphs_checked},
              {"hypothesis_count", r.hypothesis_count},
              {"counterexamples", cex},
              {"tallies", tallies},
              {"notes", r.notes},
              {"verdict", to_string(r.verdict())},
              {"elapsed_seconds", r.elapsed_seconds}};
}

inline VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  r.claim_id = j.at("claim").get<std::string>();
  r.corpus = j.at("corpus").get<std::string>();
  r.graphs_checked = j.at("graphs_checked").get<std::size_t>();
  r.hypothesis_count = j.at("hypothesis_count").get<std::size_t>();
  for (const auto& c : j.at("counterexamples"))
    r.counterexamples.push_back({c.at("graph6").get<std::string>(), c.at("diagnostic").get<std::string>()});
  for (const auto& [k, v] : j.at("tallies").items()) r.tallies[k] = v.get<long long>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  if (j.contains("verdict") && j["verdict"].get<std::string>() != to_string(r.verdict()))
    throw Error("verdict field disagrees with the counterexample list");
  return r;
}

/// Equal in every field except elapsed time.
inline bool same_report(const VerificationReport& a, const VerificationReport& b) {
  return a.claim_id == b.claim_id && a.corpus == b.corpus && a.graphs_checked == b.graphs_checked &&
         a.hypothesis_count == b.hypothesis_count && a.counterexamples == b.counterexamples &&
         a.tallies == b.tallies && a.notes == b.notes;
}

inline Json to_json(const DiscrepancyBreakdown& b) {
  return Json{{"total", rational_to_json(b.total)},
              {"part_kplus", rational_to_json(b.part_kplus)},
              {"part_l", rational_to_json(b.part_l)},
              {"part_cross", rational_to_json(b.part_cross)}};
}

inline DiscrepancyBreakdown discrepancy_breakdown_from_json(const Json& j) {
  return {rational_from_json(j.at("total")), rational_from_json(j.at("part_kplus")),
          rational_from_json(j.at("part_l")), rational_from_json(j.at("part_cross"))};
}

inline Json to_json(const TwoCutAnalysis& a) {
  Json ls = Json::array();
  for (VertexSet l : a.Ls) ls.push_back(l.to_vector());
  return Json{{"p", a.p},          {"q", a.q},     {"K", a.K.to_vector()},
              {"L_components", ls}, {"k", a.k},     {"ell", a.ell},
              {"case", to_string(a.case_tag)}};
}

inline Json to_json(const AlphaProfile& a) {
  Json alpha = Json::array();
  for (std::size_t w = 0; w < a.alpha.size(); ++w)
    if (a.alpha[w]) alpha.push_back(Json{{"w", w}, {"alpha", *a.alpha[w]}});
  return Json{{"p", a.p}, {"q", a.q}, {"alpha", alpha}};
}

/// Top-level envelope shared by all CLI reports.
inline Json report_document(const std::string& command, Json body) {
  body["tool"] = "bugraph";
  body["version"] = BUGRAPH_VERSION;
  body["command"] = command;
  return body;
}

}  // namespace bugraph
