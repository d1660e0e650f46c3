#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ergo/seqstats.hpp"
#include "ergo/verdict.hpp"

// JSON serialization of verdicts and sequence reports.  Key order is fixed
// (ordered_json) so identical runs print identical bytes.

namespace ergo {

using Json = nlohmann::ordered_json;

inline Json to_json(const Witness& w) {
  Json j;
  switch (w.kind) {
    case Witness::Kind::None:
      j["kind"] = "none";
      break;
    case Witness::Kind::Cycle:
      j["kind"] = "cycle";
      j["length"] = w.full_length;
      if (w.cycle.size() <= (1ull << 12) && w.cycle.size() == w.full_length)
        j["states"] = w.cycle;
      else
        j["fnv1a"] = fnv1a(w.cycle);
      if (!w.text.empty()) j["detail"] = w.text;
      break;
    case Witness::Kind::Collision:
      j["kind"] = "collision";
      j["x1"] = w.a;
      j["x2"] = w.b;
      j["image"] = w.value;
      break;
    case Witness::Kind::Congruence:
      j["kind"] = "congruence";
      j["index"] = w.index;
      j["residue"] = w.value;
      j["requirement"] = w.text;
      break;
    case Witness::Kind::Text:
      j["kind"] = "note";
      j["detail"] = w.text;
      break;
  }
  return j;
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["name"] = v.criterion;
  j["property"] = to_string(v.property);
  j["result"] = to_string(v.result);
  j["witness"] = to_json(v.witness);
  j["rule"] = v.rule;
  if (v.heuristic) j["heuristic"] = true;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Json verdict_report(const std::string& expression, unsigned precision,
                           const std::vector<Verdict>& verdicts) {
  Json j;
  j["schema"] = 1;
  j["expression"] = expression;
  j["precision"] = precision;
  Json arr = Json::array();
  for (const Verdict& v : verdicts) arr.push_back(to_json(v));
  j["criteria"] = arr;
  return j;
}

inline Json to_json(const KFullReport& r) {
  Json j;
  j["k"] = r.k;
  j["cycle_length"] = r.length;
  j["full"] = r.full;
  j["expected_count"] = r.expected;
  Json counts = Json::object();
  for (uint64_t key = 0; key < r.counts.size(); ++key) {
    std::string tuple;
    for (unsigned b = 0; b < r.k; ++b) tuple += ((key >> b) & 1) ? '1' : '0';
    if (r.k == 0) tuple = "()";
    counts[tuple] = r.counts[key];
  }
  j["counts"] = counts;
  return j;
}

inline Json to_json(const Q1Report& r) {
  Json j;
  j["N"] = r.N;
  j["pass"] = r.pass;
  Json per = Json::array();
  for (const Q1PerK& pk : r.per_k) {
    Json e;
    e["k"] = pk.k;
    e["pass"] = pk.pass;
    e["max_deviation"] = std::to_string(pk.dev_num) + "/" + std::to_string(pk.dev_den);
    std::string tuple;
    for (unsigned b = 0; b < pk.k; ++b) tuple += ((pk.worst_tuple >> b) & 1) ? '1' : '0';
    e["worst_tuple"] = tuple;
    per.push_back(e);
  }
  j["per_k"] = per;
  if (r.has_violation) {
    j["first_violation_k"] = r.violation_k;
    std::string tuple;
    for (unsigned b = 0; b < r.violation_k; ++b)
      tuple += ((r.violation_tuple >> b) & 1) ? '1' : '0';
    j["first_violation_tuple"] = tuple;
  }
  return j;
}

inline Json to_json(const DistrReport& r) {
  Json j;
  j["n"] = r.n;
  j["output_width"] = r.w;
  j["cycle_bits"] = r.cycle.bits.size();
  j["fullness"] = to_json(r.fullness);
  j["q1"] = to_json(r.q1);
  j["derived_fullness_ok"] = r.derived_fullness_ok;
  j["pass"] = r.pass;
  return j;
}

}  // namespace ergo
