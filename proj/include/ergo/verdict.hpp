#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ergo/word.hpp"

namespace ergo {

enum class Property { MeasurePreserving, Ergodic, Balanced };
enum class Result { Holds, Fails, NotApplicable };

inline const char* to_string(Property p) {
  switch (p) {
    case Property::MeasurePreserving: return "measure-preserving";
    case Property::Ergodic: return "ergodic";
    case Property::Balanced: return "balanced";
  }
  return "?";
}

inline const char* to_string(Result r) {
  switch (r) {
    case Result::Holds: return "holds";
    case Result::Fails: return "fails";
    case Result::NotApplicable: return "not-applicable";
  }
  return "?";
}

// Machine-checkable evidence attached to a verdict.  A Fails witness can be
// replayed through eval to reproduce the violation.
struct Witness {
  enum class Kind { None, Cycle, Collision, Congruence, Text };
  Kind kind = Kind::None;

  std::vector<uint64_t> cycle;  // visited states, possibly truncated (see full_length)
  uint64_t full_length = 0;     // true cycle/orbit length
  uint64_t a = 0, b = 0;        // colliding inputs, or congruence data
  uint64_t value = 0;           // common image / offending residue
  uint64_t index = 0;           // coefficient index or step count
  std::string text;

  static Witness none() { return Witness{}; }
  static Witness from_text(std::string t) {
    Witness w;
    w.kind = Kind::Text;
    w.text = std::move(t);
    return w;
  }
  static Witness collision(uint64_t x1, uint64_t x2, uint64_t image) {
    Witness w;
    w.kind = Kind::Collision;
    w.a = x1;
    w.b = x2;
    w.value = image;
    return w;
  }
  static Witness congruence(uint64_t idx, uint64_t residue, std::string what) {
    Witness w;
    w.kind = Kind::Congruence;
    w.index = idx;
    w.value = residue;
    w.text = std::move(what);
    return w;
  }
};

struct Verdict {
  std::string criterion;  // machine name, e.g. "brute_transitive"
  std::string rule;       // the decision rule applied, in words
  Property property = Property::Ergodic;
  Result result = Result::NotApplicable;
  Witness witness;
  bool heuristic = false;  // result rests on an estimated parameter
  std::string note;

  bool holds() const { return result == Result::Holds; }
  bool fails() const { return result == Result::Fails; }
};

inline Verdict make_verdict(std::string criterion, Property p, Result r,
                            Witness w = Witness::none(), std::string rule = {}) {
  Verdict v;
  v.criterion = std::move(criterion);
  v.property = p;
  v.result = r;
  v.witness = std::move(w);
  v.rule = std::move(rule);
  return v;
}

inline uint64_t fnv1a(const std::vector<uint64_t>& xs) {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t x : xs)
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  return h;
}

}  // namespace ergo
