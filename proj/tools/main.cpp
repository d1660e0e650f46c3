// padic-ergo: verify T-function expressions, generate maximal-period
// streams, run exact distribution diagnostics, and reproduce the library's
// demo experiments.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ergo/anf.hpp"
#include "ergo/brute.hpp"
#include "ergo/derivative.hpp"
#include "ergo/generator.hpp"
#include "ergo/mahler.hpp"
#include "ergo/report.hpp"
#include "ergo/seqstats.hpp"
#include "ergo/special.hpp"

using namespace ergo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCriterionFailed = 1;
constexpr int kExitUsage = 2;

// --g substitution: occurrences of name@atom in the expression text are
// replaced by the named expression with x bound to the atom.
std::string splice_named(std::string text, const std::string& name, const ExprPtr& body) {
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  for (;;) {
    size_t pos = std::string::npos, from = 0;
    while ((pos = text.find(name + "@", from)) != std::string::npos) {
      if (pos > 0 && is_ident(text[pos - 1])) {
        from = pos + 1;
        continue;
      }
      break;
    }
    if (pos == std::string::npos) return text;

    size_t argstart = pos + name.size() + 1;
    if (argstart >= text.size()) throw parse_error("missing argument after @", argstart);
    size_t argend = argstart;
    if (text[argstart] == '(') {
      int depth = 0;
      do {
        if (text[argend] == '(') ++depth;
        else if (text[argend] == ')') --depth;
        ++argend;
      } while (depth > 0 && argend < text.size());
      if (depth != 0) throw parse_error("unbalanced parentheses after @", argstart);
    } else {
      while (argend < text.size() && is_ident(text[argend])) ++argend;
      if (argend == argstart) throw parse_error("missing argument after @", argstart);
    }
    ExprPtr arg = parse(text.substr(argstart, argend - argstart));
    ExprPtr spliced = substitute(body, "x", arg);
    text = text.substr(0, pos) + "(" + pretty(spliced) + ")" + text.substr(argend);
  }
}

std::vector<uint64_t> parse_u64_list(const std::string& csv) {
  std::vector<uint64_t> out;
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    out.push_back(std::stoull(csv.substr(pos, comma - pos), nullptr, 0));
    pos = comma + 1;
  }
  return out;
}

std::vector<uint8_t> bits_from_bytes(const std::vector<uint8_t>& bytes,
                                     std::optional<uint64_t> nbits) {
  uint64_t total = nbits.value_or(bytes.size() * 8);
  if (total > bytes.size() * 8) throw error("requested more bits than the input holds");
  std::vector<uint8_t> bits(total);
  for (uint64_t i = 0; i < total; ++i) bits[i] = (bytes[i >> 3] >> (i & 7)) & 1;
  return bits;
}

std::vector<uint8_t> read_input(const std::string& path) {
  std::vector<uint8_t> bytes;
  if (path.empty() || path == "-") {
    std::freopen(nullptr, "rb", stdin);
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, stdin)) > 0)
      bytes.insert(bytes.end(), buf, buf + got);
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return bytes;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string expr_text;
  std::string g_text;
  unsigned n = 16;
  std::vector<std::string> criteria;
  std::string require = "all";  // all | ergodic | mp
  uint64_t budget = 0;
  bool json = true;
};

const std::vector<std::string> kKnownCriteria = {
    "brute_bijective", "brute_transitive", "mahler", "anf", "derivative"};

int cmd_verify(const VerifyOptions& opt) {
  std::vector<std::string> selected =
      opt.criteria.empty()
          ? std::vector<std::string>{"brute_bijective", "brute_transitive", "mahler", "anf"}
          : opt.criteria;
  for (const auto& name : selected)
    if (std::find(kKnownCriteria.begin(), kKnownCriteria.end(), name) == kKnownCriteria.end()) {
      std::cerr << "unknown criterion: " << name << "\n";
      return kExitUsage;
    }

  std::string text = opt.expr_text;
  ExprPtr e;
  try {
    if (!opt.g_text.empty()) text = splice_named(text, "g", parse(opt.g_text));
    e = parse(text);
  } catch (const parse_error& pe) {
    std::cerr << "parse error: " << pe.what() << "\n";
    return kExitUsage;
  }

  CompatClass cc = classify(e);
  std::vector<Verdict> verdicts;
  auto guard = [&](auto&& fn) {
    try {
      fn();
    } catch (const error& err) {
      Verdict v = make_verdict("error", Property::Ergodic, Result::NotApplicable,
                               Witness::from_text(err.what()), "");
      verdicts.push_back(v);
    }
  };

  for (const auto& name : selected) {
    if (name == "brute_bijective")
      guard([&] { verdicts.push_back(brute_bijective(e, std::min(opt.n, 4u), 2, opt.budget)); });
    else if (name == "brute_transitive")
      guard([&] { verdicts.push_back(brute_transitive(e, std::min(opt.n, 8u), 2, opt.budget)); });
    else if (name == "mahler")
      guard([&] {
        if (!cc.compatible) {
          verdicts.push_back(make_verdict("mahler_ergodic", Property::Ergodic,
                                          Result::NotApplicable,
                                          Witness::from_text("expression is not compatible"),
                                          "interpolation coefficient congruences"));
          return;
        }
        unsigned nm = std::min(opt.n, 10u);
        MahlerCoeffs c = mahler_coeffs(e, nm, (1ull << nm) - 1, opt.budget);
        verdicts.push_back(check_mahler_mp(c));
        verdicts.push_back(check_mahler_ergodic(c));
      });
    else if (name == "anf")
      guard([&] {
        if (!cc.compatible) {
          verdicts.push_back(make_verdict("anf_ergodic", Property::Ergodic, Result::NotApplicable,
                                          Witness::from_text("expression is not compatible"),
                                          "triangular Boolean system"));
          return;
        }
        AnfVerdicts av = check_anf_ergodic(e, std::min(opt.n - 1, 10u));
        verdicts.push_back(av.mp);
        verdicts.push_back(av.ergodic);
      });
    else if (name == "derivative")
      guard([&] {
        verdicts.push_back(check_mp_via_derivative(e, std::nullopt, opt.budget));
        verdicts.push_back(check_ergodic_via_derivative(e, std::nullopt, opt.budget));
      });
  }

  Json report = verdict_report(text, opt.n, verdicts);
  report["compatible"] = cc.compatible;
  if (!cc.compatible) report["compatibility_witness"] = pretty(cc.witness);

  if (opt.json)
    std::cout << report.dump(2) << "\n";
  else
    for (const Verdict& v : verdicts)
      std::cout << v.criterion << " [" << to_string(v.property) << "] " << to_string(v.result)
                << "\n";

  bool ok = cc.compatible;
  for (const Verdict& v : verdicts) {
    bool relevant = opt.require == "all" ||
                    (opt.require == "ergodic" && v.property == Property::Ergodic) ||
                    (opt.require == "mp" && v.property == Property::MeasurePreserving);
    if (relevant && !v.holds()) ok = false;
  }
  return ok ? kExitOk : kExitCriterionFailed;
}

// ---------------------------------------------------------------------------

struct GenOptions {
  std::string kind = "expr";
  std::string expr_text, g_text;
  std::string spec_file;
  unsigned n = 16;
  uint64_t a = 3, c = 1;
  std::string cs_csv, ds_csv, weights_csv, terms_csv;
  uint64_t bytes = 0;
  uint64_t seed = 0;
  unsigned truncate = 0;
  std::string custom_output;
  bool force = false;
  std::string out_file;
  uint64_t budget = 0;
};

GeneratorSpec spec_from_options(const GenOptions& opt) {
  GeneratorSpec spec;
  spec.n = opt.n;
  if (opt.kind == "expr") {
    spec.kind = GeneratorSpec::Kind::ExprIterate;
    std::string text = opt.expr_text;
    if (!opt.g_text.empty()) text = splice_named(text, "g", parse(opt.g_text));
    spec.expr = parse(text);
  } else if (opt.kind == "exponential") {
    spec.kind = GeneratorSpec::Kind::Exponential;
    spec.a = opt.a;
  } else if (opt.kind == "inversive") {
    spec.kind = GeneratorSpec::Kind::Inversive;
  } else if (opt.kind == "delta") {
    spec.kind = GeneratorSpec::Kind::Delta;
    spec.g = parse(opt.g_text);
    spec.c = opt.c;
  } else if (opt.kind == "cascade") {
    spec.kind = GeneratorSpec::Kind::XorAddCascade;
    spec.cs = parse_u64_list(opt.cs_csv);
    spec.ds = parse_u64_list(opt.ds_csv);
  } else if (opt.kind == "digitweighted") {
    spec.kind = GeneratorSpec::Kind::DigitWeighted;
    spec.a = opt.a;
    spec.weights = parse_u64_list(opt.weights_csv);
  } else if (opt.kind == "xoraffine") {
    spec.kind = GeneratorSpec::Kind::XorAffine;
    spec.a = opt.a;
    size_t pos = 0;
    const std::string& s = opt.terms_csv;
    while (pos < s.size()) {
      size_t colon = s.find(':', pos);
      size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      if (colon == std::string::npos || colon > comma) throw error("terms must be a_i:b_i pairs");
      spec.terms.emplace_back(std::stoull(s.substr(pos, colon - pos), nullptr, 0),
                              std::stoull(s.substr(colon + 1, comma - colon - 1), nullptr, 0));
      pos = comma + 1;
    }
  } else {
    throw error("unknown generator kind: " + opt.kind);
  }
  if (opt.truncate) {
    spec.output.kind = OutputMap::Kind::TruncateTop;
    spec.output.k = opt.truncate;
  }
  if (!opt.custom_output.empty()) {
    spec.output.kind = OutputMap::Kind::Custom;
    spec.output.custom = parse(opt.custom_output);
    if (!spec.output.k) spec.output.k = spec.n;
  }
  return spec;
}

GeneratorSpec spec_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  Json j = Json::parse(in);
  GenOptions opt;
  opt.kind = j.value("kind", "expr");
  opt.n = j.value("n", 16u);
  Json params = j.value("params", Json::object());
  opt.expr_text = params.value("expr", "");
  opt.g_text = params.value("g", "");
  opt.a = params.value("a", 3ull);
  opt.c = params.value("c", 1ull);
  if (params.contains("cs"))
    for (uint64_t v : params["cs"]) opt.cs_csv += (opt.cs_csv.empty() ? "" : ",") + std::to_string(v);
  if (params.contains("ds"))
    for (uint64_t v : params["ds"]) opt.ds_csv += (opt.ds_csv.empty() ? "" : ",") + std::to_string(v);
  if (params.contains("weights"))
    for (uint64_t v : params["weights"])
      opt.weights_csv += (opt.weights_csv.empty() ? "" : ",") + std::to_string(v);
  if (params.contains("terms")) {
    for (const auto& t : params["terms"])
      opt.terms_csv += (opt.terms_csv.empty() ? "" : ",") + std::to_string(t[0].get<uint64_t>()) +
                       ":" + std::to_string(t[1].get<uint64_t>());
  }
  if (j.contains("output")) {
    const Json& o = j["output"];
    if (o.is_string() && o == "full") {
    } else if (o.contains("truncate_top")) {
      opt.truncate = o["truncate_top"].get<unsigned>();
    } else if (o.contains("custom")) {
      opt.custom_output = o["custom"].get<std::string>();
    }
  }
  return spec_from_options(opt);
}

int cmd_gen(const GenOptions& opt) {
  GeneratorSpec spec;
  try {
    spec = opt.spec_file.empty() ? spec_from_options(opt) : spec_from_json(opt.spec_file);
  } catch (const parse_error& pe) {
    std::cerr << "parse error: " << pe.what() << "\n";
    return kExitUsage;
  }

  Generator g;
  try {
    g = build(spec, opt.force, opt.budget);
  } catch (const build_error& be) {
    std::cerr << "refused: " << be.what() << "\n";
    return kExitCriterionFailed;
  }

  auto bytes = emit_bits(g, opt.bytes * 8, opt.seed);
  if (opt.out_file.empty()) {
    std::freopen(nullptr, "wb", stdout);
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
  } else {
    std::ofstream out(opt.out_file, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct StatsOptions {
  std::string file;
  std::optional<uint64_t> nbits;
  bool q1 = false;
  int kfull = -1;
  bool distr = false;
  std::string expr_text;
  unsigned n = 8;
  unsigned truncate = 0;
  bool json = true;
};

int cmd_stats(const StatsOptions& opt) {
  Json out;
  out["schema"] = 1;
  bool all_pass = true;

  if (opt.q1 || opt.kfull >= 0) {
    std::vector<uint8_t> bits;
    try {
      bits = bits_from_bytes(read_input(opt.file), opt.nbits);
    } catch (const error& err) {
      std::cerr << "malformed input: " << err.what() << "\n";
      return kExitUsage;
    }
    if (opt.q1) {
      Q1Report r = q1_check(bits);
      out["q1"] = to_json(r);
      all_pass = all_pass && r.pass;
    }
    if (opt.kfull >= 0) {
      KFullReport r = k_fullness(BitCycle{bits}, static_cast<unsigned>(opt.kfull));
      out["kfull"] = to_json(r);
      all_pass = all_pass && r.full;
    }
  }

  if (opt.distr) {
    ExprPtr e;
    try {
      e = parse(opt.expr_text);
    } catch (const parse_error& pe) {
      std::cerr << "parse error: " << pe.what() << "\n";
      return kExitUsage;
    }
    auto fn = induced_map(e, opt.n);
    unsigned w = opt.truncate ? opt.truncate : opt.n;
    unsigned shift = opt.truncate ? opt.n - opt.truncate : 0;
    DistrReport r = distr_theorem_check(fn, opt.n, w, shift);
    out["distribution"] = to_json(r);
    all_pass = all_pass && r.pass;
  }

  std::cout << out.dump(2) << "\n";
  return all_pass ? kExitOk : kExitCriterionFailed;
}

// ---------------------------------------------------------------------------

struct DemoOptions {
  std::string which;
  unsigned n = 8;
  bool random = false;
  uint64_t seed = 1;
  std::string gammas_csv;
  std::string kind = "exponential";
  unsigned millis = 300;
};

int cmd_demo(const DemoOptions& opt) {
  Json out;
  out["schema"] = 1;
  if (opt.which == "bernoulli") {
    BernoulliReport r = demo_bernoulli(opt.n, opt.n > 22 ? 65536 : 0);
    out["demo"] = "bernoulli";
    out["n"] = r.n;
    out["max_steps_to_zero"] = r.max_steps;
    out["worst_start"] = r.argmax;
    out["exhaustive"] = r.exhaustive;
    out["within_n"] = r.within_n;
    std::cout << out.dump(2) << "\n";
    return r.within_n ? kExitOk : kExitCriterionFailed;
  }
  if (opt.which == "tent") {
    TentReport r = demo_tent(opt.n);
    out["demo"] = "tent";
    out["n"] = r.n;
    out["max_cycle_length"] = r.max_cycle;
    out["cycle_count"] = r.cycle_count;
    out["witness_cycle"] = r.witness_cycle;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (opt.which == "halfper") {
    std::vector<HalfPeriodInt> gammas;
    if (opt.random) {
      std::mt19937_64 rng(opt.seed);
      for (unsigned j = 0; j < opt.n; ++j) {
        HalfPeriodInt g = 0;
        for (uint64_t b = 0; b < (1ull << j); ++b)
          if (rng() & 1) boost::multiprecision::bit_set(g, static_cast<unsigned>(b));
        gammas.push_back(g);
      }
    } else if (!opt.gammas_csv.empty()) {
      for (uint64_t v : parse_u64_list(opt.gammas_csv)) gammas.push_back(HalfPeriodInt(v));
      if (gammas.size() != opt.n) throw error("need exactly n gamma values");
    } else {
      gammas.assign(opt.n, HalfPeriodInt(0));
    }
    auto r = realize_half_periods(gammas, opt.n);
    bool recovered = true;
    for (unsigned j = 0; j < opt.n && recovered; ++j)
      recovered = coordinate_sequence(r.induced, j, r.orbit[0]).gamma == gammas[j];
    out["demo"] = "halfper";
    out["n"] = opt.n;
    out["single_cycle"] = r.single_cycle;
    out["half_periods_recovered"] = recovered;
    if (r.orbit.size() <= 256) out["orbit"] = r.orbit;
    std::cout << out.dump(2) << "\n";
    return (r.single_cycle && recovered) ? kExitOk : kExitCriterionFailed;
  }
  if (opt.which == "bench") {
    GenOptions gopt;
    gopt.kind = opt.kind;
    gopt.n = opt.n;
    gopt.expr_text = "x + (x^2 | 5)";
    Generator g = build(spec_from_options(gopt));
    StreamState s;
    uint64_t steps = 0;
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::milliseconds(opt.millis);
    volatile uint64_t sink = 0;
    while (std::chrono::steady_clock::now() < deadline) {
      for (int i = 0; i < 4096; ++i) sink += step(g, s);
      steps += 4096;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out["demo"] = "bench";
    out["kind"] = opt.kind;
    out["n"] = opt.n;
    out["steps"] = steps;
    out["seconds"] = secs;
    out["words_per_second"] = static_cast<uint64_t>(steps / secs);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cerr << "unknown demo: " << opt.which << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-adic ergodic toolkit: verify T-function maps, build maximal-period "
               "generators, check exact distribution laws"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run ergodicity/measure-preservation criteria");
  verify->add_option("expression", vo.expr_text, "T-function expression")->required();
  verify->add_option("-n,--precision", vo.n, "working precision in bits");
  verify->add_option("--g", vo.g_text, "named subexpression for g@(...) splices");
  verify->add_option("--criteria", vo.criteria, "subset of criteria to run")->delimiter(',');
  verify->add_option("--require", vo.require, "property whose failures set the exit code")
      ->check(CLI::IsMember({"all", "ergodic", "mp"}));
  verify->add_option("--budget", vo.budget, "enumeration budget override");
  verify->add_flag("--json,!--text", vo.json, "emit the JSON report (default)");

  GenOptions go;
  auto* gen = app.add_subcommand("gen", "emit a raw byte stream from a generator");
  gen->add_option("--kind", go.kind,
                  "expr | exponential | inversive | delta | cascade | digitweighted | xoraffine");
  gen->add_option("--expr", go.expr_text, "expression for --kind expr");
  gen->add_option("--g", go.g_text, "named subexpression (delta kind, or g@ splices)");
  gen->add_option("--spec", go.spec_file, "generator spec as a JSON file");
  gen->add_option("-n,--precision", go.n, "state precision in bits");
  gen->add_option("--a", go.a, "constant for exponential/digitweighted/xoraffine");
  gen->add_option("--c", go.c, "addend for the delta construction");
  gen->add_option("--cs", go.cs_csv, "cascade addends, comma separated");
  gen->add_option("--ds", go.ds_csv, "cascade xor masks, comma separated");
  gen->add_option("--weights", go.weights_csv, "digit weights, comma separated");
  gen->add_option("--terms", go.terms_csv, "xor-affine terms as a:b pairs, comma separated");
  gen->add_option("--bytes", go.bytes, "number of bytes to emit")->required();
  gen->add_option("--seed", go.seed, "initial state");
  gen->add_option("--truncate", go.truncate, "output only the top k bits");
  gen->add_option("--output-map", go.custom_output, "custom balanced output expression");
  gen->add_flag("--force", go.force, "construct even when the criterion fails");
  gen->add_option("--out", go.out_file, "write to a file instead of stdout");
  gen->add_option("--budget", go.budget, "enumeration budget override");

  StatsOptions so;
  auto* stats = app.add_subcommand("stats", "distribution diagnostics for bit streams");
  stats->add_option("--file", so.file, "raw byte input ('-' for stdin)");
  uint64_t nbits_raw = 0;
  auto* nbits_opt = stats->add_option("--nbits", nbits_raw, "use only the first N bits");
  stats->add_flag("--q1", so.q1, "finite-word randomness inequality");
  stats->add_option("--kfull", so.kfull, "cyclic k-tuple fullness for this k");
  stats->add_flag("--distr", so.distr, "full-period distribution law for --expr/-n");
  stats->add_option("--expr", so.expr_text, "generator expression for --distr");
  stats->add_option("-n,--precision", so.n, "precision for --distr");
  stats->add_option("--truncate", so.truncate, "top-k truncated output for --distr");

  DemoOptions dopt;
  auto* demo = app.add_subcommand("demo", "reproduce the library's demo experiments");
  demo->add_option("which", dopt.which, "bernoulli | tent | halfper | bench")->required();
  demo->add_option("-n,--precision", dopt.n, "precision in bits");
  demo->add_flag("--random", dopt.random, "random half-period family (halfper)");
  demo->add_option("--seed", dopt.seed, "seed for --random");
  demo->add_option("--gammas", dopt.gammas_csv, "explicit half-period values, comma separated");
  demo->add_option("--kind", dopt.kind, "generator kind (bench)");
  demo->add_option("--millis", dopt.millis, "measurement window (bench)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(vo);
    if (*gen) return cmd_gen(go);
    if (*stats) {
      if (*nbits_opt) so.nbits = nbits_raw;
      return cmd_stats(so);
    }
    if (*demo) return cmd_demo(dopt);
  } catch (const parse_error& pe) {
    std::cerr << "parse error: " << pe.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
