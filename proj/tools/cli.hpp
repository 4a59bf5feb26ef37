#pragma once

// Command-line front end. run() is the whole program; main() only forwards
// argv and the standard streams so tests can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "treewalk/treewalk.hpp"

namespace treewalk::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, failure = 1, discrepancy = 2 };

inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Integers that fit in int64 stay JSON numbers; larger ones become strings.
inline Json big(const ExactInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline Json exact(const ExactRational& q) {
  return Json{{"num", big(numerator_of(q))}, {"den", big(denominator_of(q))}, {"decimal", to_decimal(q)}};
}

inline Json to_json(const AuditReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"label", w.label},
                         {"canonical", w.canonical},
                         {"value_num", big(numerator_of(w.value))},
                         {"value_den", big(denominator_of(w.value))},
                         {"decimal", to_decimal(w.value)}});
  return Json{{"claim", r.claim},
              {"status", std::string(to_string(r.status))},
              {"params", params},
              {"witnesses", witnesses},
              {"notes", r.notes},
              {"classification", std::string(to_string(r.classification))}};
}

inline Json to_json(const WalkSample& s) {
  return Json{{"seed", s.seed},   {"walks", s.walks}, {"mean", exact(s.mean)},
              {"stderr", s.std_error}, {"exact", exact(ExactRational(s.exact))}, {"z", s.z}};
}

/// "7" or "3..20", inclusive.
inline IntRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      long long v = std::stoll(text);
      return {v, v};
    }
    IntRange r{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty");
    return r;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad range '" + text + "', expected N or LO..HI");
  }
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

struct FamilyFlags {
  std::string family;
  long long n = 0;
  std::optional<long long> d, k, left, right;
};

/// Accepts the plain families plus balanced-lever and balanced-double-broom.
inline FamilySpec spec_from_flags(const FamilyFlags& f) {
  auto need_d = [&] {
    if (!f.d) throw Error(ErrorCode::InvalidFamilyParameters, f.family + " needs --d");
    return static_cast<std::size_t>(*f.d);
  };
  if (f.n < 1) throw Error(ErrorCode::InvalidFamilyParameters, "need --n >= 1");
  const auto n = static_cast<std::size_t>(f.n);
  if (f.d && *f.d < 0) throw Error(ErrorCode::InvalidFamilyParameters, "need --d >= 0");
  FamilySpec s;
  if (f.family == "path") {
    s = path_spec(n);
    if (f.d) s.d = static_cast<std::size_t>(*f.d);
  } else if (f.family == "star") {
    s = star_spec(n);
    if (f.d) s.d = static_cast<std::size_t>(*f.d);
  } else if (f.family == "lever") {
    if (!f.k) throw Error(ErrorCode::InvalidFamilyParameters, "lever needs --k");
    s = lever_spec(n, need_d(), static_cast<std::size_t>(*f.k));
  } else if (f.family == "balanced-lever") {
    s = balanced_lever_spec(n, need_d());
  } else if (f.family == "broom") {
    s = broom_spec(n, need_d());
  } else if (f.family == "double-broom") {
    if (!f.left || !f.right) throw Error(ErrorCode::InvalidFamilyParameters, "double-broom needs --left and --right");
    s = double_broom_spec(n, need_d(), static_cast<std::size_t>(*f.left), static_cast<std::size_t>(*f.right));
  } else if (f.family == "balanced-double-broom") {
    s = balanced_double_broom_spec(n, need_d());
  } else {
    throw Error(ErrorCode::InvalidFamilyParameters, "unknown family '" + f.family + "'");
  }
  validate(s);
  return s;
}

/// Ledger entries whose statement is about this family instance.
inline std::vector<FormulaId> predictions_for(const std::string& family) {
  using F = FormulaId;
  if (family == "path")
    return {F::jmax_path, F::tmeet_path, F::jmin_path_odd, F::jmin_path_even, F::bestmeet_pn};
  if (family == "star") return {F::tmeet_star, F::jmax_star_corrected};
  if (family == "balanced-lever") return {F::jmin_lever_odd, F::jmin_lever_even, F::bestmeet_lever};
  if (family == "broom") return {F::jmax_broom};
  if (family == "balanced-double-broom")
    return {F::jmin_dbroom_oo, F::jmin_dbroom_oe, F::jmin_dbroom_eo, F::jmin_dbroom_ee, F::bestmeet_dbroom_oo,
            F::bestmeet_dbroom_oe_corrected, F::bestmeet_dbroom_eo, F::bestmeet_dbroom_ee};
  return {};
}

enum class Quantity { t_bestmeet, t_meet, kemeny, j_min, j_max };

inline Quantity parse_quantity(const std::string& q) {
  if (q == "t_bestmeet") return Quantity::t_bestmeet;
  if (q == "t_meet") return Quantity::t_meet;
  if (q == "kemeny") return Quantity::kemeny;
  if (q == "j_min") return Quantity::j_min;
  if (q == "j_max") return Quantity::j_max;
  throw Error(ErrorCode::ParseError, "unknown quantity '" + q + "'");
}

inline ExactRational evaluate(Quantity q, const Tree& t) {
  switch (q) {
    case Quantity::t_bestmeet: return t_bestmeet(t).value;
    case Quantity::t_meet: return t_meet(t).value;
    case Quantity::kemeny: return kemeny(t);
    case Quantity::j_min: return j_min(t);
    case Quantity::j_max: return j_max(t);
  }
  return 0;
}

inline unsigned threads_from_env() {
  if (const char* env = std::getenv("TREEWALK_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool timing = true;
  unsigned threads = 1;
  std::string command_line;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& command, const std::string& digest_source, Json results) const {
    Json env{{"command", command_line.empty() ? command : command_line},
             {"input_digest", hex64(fnv1a(digest_source))},
             {"results", std::move(results)}};
    if (timing) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      env["timing_ms"] = ms;
    }
    out << env.dump(2) << "\n";
  }
};

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string targets = "all";
  std::string dot;
  std::string minimize_trace;
  std::string maximize_trace;
};

inline int cmd_analyze(const Context& ctx, const AnalyzeArgs& a) {
  const std::string text = read_input(a.input);
  Tree t = parse_edge_list(text);
  const std::size_t n = t.order();

  std::vector<VertexId> targets;
  if (a.targets == "all") {
    for (VertexId v = 0; v < n; ++v) targets.push_back(v);
  } else {
    std::stringstream ss(a.targets);
    std::string item;
    while (std::getline(ss, item, ',')) {
      long long v = -1;
      try {
        v = std::stoll(item);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad target '" + item + "'");
      }
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorCode::VertexOutOfRange, "target " + item + " with n=" + std::to_string(n));
      targets.push_back(static_cast<VertexId>(v));
    }
  }

  Json res;
  res["n"] = n;
  res["diameter"] = diameter_and_geodesic(t).diameter;
  res["canonical"] = canonical_form(t).code;
  if (n >= 2) {
    auto js = joining_times(t);
    const long long two_m = 2 * static_cast<long long>(t.edge_count());
    Json rows = Json::array();
    for (VertexId v : targets)
      rows.push_back({{"vertex", v}, {"J", big(js[v])}, {"meeting_time", exact(ratio(js[v], two_m))}});
    res["vertices"] = rows;
    auto tm = t_meet(t), tb = t_bestmeet(t);
    res["t_meet"] = {{"value", exact(tm.value)}, {"witness", tm.witness}};
    res["t_bestmeet"] = {{"value", exact(tb.value)}, {"witness", tb.witness}};
    res["kemeny"] = exact(kemeny(t));
  }
  res["barycenter"] = barycenter(t).centers;

  if (!a.dot.empty()) write_file(a.dot, format_dot(t));
  if (!a.minimize_trace.empty()) write_file(a.minimize_trace, trace_to_jsonl(minimize_pipeline(t).trace));
  if (!a.maximize_trace.empty()) {
    auto r = maximize_pipeline(t);
    write_file(a.maximize_trace, trace_to_jsonl(r.trace));
    res["maximize_result"] = canonical_form(r.tree).code;
  }
  ctx.emit("analyze", text, std::move(res));
  return ok;
}

inline int cmd_gen(const Context& ctx, const FamilyFlags& f, const std::string& out_path, const std::string& dot) {
  FamilySpec s = spec_from_flags(f);
  Tree t = generate(s);
  Json res;
  res["family"] = f.family;
  res["n"] = s.n;
  res["d"] = s.d;
  if (s.family == Family::lever) res["k"] = s.k;
  if (s.family == Family::double_broom) {
    res["left"] = s.left;
    res["right"] = s.right;
  }
  Json edges = Json::array();
  for (auto [a, b] : t.edges()) edges.push_back({a, b});
  res["edges"] = edges;
  res["canonical"] = canonical_form(t).code;
  Json preds = Json::array();
  for (FormulaId id : predictions_for(f.family)) {
    if (!formula_applies(id, static_cast<long long>(s.n), static_cast<long long>(s.d))) continue;
    preds.push_back({{"formula", std::string(formula_info(id).name)},
                     {"predicted", exact(closed_form(id, static_cast<long long>(s.n), static_cast<long long>(s.d)))},
                     {"observed", exact(ground_truth(id, static_cast<long long>(s.n), static_cast<long long>(s.d)))}});
  }
  res["predictions"] = preds;
  if (!out_path.empty()) write_file(out_path, format_edge_list(t));
  if (!dot.empty()) write_file(dot, format_dot(t));
  ctx.emit("gen", format_edge_list(t), std::move(res));
  return ok;
}

struct AuditArgs {
  std::string claim;
  std::string formula;
  std::string n = "";
  std::string d = "";
  std::size_t cap = 10;
};

inline int cmd_audit(const Context& ctx, const AuditArgs& a) {
  AuditOptions opts{a.cap, ctx.threads};
  std::vector<AuditReport> reports;
  auto need_n = [&] {
    if (a.n.empty()) throw Error(ErrorCode::ParseError, a.claim + " needs --n");
    return parse_range(a.n);
  };
  if (a.claim == "thm-min" || a.claim == "thm-max") {
    IntRange nr = need_n();
    for (long long n = nr.lo; n <= nr.hi; ++n) {
      IntRange dr = a.d.empty() ? IntRange{2, n - 1} : parse_range(a.d);
      for (long long d = std::max(2LL, dr.lo); d <= std::min(n - 1, dr.hi); ++d)
        reports.push_back(a.claim == "thm-min" ? audit_theorem_min(n, d, opts) : audit_theorem_max(n, d, opts));
    }
    if (reports.empty()) throw Error(ErrorCode::OutOfStatedRange, "no (n, d) cell with 2 <= d <= n-1 in range");
  } else if (a.claim == "thm-global") {
    IntRange nr = need_n();
    for (long long n = nr.lo; n <= nr.hi; ++n) reports.push_back(audit_theorem_global(n, opts));
  } else if (a.claim == "formula") {
    auto id = parse_formula_id(a.formula);
    if (!id) throw Error(ErrorCode::UnknownClaim, "unknown formula id '" + a.formula + "'");
    std::optional<IntRange> dr;
    if (!a.d.empty()) dr = parse_range(a.d);
    reports.push_back(audit_formula(*id, need_n(), dr));
  } else if (a.claim == "prop-barycenter") {
    reports.push_back(audit_proposition_barycenter(static_cast<std::size_t>(need_n().hi), opts));
  } else {
    throw Error(ErrorCode::UnknownClaim, "unknown claim '" + a.claim + "'");
  }

  Json list = Json::array();
  bool all_ok = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    all_ok = all_ok && r.ok();
  }
  Json res{{"reports", list}};
  ctx.emit("audit", a.claim + " " + a.formula + " n=" + a.n + " d=" + a.d, std::move(res));
  return all_ok ? ok : discrepancy;
}

struct SweepArgs {
  std::string family;
  std::string n;
  std::string d;
  std::string quantity = "t_bestmeet";
  std::string format = "csv";
  std::size_t cap = 10;
};

struct SweepRow {
  long long n, d;
  std::string family;
  ExactRational value;
};

inline int cmd_sweep(const Context& ctx, const SweepArgs& a) {
  const Quantity q = parse_quantity(a.quantity);
  if (a.format != "csv" && a.format != "json") throw Error(ErrorCode::ParseError, "format must be csv or json");
  const IntRange nr = parse_range(a.n);
  std::optional<IntRange> dr;
  if (!a.d.empty()) dr = parse_range(a.d);
  auto d_ok = [&](long long d) { return !dr || (dr->lo <= d && d <= dr->hi); };
  std::vector<SweepRow> rows;
  for (long long n = nr.lo; n <= nr.hi; ++n) {
    if (a.family == "enumerated") {
      if (n < 2) continue;
      for (const Tree& t : tree_classes(static_cast<std::size_t>(n), {a.cap, ctx.threads})) {
        long long d = diameter_and_geodesic(t).diameter;
        if (d_ok(d)) rows.push_back({n, d, "enumerated:" + canonical_form(t).code, evaluate(q, t)});
      }
      continue;
    }
    if (a.family == "path" || a.family == "star") {
      long long d = a.family == "path" ? n - 1 : 2;
      if ((a.family == "path" ? n >= 2 : n >= 3) && d_ok(d))
        rows.push_back({n, d, a.family, evaluate(q, generate(spec_from_flags({a.family, n, d, {}, {}, {}})))});
      continue;
    }
    if (!dr) throw Error(ErrorCode::ParseError, a.family + " sweeps need --d");
    for (long long d = std::max(2LL, dr->lo); d <= std::min(n - 1, dr->hi); ++d) {
      if (a.family == "broom" && d >= n) continue;
      rows.push_back({n, d, a.family, evaluate(q, generate(spec_from_flags({a.family, n, d, {}, {}, {}})))});
    }
  }

  if (a.format == "csv") {
    ctx.out << "n,d,family,quantity_num,quantity_den\n";
    for (const auto& r : rows)
      ctx.out << r.n << ',' << r.d << ',' << r.family << ',' << numerator_of(r.value).str() << ','
              << denominator_of(r.value).str() << '\n';
    return ok;
  }
  Json list = Json::array();
  for (const auto& r : rows)
    list.push_back({{"n", r.n}, {"d", r.d}, {"family", r.family}, {"quantity", exact(r.value)}});
  ctx.emit("sweep", a.family + " " + a.n + " " + a.d + " " + a.quantity, Json{{"quantity", a.quantity}, {"rows", list}});
  return ok;
}

struct SimulateArgs {
  std::string input;
  FamilyFlags family;
  long long u = 0, w = -1;
  std::uint64_t walks = 100000;
  std::uint64_t seed = 0;
};

inline int cmd_simulate(const Context& ctx, const SimulateArgs& a) {
  std::string source;
  Tree t = path_graph(1);
  if (!a.input.empty()) {
    source = read_input(a.input);
    t = parse_edge_list(source);
  } else if (!a.family.family.empty()) {
    t = generate(spec_from_flags(a.family));
    source = format_edge_list(t);
  } else {
    throw Error(ErrorCode::ParseError, "simulate needs --input or --family");
  }
  long long w = a.w < 0 ? static_cast<long long>(t.order()) - 1 : a.w;
  if (a.u < 0 || w < 0 || a.u >= static_cast<long long>(t.order()) || w >= static_cast<long long>(t.order()))
    throw Error(ErrorCode::VertexOutOfRange, "u/w outside 0.." + std::to_string(t.order() - 1));
  WalkSample s = simulate_hitting(t, static_cast<VertexId>(a.u), static_cast<VertexId>(w), a.walks, a.seed, ctx.threads);
  Json res = to_json(s);
  res["u"] = a.u;
  res["w"] = w;
  ctx.emit("simulate", source + " u=" + std::to_string(a.u) + " w=" + std::to_string(w), std::move(res));
  return ok;
}

// ---------------------------------------------------------------------------

inline void add_family_flags(CLI::App* sub, FamilyFlags& f, bool required) {
  auto* fam = sub->add_option("--family", f.family,
                              "path | star | lever | balanced-lever | broom | double-broom | balanced-double-broom");
  if (required) fam->required();
  sub->add_option("--n", f.n, "order");
  sub->add_option("--d", f.d, "diameter");
  sub->add_option("--k", f.k, "lever fulcrum index, 1 <= k <= d-1");
  sub->add_option("--left", f.left, "double-broom left cluster size, counting v0");
  sub->add_option("--right", f.right, "double-broom right cluster size, counting vd");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact random-walk statistics on trees"};
  app.require_subcommand(1);
  bool no_timing = false;
  unsigned threads = 0;
  app.add_flag("--no-timing", no_timing, "omit timing_ms so output is byte-stable");
  app.add_option("--threads", threads, "worker threads (default: TREEWALK_THREADS or 1)");

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "per-vertex joining and meeting times, extremes, Kemeny, barycenter");
  a->add_option("--input", analyze.input, "edge-list file, '-' for stdin")->required();
  a->add_option("--targets", analyze.targets, "'all' or comma-separated vertex ids");
  a->add_option("--dot", analyze.dot, "also write Graphviz DOT here");
  a->add_option("--minimize-trace", analyze.minimize_trace, "run the minimizing pipeline, write its JSONL trace");
  a->add_option("--maximize-trace", analyze.maximize_trace, "run the maximizing pipeline, write its JSONL trace");

  FamilyFlags gen_flags;
  std::string gen_out, gen_dot;
  auto* g = app.add_subcommand("gen", "generate a family member and its predicted closed forms");
  add_family_flags(g, gen_flags, true);
  g->add_option("--out", gen_out, "write the edge list here");
  g->add_option("--dot", gen_dot, "write Graphviz DOT here");

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "thm-min | thm-max | thm-global | formula <id> | prop-barycenter");
  au->add_option("claim", audit.claim, "claim id")->required();
  au->add_option("formula", audit.formula, "formula id for the formula claim");
  au->add_option("--n", audit.n, "N or LO..HI");
  au->add_option("--d", audit.d, "N or LO..HI");
  au->add_option("--cap", audit.cap, "largest enumerated order");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "one quantity over a family or over enumerated classes");
  sw->add_option("--family", sweep.family,
                 "path | star | broom | balanced-lever | balanced-double-broom | enumerated")
      ->required();
  sw->add_option("--n", sweep.n, "N or LO..HI")->required();
  sw->add_option("--d", sweep.d, "N or LO..HI");
  sw->add_option("--quantity", sweep.quantity, "t_bestmeet | t_meet | kemeny | j_min | j_max");
  sw->add_option("--format", sweep.format, "csv | json");
  sw->add_option("--cap", sweep.cap, "largest enumerated order");

  SimulateArgs sim;
  auto* si = app.add_subcommand("simulate", "Monte Carlo hitting time against the exact value");
  si->add_option("--input", sim.input, "edge-list file, '-' for stdin");
  add_family_flags(si, sim.family, false);
  si->add_option("--u", sim.u, "start vertex");
  si->add_option("--w", sim.w, "target vertex (default n-1)");
  si->add_option("--walks", sim.walks, "number of walks")->check(CLI::PositiveNumber);
  si->add_option("--seed", sim.seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }

  std::string command_line;
  for (int i = 1; i < argc; ++i) command_line += (i > 1 ? " " : "") + std::string(argv[i]);
  Context ctx{out, err, !no_timing, threads ? threads : threads_from_env(), command_line};
  try {
    if (*a) return cmd_analyze(ctx, analyze);
    if (*g) return cmd_gen(ctx, gen_flags, gen_out, gen_dot);
    if (*au) return cmd_audit(ctx, audit);
    if (*sw) return cmd_sweep(ctx, sweep);
    if (*si) return cmd_simulate(ctx, sim);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}

}  // namespace treewalk::cli
