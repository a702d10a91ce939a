#include "commands.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "cy2/error.hpp"
#include "cy2/report.hpp"
#include "cy2/verify.hpp"

namespace cy2::cli {

namespace {

constexpr int kMaxRank = 8;

struct Config {
  std::string quiver_path;
  std::string type;
  std::string charge_path;
  std::uint64_t seed = 1;
  std::string strategy = "bottom";
  bool json = false;

  // stable
  std::string root;
  std::string weyl;
  int flip = 0;
  // reduce / align
  std::string word;
  bool word_given = false;
  int simple = 1;
  int random_length = -1;
  // verify
  int seeds = 5;
};

struct Context {
  QuiverGraph quiver;
  std::string source;
  std::mt19937_64 rng;
};

Context load_quiver(const Config& c) {
  if (c.quiver_path.empty() == c.type.empty()) throw ConfigError("give exactly one of --quiver FILE or --type NAME");
  Context ctx{c.type.empty() ? QuiverGraph::load(c.quiver_path) : QuiverGraph::of_type(c.type),
              c.type.empty() ? c.quiver_path : c.type, std::mt19937_64(c.seed)};
  if (!c.type.empty() && ctx.quiver.vertex_count() > kMaxRank)
    throw ConfigError("unsupported quiver type '" + c.type + "' (rank above " + std::to_string(kMaxRank) + ")");
  if (!ctx.quiver.is_finite_type()) throw ConfigError("quiver '" + ctx.source + "' is not of finite (ADE) type");
  return ctx;
}

CentralCharge load_or_draw_charge(const Config& c, Context& ctx) {
  if (!c.charge_path.empty()) {
    CentralCharge Z = load_charge(c.charge_path, ctx.quiver.vertex_count());
    if (!validate_generic(Z, ctx.quiver)) throw ConfigError("central charge in '" + c.charge_path + "' is not generic");
    return Z;
  }
  return CentralCharge::random_generic(ctx.quiver, ctx.rng);
}

Strategy parse_strategy(const std::string& s) { return s == "top" ? Strategy::top : Strategy::bottom; }

// "1,1,0", "a1+a2" or "a1+2a2".
RootVector parse_root(const std::string& text, int rank) {
  std::vector<int> coords(rank, 0);
  auto bad = [&] { return ConfigError("cannot parse root '" + text + "'"); };
  if (text.find('a') == std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= rank) throw bad();
      try {
        coords[i++] = std::stoi(item);
      } catch (const std::exception&) {
        throw bad();
      }
    }
    if (i != rank) throw bad();
    return RootVector(coords);
  }
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    const auto a = term.find('a');
    if (a == std::string::npos || a + 1 >= term.size()) throw bad();
    try {
      const int mult = a == 0 ? 1 : std::stoi(term.substr(0, a));
      std::size_t used = 0;
      const int v = std::stoi(term.substr(a + 1), &used);
      if (used != term.size() - a - 1 || v < 1 || v > rank) throw bad();
      coords[v - 1] += mult;
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw bad();
    }
  }
  return RootVector(coords);
}

// "s2 s3 s1 a2": product of reflections applied to a simple root, rightmost first.
WeylWord parse_weyl(const std::string& text, int rank) {
  std::stringstream ss(text);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(t);
  auto bad = [&] { return ConfigError("cannot parse Weyl expression '" + text + "'"); };
  auto index = [&](const std::string& t, char prefix) {
    if (t.size() < 2 || t[0] != prefix) throw bad();
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t.substr(1), &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != t.size() - 1 || v < 1 || v > rank) throw bad();
    return v - 1;
  };
  if (tokens.empty()) throw bad();
  WeylWord w;
  w.base = index(tokens.back(), 'a');
  for (auto it = tokens.rbegin() + 1; it != tokens.rend(); ++it) w.letters.push_back(index(*it, 's'));
  return w;
}

json word_json(const WeylWord& w) {
  json letters = json::array();
  for (int v : w.letters) letters.push_back(v + 1);
  return {{"base", w.base + 1}, {"letters", letters}};
}

std::string word_text(const WeylWord& w) {
  std::string s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) s += "s" + std::to_string(*it + 1) + " ";
  return s + "a" + std::to_string(w.base + 1);
}

std::string charge_text(const CentralCharge& Z) {
  std::string s;
  for (std::size_t i = 0; i < Z.values().size(); ++i)
    s += (i ? ", " : "") + std::string("Z(a") + std::to_string(i + 1) + ") = " + to_string(Z.values()[i]);
  return s;
}

std::string phase_text(const PhaseValue& p) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << p.approx();
  return os.str();
}

int cmd_roots(const Config& c, std::ostream& out) {
  Context ctx = load_quiver(c);
  const auto& q = ctx.quiver;
  json roots = json::array();
  for (const auto& w : positive_roots(q)) {
    const WeylWord word = minimal_word(q, w);
    json seq = json::array();
    for (const auto& r : root_sequence(q, word)) seq.push_back(to_string(r));
    roots.push_back({{"root", to_string(w)},
                     {"coords", w.coords()},
                     {"height", w.height()},
                     {"minimal_word", word_json(word)},
                     {"minimal_word_count", all_minimal_words(q, w).size()},
                     {"root_sequence", seq}});
  }
  if (c.json) {
    out << json{{"quiver", ctx.source}, {"rank", q.vertex_count()}, {"roots", roots}}.dump(2) << "\n";
    return 0;
  }
  out << ctx.source << ": " << roots.size() << " positive roots\n";
  for (const auto& r : roots) {
    out << "  " << r["root"].get<std::string>() << "  word " << word_text(minimal_word(q, RootVector(r["coords"])))
        << "  (" << r["minimal_word_count"].get<std::size_t>() << " minimal)  sequence";
    for (const auto& s : r["root_sequence"]) out << " " << s.get<std::string>();
    out << "\n";
  }
  return 0;
}

int cmd_stable(const Config& c, std::ostream& out) {
  Context ctx = load_quiver(c);
  const auto& q = ctx.quiver;
  const CentralCharge Z = load_or_draw_charge(c, ctx);
  const auto A = make_algebra(q);
  const StandardStability tau(A, Z);
  if (c.root.empty() == c.weyl.empty()) throw ConfigError("give exactly one of --root or --weyl");
  WeylWord word;
  if (!c.weyl.empty()) {
    word = parse_weyl(c.weyl, q.vertex_count());
  } else {
    const RootVector w = parse_root(c.root, q.vertex_count());
    if (!is_positive_root(q, w)) throw ConfigError("'" + c.root + "' is not a positive root");
    word = minimal_word(q, w);
  }
  const RootVector w = evaluate(q, word);
  if (!is_positive_root(q, w)) throw ConfigError("Weyl expression does not give a positive root");
  StableConstruction sc = construct_stable(A, Z, word);
  if (c.flip != 0) {
    if (c.flip < 1 || c.flip > static_cast<int>(sc.signs.size()))
      throw ConfigError("--flip must be between 1 and the word length " + std::to_string(sc.signs.size()));
    sc.signs[c.flip - 1] = -sc.signs[c.flip - 1];
    sc.braid = lift(sc.word, sc.signs);
    sc.object = apply_braid(sc.braid, TwistedComplex::projective(A, sc.word.base));
  }
  const PhaseBounds b = tau.bounds(sc.object);
  const bool spherical = is_spherical(sc.object);
  const bool class_ok = k_class(sc.object) == w;
  const bool heart = heart_test(b);
  const bool spread0 = b.spread() == PhaseValue::integer(0);
  const bool stable = spherical && class_ok && heart && spread0;
  // Unflipped: the object must be stable. Flipped: it must not be.
  const bool ok = c.flip == 0 ? stable : !(heart && spread0);

  json seq = json::array();
  for (const auto& r : sc.roots) seq.push_back(to_string(r));
  if (c.json) {
    out << json{{"quiver", ctx.source},
                {"charge", to_json(Z)},
                {"seed", c.seed},
                {"root", to_string(w)},
                {"weyl_word", word_json(sc.word)},
                {"root_sequence", seq},
                {"signs", sc.signs},
                {"flipped", c.flip == 0 ? json(nullptr) : json(c.flip)},
                {"braid", to_string(sc.braid)},
                {"simple", sc.word.base + 1},
                {"object", to_json(sc.object)},
                {"phases", to_json(tau, b)},
                {"checks", {{"spherical", spherical}, {"k_class", class_ok}, {"heart", heart}, {"spread_zero", spread0}}},
                {"passed", ok}}
               .dump(2)
        << "\n";
  } else {
    out << "charge: " << charge_text(Z) << "\n";
    out << "root " << to_string(w) << " = " << word_text(sc.word) << "\n";
    out << "root sequence:";
    for (const auto& r : seq) out << " " << r.get<std::string>();
    out << "\nsigns:";
    for (int s : sc.signs) out << (s > 0 ? " +" : " -");
    if (c.flip) out << "  (sign " << c.flip << " flipped)";
    out << "\nobject: (" << to_string(sc.braid) << ")P" << sc.word.base + 1 << ", " << sc.object.size()
        << " generators\n";
    out << "phases: [" << phase_text(b.lower) << ", " << phase_text(b.upper) << "], spread " << phase_text(b.spread())
        << "\n";
    out << "spherical " << (spherical ? "yes" : "no") << ", class " << (class_ok ? "ok" : "wrong") << ", heart "
        << (heart ? "yes" : "no") << ", spread 0 " << (spread0 ? "yes" : "no") << "\n";
    out << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

BraidWord word_from_config(const Config& c, Context& ctx) {
  if (c.word_given && c.random_length >= 0) throw ConfigError("give at most one of --word and --random");
  if (c.random_length >= 0) return verify::random_word(ctx.quiver, static_cast<std::size_t>(c.random_length), ctx.rng);
  const BraidWord w = BraidWord::parse(c.word);
  for (const auto& l : w.letters())
    if (l.vertex >= ctx.quiver.vertex_count()) throw ConfigError("braid word uses a vertex outside the quiver");
  return w;
}

int cmd_reduce(const Config& c, std::ostream& out) {
  Context ctx = load_quiver(c);
  const auto& q = ctx.quiver;
  const CentralCharge Z = load_or_draw_charge(c, ctx);
  const auto A = make_algebra(q);
  const StandardStability tau(A, Z);
  const BraidWord word = word_from_config(c, ctx);
  if (c.simple < 1 || c.simple > q.vertex_count()) throw ConfigError("--simple out of range");
  const TwistedComplex Y = apply_braid(word, TwistedComplex::projective(A, c.simple - 1));
  const ReductionTrace trace = reduce_to_stable(tau, Y, parse_strategy(c.strategy));
  if (c.json) {
    out << json{{"quiver", ctx.source},
                {"charge", to_json(Z)},
                {"seed", c.seed},
                {"word", to_string(word)},
                {"simple", c.simple},
                {"input", to_json(Y)},
                {"input_phases", to_json(tau, tau.bounds(Y))},
                {"trace", to_json(tau, trace)}}
               .dump(2)
        << "\n";
    return 0;
  }
  const PhaseBounds b0 = tau.bounds(Y);
  out << "charge: " << charge_text(Z) << "\n";
  out << "input: (" << to_string(word) << ")P" << c.simple << ", " << Y.size() << " generators, phases ["
      << phase_text(b0.lower) << ", " << phase_text(b0.upper) << "]\n";
  int i = 0;
  for (const auto& s : trace.steps) {
    out << "step " << ++i << ": " << (s.exponent < 0 ? "untwist" : "twist") << " by stable "
        << to_string(tau.roots()[s.root]) << "[" << s.shift << "], spread " << phase_text(s.spread_before) << " -> "
        << phase_text(s.spread_after) << "\n";
  }
  out << "final: stable " << to_string(tau.roots()[trace.final_root]) << "[" << trace.final_shift << "] at phase "
      << phase_text(trace.final_bounds.lower) << "\n";
  out << "input = (" << to_string(trace.from_simple) << ")P" << trace.base_vertex + 1 << "[" << trace.final_shift
      << "]\n";
  return 0;
}

int cmd_align(const Config& c, std::ostream& out) {
  Context ctx = load_quiver(c);
  const CentralCharge Z = load_or_draw_charge(c, ctx);
  const auto A = make_algebra(ctx.quiver);
  auto tau = std::make_shared<const StandardStability>(A, Z);
  const BraidWord transport = word_from_config(c, ctx);
  const AlignResult res = heart_align(OrbitStability{tau, transport, PhaseValue::integer(0)});
  if (c.json) {
    out << json{{"quiver", ctx.source}, {"charge", to_json(Z)}, {"seed", c.seed}, {"input_transport", to_string(transport)},
                {"result", to_json(*tau, res)}}
               .dump(2)
        << "\n";
  } else {
    out << "charge: " << charge_text(Z) << "\n";
    out << "transport: " << to_string(transport) << "\n";
    out << "rotation: " << phase_text(res.alpha) << ", " << res.steps.size() << " untwist rounds\n";
    out << "final transport: " << to_string(res.transport) << "\n";
    for (std::size_t i = 0; i < res.simple_bounds.size(); ++i)
      out << "P" << i + 1 << ": phase " << phase_text(res.simple_bounds[i].lower) << "\n";
    out << (res.realigned ? "PASS" : "FAIL") << "\n";
  }
  return res.realigned ? 0 : 1;
}

int cmd_verify(const Config& c, std::ostream& out) {
  Context ctx = load_quiver(c);
  const auto& q = ctx.quiver;
  if (c.seeds < 1) throw ConfigError("--seeds must be positive");
  const std::uint64_t s = c.seed;
  const int n = c.seeds;
  verify::ReductionStats stats;
  std::vector<verify::SuiteResult> results = {
      verify::stable_objects(q, n, s),
      verify::uniqueness(q, n, s + 1, 0),
      verify::reduction(q, n, 12, s + 2, parse_strategy(c.strategy), &stats, true),
      verify::sandwich(q, 4 * n, s + 3),
      verify::alignment(q, n, 8, s + 4),
      verify::serre_duality(q, 10 * n, s + 5),
      verify::euler_pairing(q, 10 * n, s + 6),
      verify::braid_relations(q, 10 * n, s + 7),
      verify::twist_inversion(q, 10 * n, s + 8),
  };
  bool all = true;
  json suites = json::array();
  for (const auto& r : results) {
    const bool skipped = r.cases == 0;
    all = all && (skipped || r.passed());
    suites.push_back({{"suite", r.name},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"status", skipped ? "skipped" : r.passed() ? "pass" : "fail"},
                      {"seconds", r.seconds},
                      {"messages", r.messages}});
  }
  if (c.json) {
    out << json{{"quiver", ctx.source},
                {"seed", c.seed},
                {"seeds", c.seeds},
                {"suites", suites},
                {"reduction_steps", stats.steps},
                {"passed", all}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& j : suites) {
      out << std::left << std::setw(22) << j["suite"].get<std::string>() << std::setw(8)
          << j["status"].get<std::string>() << j["cases"].get<std::size_t>() << " cases, "
          << j["failures"].get<std::size_t>() << " failures, " << std::fixed << std::setprecision(2)
          << j["seconds"].get<double>() << "s\n";
      for (const auto& m : j["messages"]) out << "    " << m.get<std::string>() << "\n";
    }
    out << (all ? "all suites pass" : "FAILURES") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Stable spherical objects and phase reduction in 2-Calabi-Yau categories of ADE quivers", "cy2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--quiver", c.quiver_path, "Quiver file: vertex count, then 1-based edge pairs");
  app.add_option("--type", c.type, "Dynkin type such as A3, D4, E6");
  app.add_option("--charge", c.charge_path, "Central charge JSON {\"1\": [num_re, den_re, num_im, den_im], ...}");
  app.add_option("--seed", c.seed, "Seed for random charges and words");
  app.add_option("--strategy", c.strategy, "Reduction strategy")->check(CLI::IsMember({"bottom", "top"}));
  app.add_flag("--json", c.json, "Emit JSON");

  auto* roots = app.add_subcommand("roots", "List positive roots, minimal words and root sequences");
  auto* stable = app.add_subcommand("stable", "Construct the stable object of a root");
  stable->add_option("--root", c.root, "Root as 1,1,0 or a1+a2");
  stable->add_option("--weyl", c.weyl, "Explicit expression such as \"s2 s3 s1 a2\"");
  stable->add_option("--flip", c.flip, "Debug: flip the i-th sign before building");
  auto* reduce = app.add_subcommand("reduce", "Reduce a braid image of a simple to a stable object");
  auto* align = app.add_subcommand("align", "Realign a braid-transported standard stability condition");
  for (auto* sub : {reduce, align}) {
    sub->add_option("--word,--transport", c.word, "Braid word such as \"s2' s3' s1\"");
    sub->add_option("--random", c.random_length, "Use a seeded random word of this length");
  }
  reduce->add_option("--simple", c.simple, "Start from P_i (1-based)");
  auto* verify = app.add_subcommand("verify", "Run the randomized property suites");
  verify->add_option("--seeds", c.seeds, "Charges / cases per suite (structural suites use 10x)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }
  c.word_given = reduce->count("--word") + align->count("--word") > 0;
  try {
    if (*roots) return cmd_roots(c, out);
    if (*stable) return cmd_stable(c, out);
    if (*reduce) return cmd_reduce(c, out);
    if (*align) return cmd_align(c, out);
    if (*verify) return cmd_verify(c, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cy2::cli
