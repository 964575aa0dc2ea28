#include "braid3/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

#include "braid3/bands.hpp"
#include "braid3/errors.hpp"
#include "braid3/factor_search.hpp"
#include "braid3/garside.hpp"
#include "braid3/hurwitz.hpp"
#include "braid3/polygon.hpp"
#include "braid3/rewrite.hpp"
#include "braid3/selftest/acceptance.hpp"
#include "braid3/word.hpp"

namespace braid3::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::size_t cap = 1'000'000;
  std::uint64_t seed = selftest::AcceptanceOptions{}.seed;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  const Globals& globals;

  SearchLimits limits() const {
    SearchLimits l;
    l.max_states = globals.cap;
    return l;
  }
  void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

// The token starting at `position`, for error messages.
std::string token_at(const std::string& text, std::size_t position) {
  if (position >= text.size()) return "<end of input>";
  std::size_t end = text.find_first_of(" \t\n", position);
  return text.substr(position, end == std::string::npos ? std::string::npos : end - position);
}

Word read_word(const std::string& text) {
  try {
    return parse_word_auto(text);
  } catch (const ParseError& e) {
    throw UsageError("bad token '" + token_at(text, e.position()) + "' in \"" + text +
                     "\": " + e.what());
  } catch (const AlphabetError& e) {
    throw UsageError("\"" + text + "\": " + e.what());
  }
}

std::string braid_text(const CanonicalBraid& b) {
  const bool dual = b.structure() == Structure::Dual;
  std::string out;
  if (b.inf() != 0) {
    out = dual ? "d" : "D";
    if (b.inf() != 1) out += "^" + std::to_string(b.inf());
  }
  const std::string tail =
      format_word(Word::positive(b.tail(), dual ? Alphabet::Bkl : Alphabet::Artin));
  if (!tail.empty()) {
    if (!out.empty()) out += ' ';
    out += tail;
  }
  return out.empty() ? "e" : out;
}

Json factor_list(const Factorization& f) {
  Json list = Json::array();
  for (const CanonicalBraid& b : f.factors()) list.push_back(braid_text(b));
  return list;
}

std::string join_factors(const Factorization& f) {
  std::string out;
  for (const CanonicalBraid& b : f.factors()) {
    if (!out.empty()) out += " , ";
    out += braid_text(b);
  }
  return out;
}

Json move_list(const MoveSequence& moves) {
  Json list = Json::array();
  for (const Move& m : moves) list.push_back(format_moves({m}));
  return list;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

Factorization read_factorization(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("factorization is not valid JSON: " + text);
  }
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) {
    throw UsageError("expected {\"factors\": [\"word\", ...]}, got " + text);
  }
  std::vector<Word> words;
  for (const Json& w : j["factors"]) {
    if (!w.is_string()) throw UsageError("factor " + w.dump() + " is not a string");
    words.push_back(read_word(w.get<std::string>()));
  }
  return Factorization::from_words(words);
}

IndexSet read_index_set(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw UsageError("index set is not valid JSON: " + text);
  }
  if (!j.is_array()) throw UsageError("expected a JSON array of positions, got " + text);
  std::vector<int> positions;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw UsageError("position " + v.dump() + " is not an integer");
    positions.push_back(v.get<int>());
  }
  try {
    return IndexSet(std::move(positions));
  } catch (const PreconditionError& e) {
    throw UsageError(text + ": " + e.what());
  }
}

const char* verdict(bool b) { return b ? "true" : "false"; }

// ---- commands --------------------------------------------------------------

int cmd_nf(const Io& io, const std::string& text, bool dual) {
  const Word w = read_word(text);
  const Structure s = dual ? Structure::Dual : Structure::Classical;
  const CanonicalBraid b =
      normalize(dual ? w : bkl_to_artin(w), s);
  if (io.globals.json) {
    Json factors = Json::array();
    for (const Simple& f : b.factors()) factors.push_back(format_word(f.word()));
    io.emit({{"input", text},
             {"structure", dual ? "dual" : "classical"},
             {"inf", b.inf()},
             {"factors", factors},
             {"canonical", b.to_string()}});
  } else {
    io.out << b.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_eq(const Io& io, const std::string& a, const std::string& b) {
  const bool same = equal(read_word(a), read_word(b));
  if (io.globals.json) {
    io.emit({{"equal", same}});
  } else {
    io.out << verdict(same) << '\n';
  }
  return same ? kSuccess : kFalse;
}

int cmd_e(const Io& io, const std::string& text) {
  const Word w = read_word(text);
  if (io.globals.json) {
    io.emit({{"input", text}, {"exponent_sum", exponent_sum(w)}});
  } else {
    io.out << exponent_sum(w) << '\n';
  }
  return kSuccess;
}

Json candidate_json(const Candidate& c) {
  return {{"I", c.positions.positions()}, {"factors", factor_list(c.factorization)}};
}

Json report_head(const std::string& text, const OrbitAnalysis& a) {
  const bool qp = !a.candidates.empty();
  return {{"input", text},
          {"positive_form", {{"W", format_word(a.form.word)}, {"p", a.form.p}}},
          {"quasipositive", qp},
          {"orbit_count", a.classes.size()}};
}

void print_head(const Io& io, const OrbitAnalysis& a) {
  const char* garside = a.structure == Structure::Classical ? "D" : "d";
  io.out << "quasipositive: " << verdict(!a.candidates.empty()) << '\n'
         << "positive_form: " << format_word(a.form.word) << " · " << garside << "^-"
         << a.form.p << '\n'
         << "orbit_count: " << a.classes.size() << '\n';
}

OrbitAnalysis analyze_input(const Io& io, const Word& w, Structure s) {
  return analyze(s == Structure::Classical ? bkl_to_artin(w) : w, s, io.limits());
}

int cmd_qp(const Io& io, const std::string& text) {
  const Word w = read_word(text);
  const OrbitAnalysis a = analyze_input(io, w, Structure::Classical);
  const bool qp = !a.candidates.empty();
  if (io.globals.json) {
    Json j = report_head(text, a);
    Json reps = Json::array();
    for (const Candidate& c : a.representatives()) reps.push_back(candidate_json(c));
    j["representatives"] = reps;
    io.emit(j);
  } else {
    print_head(io, a);
  }
  return qp ? kSuccess : kFalse;
}

int cmd_reps(const Io& io, const std::string& text, bool bkl) {
  const Word w = read_word(text);
  const OrbitAnalysis a =
      analyze_input(io, w, bkl ? Structure::Dual : Structure::Classical);
  const auto reps = a.representatives();
  if (io.globals.json) {
    Json j = report_head(text, a);
    Json list = Json::array();
    for (const Candidate& c : reps) list.push_back(candidate_json(c));
    j["representatives"] = list;
    io.emit(j);
  } else {
    print_head(io, a);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      io.out << "orbit " << i + 1 << ": I = " << join_ints(reps[i].positions.positions())
             << '\n'
             << "  " << join_factors(reps[i].factorization) << '\n';
    }
  }
  return a.candidates.empty() ? kFalse : kSuccess;
}

int cmd_orbits(const Io& io, const std::string& text) {
  const Word w = read_word(text);
  const OrbitAnalysis a = analyze_input(io, w, Structure::Classical);
  bool capped = false;
  Json classes = Json::array();
  std::ostringstream lines;
  for (std::size_t c = 0; c < a.classes.size(); ++c) {
    const Candidate& rep = a.candidates[a.classes[c].front()];
    Json size;
    std::string size_text;
    try {
      const auto n = orbit_size(rep.factorization, io.limits());
      size = n ? Json(*n) : Json("infinite");
      size_text = n ? std::to_string(*n) : "infinite";
    } catch (const CapExceeded&) {
      capped = true;
      size = nullptr;
      size_text = "unknown (cap " + std::to_string(io.globals.cap) + " reached)";
    }
    Json members = Json::array();
    lines << "orbit " << c + 1 << ": size " << size_text << ", index sets";
    for (std::size_t m : a.classes[c]) {
      members.push_back(a.candidates[m].positions.positions());
      lines << ' ' << join_ints(a.candidates[m].positions.positions());
    }
    lines << "\n  " << join_factors(rep.factorization) << '\n';
    classes.push_back({{"I", rep.positions.positions()},
                       {"factors", factor_list(rep.factorization)},
                       {"members", members},
                       {"size", size}});
  }
  if (io.globals.json) {
    Json j = report_head(text, a);
    j["classes"] = classes;
    io.emit(j);
  } else {
    print_head(io, a);
    io.out << lines.str();
  }
  if (capped) {
    io.err << "error: orbit size search cap exceeded\n";
    return kCapExceeded;
  }
  return a.candidates.empty() ? kFalse : kSuccess;
}

int cmd_equiv(const Io& io, const std::string& a, const std::string& b) {
  const Factorization f = read_factorization(a);
  const Factorization g = read_factorization(b);
  const Equivalence r = equivalent(f, g, io.limits());
  if (io.globals.json) {
    io.emit({{"equivalent", r.equivalent},
             {"witness", r.equivalent ? move_list(r.witness) : Json(nullptr)}});
  } else {
    io.out << verdict(r.equivalent) << '\n';
    if (r.equivalent) io.out << "witness: " << format_moves(r.witness) << '\n';
  }
  return r.equivalent ? kSuccess : kFalse;
}

int cmd_orbit(const Io& io, const std::string& text) {
  const Factorization f = read_factorization(text);
  // Pairs are settled exactly, so an infinite orbit is reported without a search.
  if (f.size() == 2 && !orbit_size(f, io.limits())) {
    if (io.globals.json) {
      io.emit({{"size", nullptr}, {"infinite", true}, {"members", Json::array()}});
    } else {
      io.out << "size: infinite\n";
    }
    io.err << "error: the orbit is infinite and cannot be listed\n";
    return kCapExceeded;
  }
  const std::vector<Factorization> members = orbit(f, io.limits());
  if (io.globals.json) {
    Json list = Json::array();
    for (const Factorization& m : members) list.push_back({{"factors", factor_list(m)}});
    io.emit({{"size", members.size()}, {"members", list}});
  } else {
    io.out << "size: " << members.size() << '\n';
    for (const Factorization& m : members) io.out << join_factors(m) << '\n';
  }
  return kSuccess;
}

int cmd_rnf(const Io& io, const std::string& text) {
  const Word w = read_word(text);
  const RightNormalForm r = right_normal_form(bkl_to_artin(w));
  if (io.globals.json) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks) blocks.push_back(format_word(Word::positive(b)));
    io.emit({{"input", text},
             {"blocks", blocks},
             {"p", r.p},
             {"closed", r.is_closed()},
             {"canonical", r.to_string()}});
  } else {
    io.out << r.to_string() << '\n';
  }
  return kSuccess;
}

Json axes_json(const std::vector<Axis>& axes) {
  Json list = Json::array();
  for (const Axis& a : axes) list.push_back({a.first, a.second});
  return list;
}

void print_polygon(const Io& io, const RightNormalForm& r, const PolygonLabeling& poly,
                   const std::vector<Axis>& axes) {
  io.out << "closed form: " << r.to_string() << '\n'
         << "n: " << poly.labels.size() << '\n'
         << "labels: " << join_ints(poly.labels) << '\n'
         << "p: " << r.p << '\n'
         << "antisymmetries:";
  for (const Axis& a : axes) io.out << " (" << a.first << ", " << a.second << ')';
  io.out << '\n';
}

int cmd_antisym(const Io& io, const std::string& text) {
  const Word w = bkl_to_artin(read_word(text));
  const RightNormalForm r = closed_representative(w);
  const PolygonLabeling poly = polygon_of(r);
  const std::vector<Axis> axes = antisymmetries(poly);
  if (io.globals.json) {
    io.emit({{"n", poly.labels.size()},
             {"labels", poly.labels},
             {"p", r.p},
             {"antisymmetries", axes_json(axes)},
             {"count", axes.size()}});
  } else {
    print_polygon(io, r, poly, axes);
    io.out << "count: " << axes.size() << '\n';
  }
  return kSuccess;
}

int cmd_count_e2(const Io& io, const std::string& text) {
  const Word w = bkl_to_artin(read_word(text));
  if (exponent_sum(w) != 2) {
    throw UsageError("count-e2 needs exponent sum 2, \"" + text + "\" has " +
                     std::to_string(exponent_sum(w)));
  }
  const int count = orbit_count_e2(w);
  std::optional<RightNormalForm> r;
  std::string excluded;
  try {
    r = closed_representative(w);
  } catch (const ExcludedClass& e) {
    excluded = e.class_name();
  }
  const PolygonLabeling poly = r ? polygon_of(*r) : PolygonLabeling{};
  const std::vector<Axis> axes = r ? antisymmetries(poly) : std::vector<Axis>{};
  if (io.globals.json) {
    io.emit({{"n", poly.labels.size()},
             {"labels", poly.labels},
             {"p", r ? r->p : 0},
             {"antisymmetries", axes_json(axes)},
             {"count", count},
             {"excluded_class", excluded.empty() ? Json(nullptr) : Json(excluded)}});
  } else {
    if (r) {
      print_polygon(io, *r, poly, axes);
    } else {
      io.out << "conjugate to " << excluded << " (no closed form)\n";
    }
    io.out << "count: " << count << '\n';
  }
  return kSuccess;
}

int cmd_selftest(const Io& io, const std::string& level) {
  selftest::AcceptanceOptions options;
  options.level = level == "quick" ? selftest::Level::Quick : selftest::Level::Full;
  options.seed = io.globals.seed;
  options.limits = io.limits();
  bool all = true;
  const auto results = selftest::run_acceptance(options, [&](const selftest::CriterionResult& r) {
    all = all && r.pass;
    if (!io.globals.json) io.out << selftest::format_result(r) << std::endl;
  });
  if (io.globals.json) {
    // Timings are left out so that repeated runs print the same bytes.
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    }
    io.emit({{"level", level}, {"seed", options.seed}, {"results", list}});
  }
  return all ? kSuccess : kFalse;
}

int cmd_dev_match(const Io& io, const std::string& text, int i) {
  const Word w = read_word(text);
  const LetterMatch m = find_complementary_letter(w, i);
  const char* side = m.side == MatchSide::LeftOfU ? "left" : "right";
  if (io.globals.json) {
    io.emit({{"input", text}, {"i", i}, {"side", side}, {"position", m.position},
             {"k", m.k}});
  } else {
    io.out << "side: " << side << "\nposition: " << m.position << "\nk: " << m.k << '\n';
  }
  return kSuccess;
}

int cmd_dev_shift(const Io& io, const std::string& text, const std::string& set, int i) {
  const Word w = read_word(text);
  const IndexSet positions = read_index_set(set);
  const IndexShift s = shift_off_dual_pair(w, positions, i);
  const Factorization before = build_factorization(w, positions);
  const Factorization after = build_factorization(w, s.positions);
  if (io.globals.json) {
    io.emit({{"input", text},
             {"I", positions.positions()},
             {"i", i},
             {"J", s.positions.positions()},
             {"moves", move_list(s.moves)},
             {"before", {{"factors", factor_list(before)}}},
             {"after", {{"factors", factor_list(after)}}}});
  } else {
    io.out << "J: " << join_ints(s.positions.positions()) << '\n'
           << "moves: " << format_moves(s.moves) << '\n'
           << "before: " << join_factors(before) << '\n'
           << "after: " << join_factors(after) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals globals;
  CLI::App app{"Exact computations with 3-strand braids", "braid3"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", globals.json, "Print machine-readable JSON");
  app.add_option("--cap", globals.cap, "Search cap in stored states")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", globals.seed, "Seed for randomized sweeps")->capture_default_str();

  std::function<int(const Io&)> action;
  std::string w1, w2, level = "full", set;
  int position = 0;
  bool flag = false;

  auto word_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("WORD", w1, "Braid word")->required();
    sub->callback([&, fn] { action = [&, fn](const Io& io) { return fn(io, w1); }; });
    return sub;
  };

  auto* nf = app.add_subcommand("nf", "Left normal form D^t · f1 · f2 ...");
  nf->add_option("WORD", w1, "Braid word")->required();
  nf->add_flag("--dual", flag, "Use the band generator structure");
  nf->callback([&] { action = [&](const Io& io) { return cmd_nf(io, w1, flag); }; });

  auto* eq = app.add_subcommand("eq", "Decide whether two words are the same braid");
  eq->add_option("W1", w1, "First word")->required();
  eq->add_option("W2", w2, "Second word")->required();
  eq->callback([&] { action = [&](const Io& io) { return cmd_eq(io, w1, w2); }; });

  word_cmd("e", "Exponent sum", cmd_e);
  word_cmd("qp", "Quasipositivity verdict and positive form", cmd_qp);

  auto* reps = app.add_subcommand("reps", "One factorization per Hurwitz orbit");
  reps->add_option("WORD", w1, "Braid word")->required();
  reps->add_flag("--bkl", flag, "Search with band generators");
  reps->callback([&] { action = [&](const Io& io) { return cmd_reps(io, w1, flag); }; });

  word_cmd("orbits", "Orbit partition of the candidates, with orbit sizes", cmd_orbits);

  auto* equiv = app.add_subcommand("equiv", "Hurwitz equivalence with a witness");
  equiv->add_option("F1", w1, "JSON {\"factors\": [...]}")->required();
  equiv->add_option("F2", w2, "JSON {\"factors\": [...]}")->required();
  equiv->callback([&] { action = [&](const Io& io) { return cmd_equiv(io, w1, w2); }; });

  auto* orb = app.add_subcommand("orbit", "List a Hurwitz orbit");
  orb->add_option("F", w1, "JSON {\"factors\": [...]}")->required();
  orb->callback([&] { action = [&](const Io& io) { return cmd_orbit(io, w1); }; });

  word_cmd("rnf", "Right normal form u1 · ... · un · D^-p", cmd_rnf);
  word_cmd("antisym", "Polygon of the closed representative and its antisymmetries",
           cmd_antisym);
  word_cmd("count-e2", "Orbit count for exponent sum 2", cmd_count_e2);

  auto* self = app.add_subcommand("selftest", "Run the acceptance sweeps");
  self->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  self->add_flag("--quick", flag, "Same as --level quick");
  self->callback([&] {
    if (flag) level = "quick";
    action = [&](const Io& io) { return cmd_selftest(io, level); };
  });

  auto* dev = app.add_subcommand("dev", "Inspection of the rewriting steps");
  dev->require_subcommand(1);
  auto* match = dev->add_subcommand("match", "Complementary letter for position i of d^p");
  match->add_option("WORD", w1, "Positive word spelling d^p")->required();
  match->add_option("i", position, "1-based position")->required();
  match->callback([&] { action = [&](const Io& io) { return cmd_dev_match(io, w1, position); }; });
  auto* shift = dev->add_subcommand("shift", "Move an index set off a pair a_i a_i+1 = d");
  shift->add_option("WORD", w1, "Positive word")->required();
  shift->add_option("I", set, "JSON array of positions")->required();
  shift->add_option("i", position, "1-based position of the pair")->required();
  shift->callback(
      [&] { action = [&](const Io& io) { return cmd_dev_shift(io, w1, set, position); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const Io io{out, err, globals};
  try {
    return action(io);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (explored " << e.explored()
        << " states; raise --cap to search further)\n";
    return kCapExceeded;
  } catch (const ExcludedClass& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"braid3"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace braid3::cli
