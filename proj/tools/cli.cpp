#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "selfdual/algebra.hpp"
#include "selfdual/approx.hpp"
#include "selfdual/enumerate.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/hales_jewett.hpp"
#include "selfdual/proof_maps.hpp"
#include "selfdual/ramsey.hpp"
#include "selfdual/text.hpp"
#include "selfdual/words.hpp"

namespace selfdual::cli {
namespace {

using nlohmann::json;

struct Options {
  int L = -1;
  int K = -1;
  int M = -1;
  int N = -1;
  int colors = 2;
  int alphabet = -1;
  int max_N = 8;
  int threads = 1;
  std::uint64_t node_budget = 100'000'000;
  std::string mode = "conn";
  std::string format = "text";
  std::string verify;
  bool certificate = false;
  bool inverse = false;
  std::string kind = "h";
  std::string variant = "claim1";
  std::vector<std::string> args;
};

// A negative answer (no witness, not in range); reported on stdout, exit 4.
struct NotFound {
  std::string message;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  bool jsonl() const { return opt_.format == "jsonl"; }

  void emit(const std::string& text, const json& object) {
    if (jsonl())
      out_ << object.dump() << '\n';
    else
      out_ << text << '\n';
  }
  void emit(const Connection& c) { emit(format_connection(c), to_json(c)); }

  void need_args(std::size_t count, const char* usage) const {
    if (opt_.args.size() < count) throw InputError(std::string("usage: ") + usage);
  }
  int need(int value, const char* flag) const {
    if (value < 0) throw InputError(std::string("missing ") + flag);
    return value;
  }
  int arg_int(std::size_t index) const {
    const std::string& s = opt_.args.at(index);
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || value < 0) throw InputError("expected a natural number, got '" + s + "'", 0);
    return value;
  }

  // Alphabet shared by every connection and word given on the command line,
  // explicit --alphabet or the smallest one covering all letters.
  int common_alphabet(const std::vector<std::string>& conns, const std::vector<std::string>& words = {}) const {
    if (opt_.alphabet >= 0) return opt_.alphabet;
    int a = 0;
    for (const auto& text : conns)
      for (const Token t : parse_connection_text(text).tokens)
        if (t.is_letter()) a = std::max(a, t.value() + 1);
    for (const auto& text : words) {
      const auto kind = word_kind(text);
      a = std::max(a, kind == WordKind::constant_word ? parse_word(text).alphabet : parse_variable_word(text).alphabet());
    }
    return a;
  }

  static WordKind word_kind(const std::string& text) {
    try {
      parse_word(text);
      return WordKind::constant_word;
    } catch (const InputError&) {
      // fall through: contains the variable
    }
    const VariableWord x = parse_variable_word(text);
    return x.left_variable() ? WordKind::left_variable_word : WordKind::variable_word;
  }

  SpaceSpec space() const {
    return SpaceSpec{std::max(opt_.alphabet, 0), need(opt_.L, "--L"), need(opt_.K, "--K"), parse_space_mode(opt_.mode)};
  }

  SearchOptions search_options() const {
    if (opt_.threads < 1) throw DomainError("--threads must be at least 1");
    return SearchOptions{opt_.node_budget, opt_.threads};
  }

  void enumerate() {
    for (const SpaceElement& e : enumerate_space(space())) emit(format_element(e), to_json(e));
  }

  void count() {
    const SpaceSpec spec = space();
    const std::uint64_t n = space_size(spec);
    json j = to_json(spec);
    j["count"] = n;
    emit(std::to_string(n), j);
  }

  void validate() {
    need_args(1, "validate <connection>");
    const ParsedConnection parsed = parse_connection_text(opt_.args[0]);
    const int a = common_alphabet({opt_.args[0]});
    const ValidationReport report = validate_connection(parsed.tokens, parsed.choice, a);
    json j{{"ok", report.ok()}, {"L", report.length}, {"K", report.image}};
    if (report.ok()) {
      emit("ok L=" + std::to_string(report.length) + " K=" + std::to_string(report.image), j);
      return;
    }
    json violations = json::array();
    for (const Violation& v : report.violations)
      violations.push_back({{"code", to_string(v.code)}, {"position", v.position}});
    j["violations"] = violations;
    emit("invalid: " + report.describe(), j);
    status_ = kInvalidInput;
  }

  std::vector<Connection> connections(std::size_t from, std::size_t to) const {
    const std::vector<std::string> texts(opt_.args.begin() + static_cast<std::ptrdiff_t>(from),
                                         opt_.args.begin() + static_cast<std::ptrdiff_t>(to));
    const int a = common_alphabet(texts);
    std::vector<Connection> out;
    for (const auto& t : texts) out.push_back(parse_connection(t, a));
    return out;
  }

  void compose_verb() {
    need_args(2, "compose <outer> <inner>");
    const auto c = connections(0, 2);
    emit(compose(c[0], c[1]));
  }

  void segment_verb() {
    need_args(2, "segment <connection> <n>");
    emit(segment(connections(0, 1)[0], arg_int(1)));
  }

  void reduct_verb() {
    need_args(2, "reduct <candidate> <base>");
    const auto c = connections(0, 2);
    const auto w = reduct_witness(c[0], c[1]);
    if (!w) throw NotFound{"not a reduct"};
    emit(*w);
  }

  void segments_at() {
    need_args(2, "segments-at <base> <n>");
    for (const Connection& s : segment_set(connections(0, 1)[0], arg_int(1))) emit(s);
  }

  static json coloring_json(const SpaceSpec& spec, int M, int colors, const std::vector<int>& assignment) {
    json space = to_json(spec);
    space["M"] = M;
    return {{"space", space}, {"l", colors}, {"colors", assignment}};
  }
  static json words_coloring_json(int alphabet, int N, int colors, const std::vector<int>& assignment) {
    return {{"space", {{"mode", "words"}, {"alphabet", alphabet}, {"L", N}}}, {"l", colors}, {"colors", assignment}};
  }

  void print_certificate(const json& cert) { out_ << cert.dump() << '\n'; }

  void search(const std::string& kind) {
    if (!opt_.verify.empty()) return verify(kind);
    if (opt_.colors < 1) throw DomainError("--colors must be at least 1");
    if (kind == "hj") return search_hj();
    const SpaceMode mode = kind == "ramsey" ? SpaceMode::injections_only
                           : kind == "dual" ? SpaceMode::surjections_only
                                            : parse_space_mode(opt_.mode);
    const int K = need(opt_.K, "--K");
    const int M = need(opt_.M, "--M");
    const WitnessResult r = min_witness_N(K, M, opt_.colors, mode, opt_.max_N, search_options());
    json j{{"search", kind}, {"mode", to_string(mode)}, {"K", K},          {"M", M},
           {"colors", opt_.colors}, {"found", r.found}, {"failing", r.failing}};
    if (r.found) j["N"] = r.N;
    else j["max_N"] = r.N;
    const std::string text = r.found ? std::to_string(r.N) : "none up to N=" + std::to_string(r.N);
    emit(text, j);
    if (opt_.certificate && r.last_bad)
      print_certificate(coloring_json(r.last_bad->space, M, r.last_bad->colors, r.last_bad->assignment));
    if (!r.found) status_ = kNotFound;
  }

  void search_hj() {
    const int a = opt_.alphabet < 0 ? 2 : opt_.alphabet;
    const HalesJewettResult r = hj_min_N(a, opt_.colors, opt_.max_N, search_options());
    json j{{"search", "hj"}, {"alphabet", a}, {"colors", opt_.colors}, {"found", r.found}};
    if (r.found) j["N"] = r.N;
    else j["max_N"] = r.N;
    emit(r.found ? std::to_string(r.N) : "none up to N=" + std::to_string(r.N), j);
    if (opt_.certificate && r.last_bad) print_certificate(words_coloring_json(a, r.last_bad_N, opt_.colors, *r.last_bad));
    if (!r.found) status_ = kNotFound;
  }

  static json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
      return json::parse(in);
    } catch (const json::exception& e) {
      throw InputError("malformed JSON in " + path + ": " + e.what());
    }
  }

  static std::vector<int> read_assignment(const json& cert, int colors, std::size_t vertices) {
    std::vector<int> assignment;
    try {
      assignment = cert.at("colors").get<std::vector<int>>();
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed coloring: ") + e.what());
    }
    if (assignment.size() != vertices)
      throw DomainError("coloring has " + std::to_string(assignment.size()) + " entries, space has " +
                        std::to_string(vertices));
    for (const int c : assignment)
      if (c < 0 || c >= colors) throw DomainError("color " + std::to_string(c) + " outside 0.." + std::to_string(colors - 1));
    return assignment;
  }

  void verify(const std::string& kind) {
    const json cert = read_json_file(opt_.verify);
    int colors = 0;
    json space;
    try {
      colors = cert.at("l").get<int>();
      space = cert.at("space");
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed coloring: ") + e.what());
    }
    if (colors < 1) throw DomainError("coloring needs at least one color");

    if (space.value("mode", std::string()) == "words") {
      if (kind != "hj") throw DomainError("word colorings are checked with 'search hj'");
      const Hypergraph g = line_hypergraph(space.at("L").get<int>(), space.at("alphabet").get<int>());
      const auto assignment = read_assignment(cert, colors, static_cast<std::size_t>(g.vertices));
      if (const auto e = find_mono_edge(g, assignment)) {
        emit("monochromatic line " + std::to_string(*e) + " color " + std::to_string(assignment[g.edges[*e][0]]),
             json{{"verified", false}, {"edge", *e}});
        status_ = kNotFound;
        return;
      }
      emit("no monochromatic copy", json{{"verified", true}});
      return;
    }

    const SpaceSpec spec = space_from_json(space);
    const SpaceMode expected = kind == "ramsey" ? SpaceMode::injections_only
                               : kind == "dual" ? SpaceMode::surjections_only
                                                : spec.mode;
    if (kind == "hj" || spec.mode != expected)
      throw DomainError(std::string("coloring space mode ") + to_string(spec.mode) + " does not fit 'search " + kind + "'");
    const int M = opt_.M >= 0 ? opt_.M : space.value("M", -1);
    if (M < 0) throw InputError("missing --M (the coloring does not record it)");
    const CopyFamily family = copy_family(spec.L, spec.K, M, spec.mode);
    const Coloring coloring{spec, colors, read_assignment(cert, colors, family.vertices.size())};
    if (const auto mono = find_mono_copy(coloring, family)) {
      emit("monochromatic copy at anchor " + format_element(mono->anchor) + " color " + std::to_string(mono->color),
           json{{"verified", false}, {"anchor", to_json(mono->anchor)}, {"color", mono->color}});
      status_ = kNotFound;
      return;
    }
    emit("no monochromatic copy", json{{"verified", true}});
  }

  void axioms() {
    const int max_L = opt_.L < 0 ? 4 : opt_.L;
    const int max_a = opt_.alphabet < 0 ? 0 : opt_.alphabet;
    const AxiomReport report = check_axioms(max_L, max_a);
    if (!jsonl()) {
      out_ << "clause  result  instances  note\n";
      for (const ClauseResult& c : report.clauses) {
        out_ << std::left << std::setw(8) << c.clause << std::setw(8) << (c.passed ? "pass" : "FAIL") << std::setw(11)
             << c.instances << c.note << '\n';
        if (!c.passed) out_ << "        counterexample: " << c.counterexample << '\n';
      }
    } else {
      for (const ClauseResult& c : report.clauses)
        out_ << json{{"clause", c.clause}, {"passed", c.passed},           {"instances", c.instances},
                     {"note", c.note},     {"counterexample", c.counterexample}}
                    .dump()
             << '\n';
    }
    if (!report.all_passed()) status_ = kNotFound;
  }

  // ---- maps ----

  void map_sigma() {
    need_args(2, "maps sigma <word> <base>");
    const int a = common_alphabet({opt_.args[1]}, {opt_.args[0]});
    emit(sigma(parse_word(opt_.args[0], a), parse_connection(opt_.args[1], a)));
  }

  void map_sigma_inverse() {
    need_args(2, "maps sigma-inv <segment> <base>");
    const auto c = connections(0, 2);
    const Word w = sigma_inverse(c[0], c[1]);
    emit(format_word(w), json{{"word", format_word(w)}});
  }

  AlphabetShift shift_for(int input_alphabet, bool inverse) const {
    if (opt_.kind == "h") {
      if (inverse) return AlphabetShift::h_extend(input_alphabet);
      if (input_alphabet < 1) throw DomainError("h: the letter side needs at least one letter (pass --alphabet)");
      return AlphabetShift::h_extend(input_alphabet - 1);
    }
    if (opt_.kind == "h-prime") return AlphabetShift::h_prime(need(opt_.N, "--N"));
    throw InputError("unknown shift kind '" + opt_.kind + "' (h or h-prime)");
  }

  void map_shift() {
    need_args(1, "maps shift <connection> [--kind h|h-prime] [--N n] [--inverse]");
    int a = common_alphabet({opt_.args[0]});
    if (opt_.kind == "h-prime") a = opt_.inverse ? 0 : need(opt_.N, "--N");
    emit(apply_shift(shift_for(a, opt_.inverse), parse_connection(opt_.args[0], a), opt_.inverse));
  }

  void map_theta() {
    need_args(2, "maps theta <x> <base> [--variant claim1|claim4] [--N n] [--inverse]");
    if (opt_.variant != "claim1" && opt_.variant != "claim4")
      throw InputError("unknown theta variant '" + opt_.variant + "'");
    const bool claim4 = opt_.variant == "claim4";
    const int base_alphabet = claim4 ? 0 : common_alphabet({opt_.args[1]});
    const Connection base = parse_connection(opt_.args[1], base_alphabet);
    const ThetaMap map = claim4 ? ThetaMap::claim4(base, need(opt_.N, "--N")) : ThetaMap::claim1(base);
    const int x_alphabet = opt_.inverse ? base_alphabet : map.domain_alphabet();
    const Connection x = parse_connection(opt_.args[0], x_alphabet);
    emit(opt_.inverse ? map.inverse(x) : map.forward(x));
  }

  void map_left_word() {
    need_args(1, "maps left-word <w0> <x>...");
    const std::vector<std::string> words(opt_.args.begin(), opt_.args.end());
    const int a = common_alphabet({}, words);
    const Word w0 = parse_word(words[0], a);
    std::vector<VariableWord> xs;
    for (std::size_t i = 1; i < words.size(); ++i) xs.push_back(parse_variable_word(words[i], a));
    const RigidSurjection r = left_word_to_connection(w0, xs);
    emit(format_tokens(r.tokens()), to_json(SpaceElement(r)));
  }

  void map_freeze() {
    need_args(2, "maps freeze <witness> <n>");
    emit(freeze_below(connections(0, 1)[0], arg_int(1)));
  }

  void map_fuse() {
    need_args(1, "maps fuse <connection>...");
    for (const Connection& s : fuse(connections(0, opt_.args.size()))) emit(s);
  }

  void map_project() { emit(canonical_projection(need(opt_.N, "--N"), need(opt_.K, "--K"))); }

  void map_u_prime() {
    need_args(2, "maps u-prime <connection> <n>");
    const ApproximationRecord r = u_prime_n(connections(0, 1)[0], arg_int(1));
    json t = json::array();
    for (const Token tok : r.tokens) t.push_back(format_token(tok));
    emit(format_tokens(r.tokens) + "|" + format_naturals(r.choice) + (r.tail_relaxed ? " tail_relaxed" : ""),
         json{{"alphabet", r.alphabet}, {"t", t}, {"i", r.choice}, {"tail_relaxed", r.tail_relaxed}});
  }

  void map_a4() {
    need_args(2, "maps a4 <base> <t> [<O member>...]");
    const auto c = connections(0, opt_.args.size());
    const std::set<Connection> O(c.begin() + 2, c.end());
    const auto outcome = verify_a4_instance(c[0], c[1], O);
    if (!outcome) throw NotFound{"no reduct decides O at this truncation"};
    json approx = json::array();
    std::string listing;
    for (const Connection& s : outcome->approximations) {
      approx.push_back(to_json(s));
      listing += (listing.empty() ? "" : " ") + format_connection(s);
    }
    const char* side = outcome->inside ? "O" : "complement";
    emit(format_connection(outcome->reduct) + " side " + side + " approximations " + listing,
         json{{"reduct", to_json(outcome->reduct)}, {"side", side}, {"approximations", approx}});
  }

  void map_classify() {
    need_args(1, "maps classify <symbols>");
    const char* kind = to_string(word_kind(opt_.args[0]));
    emit(kind, json{{"kind", kind}});
  }

  void map_substitute() {
    need_args(2, "maps substitute <x> <letter>");
    const int a = common_alphabet({}, {opt_.args[0], opt_.args[1]});
    const Word letter = parse_word(opt_.args[1], a);
    if (letter.length() != 1) throw InputError("expected a single letter, got '" + opt_.args[1] + "'");
    const Word w = substitute(parse_variable_word(opt_.args[0], a), letter.letters[0]);
    emit(format_word(w), json{{"word", format_word(w)}});
  }

  void map_span() {
    need_args(2, "maps span <w> <w0> <x>...");
    const std::vector<std::string> words(opt_.args.begin(), opt_.args.end());
    const int a = common_alphabet({}, words);
    std::vector<VariableWord> xs;
    for (std::size_t i = 2; i < words.size(); ++i) xs.push_back(parse_variable_word(words[i], a));
    const auto d = span_membership(parse_word(words[0], a), parse_word(words[1], a), xs);
    if (!d) throw NotFound{"not in the span"};
    const std::string letters = format_symbols(d->letters);
    emit("indices=[" + format_naturals(d->indices) + "] letters=[" + letters + "]",
         json{{"indices", d->indices}, {"letters", letters}});
  }

  int status() const { return status_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  int status_ = kSuccess;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Connections, copies and minimal Ramsey witnesses at finite size", "selfdual"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--L", opt.L, "numeric length (max length for axioms)");
  app.add_option("--K", opt.K, "numeric image size");
  app.add_option("--M", opt.M, "copy size parameter");
  app.add_option("--N", opt.N, "space size (project, h-prime, claim4)");
  app.add_option("--colors", opt.colors, "number of colors")->capture_default_str();
  app.add_option("--alphabet", opt.alphabet, "alphabet size (default: inferred)");
  app.add_option("--mode", opt.mode, "space mode")->check(CLI::IsMember({"conn", "surj", "inj"}))->capture_default_str();
  app.add_option("--max-N", opt.max_N, "largest N tried by a search")->capture_default_str();
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
  app.add_option("--threads", opt.threads, "search worker threads")->capture_default_str();
  app.add_option("--node-budget", opt.node_budget, "backtracking node budget per search")->capture_default_str();
  app.add_option("--verify", opt.verify, "check a coloring certificate instead of searching");
  app.add_flag("--certificate", opt.certificate, "print the bad coloring at the largest failing N");
  app.add_flag("--inverse", opt.inverse, "apply the inverse map");
  app.add_option("--kind", opt.kind, "shift kind: h or h-prime")->capture_default_str();
  app.add_option("--variant", opt.variant, "theta variant: claim1 or claim4")->capture_default_str();

  std::vector<std::pair<CLI::App*, std::function<void(Session&)>>> verbs;
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& args_help,
                  std::function<void(Session&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    if (!args_help.empty()) sub->add_option("args", opt.args, args_help);
    verbs.emplace_back(sub, std::move(fn));
    return sub;
  };

  verb(&app, "enumerate", "list every element of a space", "", [](Session& s) { s.enumerate(); });
  verb(&app, "count", "size of a space", "", [](Session& s) { s.count(); });
  verb(&app, "validate", "check a connection", "connection", [](Session& s) { s.validate(); });
  verb(&app, "compose", "outer . inner", "outer inner", [](Session& s) { s.compose_verb(); });
  verb(&app, "segment", "the n-th initial segment", "connection n", [](Session& s) { s.segment_verb(); });
  verb(&app, "reduct", "witness w with candidate = w . base", "candidate base", [](Session& s) { s.reduct_verb(); });
  verb(&app, "segments-at", "n-segments of the reducts of base", "base n", [](Session& s) { s.segments_at(); });
  verb(&app, "axioms", "exhaustive finite check of A.1-A.3", "", [](Session& s) { s.axioms(); });

  CLI::App* search = app.add_subcommand("search", "least witness N");
  search->require_subcommand(1);
  verb(search, "sd", "copies of F_{M,K} in F_{N,K} (--mode)", "", [](Session& s) { s.search("sd"); });
  verb(search, "ramsey", "increasing injections (classical Ramsey)", "", [](Session& s) { s.search("ramsey"); });
  verb(search, "dual", "rigid surjections (dual Ramsey)", "", [](Session& s) { s.search("dual"); });
  verb(search, "hj", "combinatorial lines in A^N", "", [](Session& s) { s.search("hj"); });

  CLI::App* maps = app.add_subcommand("maps", "proof maps and word operations");
  maps->require_subcommand(1);
  verb(maps, "sigma", "0-segment for a word", "word base", [](Session& s) { s.map_sigma(); });
  verb(maps, "sigma-inv", "word for a 0-segment", "segment base", [](Session& s) { s.map_sigma_inverse(); });
  verb(maps, "shift", "conjugate by h or h'", "connection", [](Session& s) { s.map_shift(); });
  verb(maps, "theta", "theta / theta' and inverses", "x base", [](Session& s) { s.map_theta(); });
  verb(maps, "left-word", "rigid surjection from w0 and left-variable words", "w0 x...",
       [](Session& s) { s.map_left_word(); });
  verb(maps, "freeze", "identity below n", "witness n", [](Session& s) { s.map_freeze(); });
  verb(maps, "fuse", "stable segments of a chain", "connection...", [](Session& s) { s.map_fuse(); });
  verb(maps, "project", "canonical projection in F_{N,K}", "", [](Session& s) { s.map_project(); });
  verb(maps, "u-prime", "literal truncation", "connection n", [](Session& s) { s.map_u_prime(); });
  verb(maps, "a4", "decide O on a reduct", "base t O...", [](Session& s) { s.map_a4(); });
  verb(maps, "classify", "constant, variable or left-variable", "symbols", [](Session& s) { s.map_classify(); });
  verb(maps, "substitute", "replace v by a letter", "x letter", [](Session& s) { s.map_substitute(); });
  verb(maps, "span", "membership in w0 ^ [X]", "w w0 x...", [](Session& s) { s.map_span(); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  Session session(opt, out);
  try {
    for (auto& [sub, fn] : verbs) {
      if (sub->parsed()) {
        fn(session);
        return session.status();
      }
    }
    err << "no verb given\n";
    return kInvalidInput;
  } catch (const NotFound& e) {
    out << (opt.format == "jsonl" ? json{{"found", false}, {"reason", e.message}}.dump() : "none: " + e.message) << '\n';
    return kNotFound;
  } catch (const InputError& e) {
    err << "grammar error at offset " << e.position() << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const FrozenWitnessInvalid& e) {
    out << "none: " << e.what() << '\n';
    return kNotFound;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotInRange& e) {
    out << "none: " << e.what() << '\n';
    return kNotFound;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const FusionIncoherent& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace selfdual::cli
