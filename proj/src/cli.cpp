#include "pureartin/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pureartin/errors.hpp"
#include "pureartin/folding.hpp"
#include "pureartin/lkb.hpp"
#include "pureartin/nilpotence.hpp"

namespace pureartin::cli {

using nlohmann::ordered_json;

namespace {

std::optional<int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

ArtinWord parse_word(TypeId type, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  int token_no = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    ++token_no;
    auto fail = [&](const std::string& why) {
      return InvalidInput("token " + std::to_string(token_no) + " ('" + std::string(tok) +
                          "') at column " + std::to_string(pos + 1) + ": " + why);
    };
    int gen = 0;
    int exp = 1;
    if (tok.front() == 's' || tok.front() == 'S') {
      std::string_view body = tok.substr(1);
      const auto caret = body.find('^');
      auto g = parse_int(body.substr(0, caret));
      if (!g || body.substr(0, caret).front() == '-' || body.substr(0, caret).front() == '+')
        throw fail("malformed generator");
      gen = *g;
      if (caret != std::string_view::npos) {
        auto e = parse_int(body.substr(caret + 1));
        if (!e) throw fail("malformed exponent");
        if (*e == 0) throw fail("exponent must be nonzero");
        exp = *e;
      }
    } else {
      auto v = parse_int(tok);
      if (!v) throw fail("expected a signed integer or s<i>^<k>");
      gen = *v < 0 ? -*v : *v;
      exp = *v < 0 ? -1 : 1;
    }
    if (gen == 0) throw fail("generator indices start at 1");
    if (gen > type.rank())
      throw fail("generator index out of range 1.." + std::to_string(type.rank()) + " for " +
                 type.name());
    for (int k = 0; k < (exp < 0 ? -exp : exp); ++k) letters.push_back({gen, exp < 0 ? -1 : 1});
    pos = end;
  }
  return ArtinWord(type, std::move(letters));
}

namespace {

struct Options {
  std::string type;
  int order = kDefaultOrder;
  std::string mode;
  std::uint64_t seed = kDefaultSeed;
  std::string table;
  std::string out;
  bool json = false;
  std::string word;
  std::string word2;
  std::string fixture = "default";
  std::string folding;
  std::string level = "W";
  std::size_t count = 1000;
  std::size_t length = 20;
  int rmax = 3;
  std::size_t samples = 20;
  bool escalate = false;
  bool unchecked = false;
  bool injective = false;
};

struct Outcome {
  int code = kOk;
  std::string text;
  ordered_json report;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingData("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TypeId need_type(const Options& o) {
  if (o.type.empty()) throw InvalidInput("--type is required");
  return TypeId::parse(o.type);
}

ArtinWord need_word(TypeId type, const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidInput(std::string(flag) + " is required");
  return parse_word(type, text);
}

EvalMode mode_of(const Options& o, EvalMode fallback) {
  if (o.mode.empty()) return fallback;
  if (o.mode == "exact") return EvalMode::exact();
  if (o.mode == "trunc" || o.mode == "truncated") return EvalMode::truncated(o.order);
  throw InvalidInput("--mode must be exact or trunc, got '" + o.mode + "'");
}

void register_table(const Options& o, RepRegistry& reg) {
  if (!o.table.empty()) reg.add_table_file(o.table);
}

ordered_json word_json(const ArtinWord& w) { return w.to_string(); }

ordered_json images_json(const FoldingDef& f) {
  auto arr = ordered_json::array();
  for (const auto& w : f.images) {
    auto img = ordered_json::array();
    for (const auto& l : w.letters()) img.push_back(l.gen);
    arr.push_back(img);
  }
  return arr;
}

std::string relation_name(int i, int j, int m) {
  std::string s = "(s" + std::to_string(i) + ", s" + std::to_string(j) + ")";
  return m == 2 ? s + " commutation" : s + " braid relation of length " + std::to_string(m);
}

// ---------------------------------------------------------------- commands

Outcome cmd_info(const Options& o) {
  const TypeId type = need_type(o);
  auto rs = root_system(type);
  Outcome out;
  auto& r = out.report;
  r["type"] = type.name();
  r["rank"] = type.rank();
  r["reflections"] = rs->size();
  r["coxeter_number"] = type.coxeter_number();
  r["group_order"] = type.group_order();
  r["crystallographic"] = type.is_crystallographic();
  r["simply_laced"] = type.is_simply_laced();
  std::ostringstream t;
  t << type.name() << ": rank " << type.rank() << ", N=" << rs->size() << ", Coxeter number "
    << type.coxeter_number() << ", |W|=" << type.group_order();
  if (type.is_simply_laced()) {
    RepRegistry reg;
    r["route"] = "direct";
    r["table_available"] = reg.available(type);
    t << ", direct representation" << (reg.available(type) ? "" : " (no table installed)");
  } else {
    const auto routes = folding_routes(type);
    r["route"] = routes.front().id();
    r["folding_target"] = routes.front().target.name();
    auto alts = ordered_json::array();
    for (std::size_t k = 1; k < routes.size(); ++k) alts.push_back(routes[k].id());
    r["alternative_routes"] = alts;
    t << ", folding target " << routes.front().target.name() << " (" << routes.front().id()
      << ")";
    for (std::size_t k = 1; k < routes.size(); ++k) t << ", also " << routes[k].id();
  }
  out.text = t.str();
  return out;
}

Outcome cmd_pure(const Options& o) {
  const TypeId type = need_type(o);
  const ArtinWord w = need_word(type, o.word, "--word");
  auto rs = root_system(type);
  const WElem x = rs->word_to_w(w);
  std::size_t length = 0;
  for (std::size_t p = 0; p < rs->size(); ++p)
    if (x.apply(static_cast<std::uint32_t>(p)) >= rs->size()) ++length;
  Outcome out;
  out.report["type"] = type.name();
  out.report["word"] = word_json(w);
  out.report["pure"] = x.is_identity();
  out.report["w_length"] = length;
  out.text = w.to_string() + (x.is_identity() ? " is pure" : " is not pure") +
             " (image in W has length " + std::to_string(length) + ")";
  return out;
}

Outcome cmd_depth(const Options& o) {
  const TypeId type = need_type(o);
  const ArtinWord w = need_word(type, o.word, "--word");
  RepRegistry reg;
  register_table(o, reg);
  const auto cert = certify(w, o.order, reg);
  Outcome out;
  out.report = cert.to_json();
  std::ostringstream t;
  t << "v = " << cert.valuation.to_string() << " at K=" << cert.order << " (" << cert.route << "); ";
  if (auto r = cert.excluded_from())
    t << "nontrivial, not in C^r P for all r >= " << *r << " (C1=(P,P))";
  else
    t << "inconclusive up to K=" << cert.order << "; raise --order or compare in exact mode";
  out.text = t.str();
  return out;
}

Outcome cmd_separate(const Options& o) {
  const TypeId type = need_type(o);
  const ArtinWord w1 = need_word(type, o.word, "--word");
  const ArtinWord w2 = need_word(type, o.word2, "--word2");
  RepRegistry reg;
  register_table(o, reg);
  const auto s = separate(w1, w2, mode_of(o, EvalMode::truncated(o.order)), reg, o.escalate);
  Outcome out;
  out.report = s.to_json();
  out.report["word1"] = word_json(w1);
  out.report["word2"] = word_json(w2);
  std::ostringstream t;
  t << s.verdict_name();
  if (s.order) t << " at h-order " << *s.order;
  if (s.exact)
    t << " (exact evaluation)";
  else if (s.verdict == Separation::Verdict::Indistinguishable)
    t << " up to K=" << s.truncation << " (inconclusive)";
  out.text = t.str();
  return out;
}

Outcome cmd_verify_rep(const Options& o) {
  const TypeId type = need_type(o);
  RepTable table;
  std::optional<std::string> source_text;
  if (!o.table.empty()) {
    source_text = read_text(o.table);
    table = parse_table(*source_text);
    if (table.type != type)
      throw InvalidInput("table is for " + table.type.name() + ", not " + type.name());
  } else if (type.family() == Family::A) {
    table = builtin_typeA_table(type.param());
  } else if (type.is_simply_laced()) {
    const auto path = RepRegistry::default_table_dir() / (type.name() + ".json");
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
      throw MissingData("no representation table for " + type.name() + " at " + path.string());
    source_text = read_text(path.string());
    table = parse_table(*source_text);
  } else {
    throw InvalidInput(type.name() + " has no direct representation; use verify-folding");
  }
  const EvalMode mode = mode_of(o, default_validation_mode(table.dimension));
  const auto spec = verify_specialization(table);
  const auto rel = verify_braid_relations(table, mode);

  Outcome out;
  auto& r = out.report;
  r["type"] = type.name();
  r["dimension"] = table.dimension;
  r["mode"] = mode.is_exact() ? "exact" : "trunc";
  if (!mode.is_exact()) r["K"] = mode.order();
  r["strength"] = rel.strength();
  auto specs = ordered_json::array();
  for (const auto& c : spec.checks) {
    ordered_json j{{"gen", c.gen}, {"pass", c.pass}};
    if (!c.pass) j["problem"] = c.problem;
    specs.push_back(j);
  }
  r["specialization"] = specs;
  auto rels = ordered_json::array();
  for (const auto& c : rel.checks)
    rels.push_back(ordered_json{{"i", c.i}, {"j", c.j}, {"m", c.m}, {"pass", c.pass}});
  r["relations"] = rels;
  if (source_text) r["canonical"] = emit_table(table) == *source_text;
  const bool pass = spec.all_pass() && rel.all_pass();
  r["pass"] = pass;
  out.code = pass ? kOk : kFailed;

  std::ostringstream t;
  t << type.name() << " (dimension " << table.dimension << "): ";
  if (pass) {
    t << "specialization ok, " << rel.checks.size() << " relations hold (" << rel.strength()
      << ", " << mode.to_string() << ")";
  } else if (!spec.all_pass()) {
    for (const auto& c : spec.checks)
      if (!c.pass) {
        t << "specialization fails for s" << c.gen << ": " << c.problem;
        break;
      }
  } else {
    const auto* bad = rel.first_failure();
    t << "FAIL: " << relation_name(bad->i, bad->j, bad->m) << " violated";
  }
  out.text = t.str();
  return out;
}

Outcome cmd_verify_folding(const Options& o) {
  const FoldingDef f = !o.folding.empty() ? parse_folding(read_text(o.folding))
                                          : folding_fixture(need_type(o), o.fixture);
  if (!o.type.empty() && TypeId::parse(o.type) != f.source)
    throw InvalidInput("folding source is " + f.source.name() + ", not " + o.type);
  FoldingReport rep;
  if (o.level == "W") {
    rep = verify_folding_W(f);
  } else if (o.level == "rep") {
    RepRegistry reg;
    register_table(o, reg);
    const auto dim = root_system(f.target)->size();
    rep = verify_folding_rep(f, reg, mode_of(o, default_validation_mode(dim)));
  } else {
    throw InvalidInput("--level must be W or rep");
  }
  Outcome out;
  auto& r = out.report;
  r["id"] = f.id();
  r["source"] = f.source.name();
  r["target"] = f.target.name();
  r["images"] = images_json(f);
  r["provenance"] = provenance_name(f.provenance);
  r["level"] = rep.level;
  r["strength"] = rep.strength;
  r["orbit_commutation"] = rep.orbit_commutation;
  r["images_disjoint"] = rep.images_disjoint;
  auto rels = ordered_json::array();
  for (const auto& c : rep.relations)
    rels.push_back(ordered_json{{"i", c.i}, {"j", c.j}, {"m", c.m}, {"pass", c.pass}});
  r["relations"] = rels;
  if (!rep.note.empty()) r["note"] = rep.note;
  if (o.injective) {
    const auto map = induced_w_map(f);
    r["source_order"] = map.source_order;
    r["image_size"] = map.image_size;
    r["injective"] = map.injective();
  }
  bool pass = rep.all_pass();
  if (o.injective) pass = pass && r["injective"].get<bool>();
  r["pass"] = pass;
  out.code = pass ? kOk : kFailed;

  std::ostringstream t;
  t << f.id() << " [" << provenance_name(f.provenance) << "] at " << rep.level << " level: ";
  if (!rep.orbit_commutation) t << "image letters do not commute; ";
  const auto fails = rep.failures();
  if (fails.empty()) {
    t << "all " << rep.relations.size() << " relations hold";
  } else {
    t << "FAIL:";
    for (const auto& c : fails) t << " " << relation_name(c.i, c.j, c.m) << " violated;";
  }
  t << " (" << rep.strength << ")";
  if (o.injective) t << "; |image of W| = " << r["image_size"].get<std::size_t>();
  if (!rep.note.empty()) t << "; " << rep.note;
  out.text = t.str();
  return out;
}

Outcome cmd_verify_diagram(const Options& o) {
  const TypeId type = need_type(o);
  RepRegistry reg;
  register_table(o, reg);
  const Route route = resolve_route(type);
  auto images = reg.truncated(route.target, o.order);
  auto target_rs = root_system(route.target);
  WordSampler sampler(o.seed);
  std::size_t mismatches = 0;
  std::optional<std::string> first;
  for (std::size_t k = 0; k < o.count; ++k) {
    const ArtinWord w = sampler.word(type, o.length);
    const ArtinWord tw = route.apply(w);
    const MatrixQ lhs = reduce_mod_h(eval_word_truncated(*images, tw));
    const MatrixQ rhs = target_rs->conj_matrix(target_rs->word_to_w(tw));
    if (!(lhs == rhs)) {
      ++mismatches;
      if (!first) first = w.to_string();
    }
  }
  Outcome out;
  auto& r = out.report;
  r["type"] = type.name();
  r["route"] = route.name();
  r["words"] = o.count;
  r["max_length"] = o.length;
  r["K"] = o.order;
  r["seed"] = o.seed;
  r["prng"] = kPrngName;
  r["mismatches"] = mismatches;
  if (first) r["first_mismatch"] = *first;
  r["pass"] = mismatches == 0;
  out.code = mismatches == 0 ? kOk : kFailed;
  out.text = "diagram check on " + std::to_string(o.count) + " words (" + route.name() + "): " +
             (mismatches == 0 ? std::string("reduce_mod_h . eval_word = conj_perm . word_to_w")
                              : std::to_string(mismatches) + " mismatches, first " + *first);
  return out;
}

Outcome cmd_audit(const Options& o) {
  const TypeId type = need_type(o);
  AuditReport rep;
  if (o.unchecked) {
    if (o.table.empty()) throw InvalidInput("--unchecked needs --table");
    RepTable table = parse_table(read_text(o.table));
    if (table.type != type)
      throw InvalidInput("table is for " + table.type.name() + ", not " + type.name());
    rep = filtration_audit_unchecked(table, o.rmax, o.order, o.samples, o.seed);
  } else {
    RepRegistry reg;
    register_table(o, reg);
    rep = filtration_audit(type, o.rmax, o.order, o.samples, o.seed, reg);
  }
  Outcome out;
  out.report = rep.to_json();
  out.code = rep.all_pass() ? kOk : kFailed;
  std::ostringstream t;
  t << "filtration audit " << type.name() << " (" << rep.route << "), r <= " << rep.r_max
    << ", K=" << rep.order << ", " << rep.samples << " witnesses per level: ";
  if (rep.all_pass()) {
    t << "all satisfy v >= r+1";
  } else {
    std::size_t bad = 0;
    for (const auto& e : rep.entries) bad += e.pass ? 0 : 1;
    t << "FAIL, " << bad << " witnesses below r+1";
  }
  out.text = t.str();
  return out;
}

Outcome cmd_foldings(const Options&) {
  Outcome out;
  auto list = ordered_json::array();
  std::ostringstream t;
  for (const auto& f : builtin_foldings()) {
    const auto rep = verify_folding_W(f);
    ordered_json j;
    j["id"] = f.id();
    j["source"] = f.source.name();
    j["target"] = f.target.name();
    j["images"] = images_json(f);
    j["provenance"] = provenance_name(f.provenance);
    j["w_level_pass"] = rep.all_pass();
    list.push_back(j);
    t << f.id() << "  " << provenance_name(f.provenance) << "  "
      << (rep.all_pass() ? "W-level pass" : "W-level FAIL") << "\n";
  }
  out.report["foldings"] = list;
  out.text = t.str();
  if (!out.text.empty()) out.text.pop_back();
  return out;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "Coxeter type, e.g. A3, D6, H4, I2(7), G2");
  sub->add_option("--order,-K", o.order, "truncation order K")->check(CLI::NonNegativeNumber);
  sub->add_option("--mode", o.mode, "exact or trunc");
  sub->add_option("--seed", o.seed, "PRNG seed");
  sub->add_option("--table", o.table, "representation table JSON file");
  sub->add_option("--out", o.out, "also write the JSON report to this file");
  sub->add_flag("--json", o.json, "print the JSON report on stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pure Artin group depth certificates via Krammer-Digne representations",
               "pureartin"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    std::function<Outcome(const Options&)> fn;
  };
  const std::vector<Command> commands = {
      {"info", "reflection count, Coxeter number and representation route", cmd_info},
      {"pure", "test whether a word lies in the pure Artin group", cmd_pure},
      {"depth", "h-adic depth certificate for a pure word", cmd_depth},
      {"separate", "distinguish two pure words", cmd_separate},
      {"verify-rep", "check specialization and braid relations of a table", cmd_verify_rep},
      {"verify-folding", "check a folding morphism", cmd_verify_folding},
      {"verify-diagram", "check reduction mod h against the conjugation action",
       cmd_verify_diagram},
      {"audit", "lower central series filtration audit", cmd_audit},
      {"foldings", "list the folding registry", cmd_foldings},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    subs.emplace_back(sub, &c);
  }
  auto* sub = app.get_subcommand("pure");
  sub->add_option("--word", o.word, "word, e.g. \"1 2 -1\" or \"s1 s2 s1^-1\"");
  sub = app.get_subcommand("depth");
  sub->add_option("--word", o.word, "pure word");
  sub = app.get_subcommand("separate");
  sub->add_option("--word", o.word, "first pure word");
  sub->add_option("--word2", o.word2, "second pure word");
  sub->add_flag("--escalate", o.escalate, "rerun exactly when truncation is inconclusive");
  sub = app.get_subcommand("verify-folding");
  sub->add_option("--fixture", o.fixture, "default, corrected or paper-as-printed");
  sub->add_option("--folding", o.folding, "folding JSON file");
  sub->add_option("--level", o.level, "W or rep");
  sub->add_flag("--injective", o.injective, "enumerate W(source) and certify injectivity");
  sub = app.get_subcommand("verify-diagram");
  sub->add_option("--count", o.count, "number of random words");
  sub->add_option("--length", o.length, "maximal word length");
  sub = app.get_subcommand("audit");
  sub->add_option("--rmax", o.rmax, "highest LCS level");
  sub->add_option("--samples", o.samples, "witnesses per level");
  sub->add_flag("--unchecked", o.unchecked, "use --table without validation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const Command* chosen = nullptr;
  for (const auto& [s, c] : subs)
    if (s->parsed()) chosen = c;

  Outcome outcome;
  std::string error;
  try {
    outcome = chosen->fn(o);
  } catch (const MissingData& e) {
    outcome.code = kMissingData;
    error = e.what();
  } catch (const ValidationFailure& e) {
    outcome.code = kFailed;
    error = e.what();
  } catch (const NotInvertible& e) {
    outcome.code = kFailed;
    error = e.what();
  } catch (const InvalidInput& e) {
    outcome.code = kInvalidInput;
    error = e.what();
  } catch (const CapExceeded& e) {
    outcome.code = kInvalidInput;
    error = e.what();
  }

  ordered_json doc;
  doc["command"] = chosen->name;
  doc["exit_code"] = outcome.code;
  if (!error.empty()) {
    doc["status"] = "error";
    doc["error"] = error;
  } else {
    doc["status"] = outcome.code == kOk ? "ok" : "fail";
    doc["report"] = outcome.report;
  }
  const std::string dumped = doc.dump(2) + "\n";

  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kInvalidInput;
    }
    f << dumped;
  }
  if (!error.empty()) {
    err << "error: " << error << "\n";
    if (o.json) out << dumped;
    return outcome.code;
  }
  if (o.json) {
    err << outcome.text << "\n";
    out << dumped;
  } else {
    out << outcome.text << "\n";
  }
  return outcome.code;
}

}  // namespace pureartin::cli
