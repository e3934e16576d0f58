#include "pureartin/nilpotence.hpp"

#include "pureartin/errors.hpp"

namespace pureartin {

std::uint64_t WordSampler::below(std::uint64_t n) {
  if (n == 0) throw InvalidInput("empty sampling range");
  return rng_() % n;
}

ArtinWord WordSampler::word(TypeId type, std::size_t max_len) {
  const auto len = below(max_len + 1);
  std::vector<Letter> letters;
  for (std::uint64_t k = 0; k < len; ++k) {
    const int gen = 1 + static_cast<int>(below(static_cast<std::uint64_t>(type.rank())));
    letters.push_back({gen, below(2) ? -1 : 1});
  }
  return ArtinWord(type, std::move(letters));
}

ArtinWord WordSampler::pure_leaf(TypeId type, std::size_t max_conj_len) {
  ArtinWord u = word(type, max_conj_len);
  const int gen = 1 + static_cast<int>(below(static_cast<std::uint64_t>(type.rank())));
  const int sign = below(2) ? -1 : 1;
  return u * ArtinWord(type, {{gen, sign}, {gen, sign}}) * u.inverse();
}

std::vector<ArtinWord> sample_pure(TypeId type, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw InvalidInput("sample count must be >= 1");
  WordSampler sampler(seed);
  std::vector<ArtinWord> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(sampler.pure_leaf(type));
  return out;
}

// ---------------------------------------------------------------- witnesses

LcsWitness LcsWitness::from_leaves(std::vector<ArtinWord> leaves) {
  if (leaves.size() < 2) throw InvalidInput("a witness needs at least two leaves");
  auto rs = root_system(leaves.front().type());
  for (std::size_t k = 0; k < leaves.size(); ++k)
    if (!rs->is_pure(leaves[k]))
      throw NotPure("witness leaf " + std::to_string(k) + " is not pure");
  LcsWitness w;
  w.level = static_cast<int>(leaves.size()) - 1;
  w.word = commutator(leaves[1], leaves[0]);
  for (std::size_t k = 2; k < leaves.size(); ++k) w.word = commutator(leaves[k], w.word);
  w.leaves = std::move(leaves);
  return w;
}

nlohmann::ordered_json LcsWitness::to_json() const {
  nlohmann::ordered_json j;
  j["level"] = level;
  auto ls = nlohmann::ordered_json::array();
  for (const auto& l : leaves) ls.push_back(l.to_string());
  j["leaves"] = ls;
  j["word"] = word.to_string();
  return j;
}

LcsWitness lcs_element(TypeId type, int r, std::uint64_t seed) {
  if (r < 1) throw InvalidInput("LCS level must be >= 1");
  WordSampler sampler(seed);
  std::vector<ArtinWord> leaves;
  for (int k = 0; k <= r; ++k) leaves.push_back(sampler.pure_leaf(type));
  return LcsWitness::from_leaves(std::move(leaves));
}

// ---------------------------------------------------------------- routes

ArtinWord Route::apply(const ArtinWord& w) const {
  return folding ? transport_pure(*folding, w) : w;
}

Route resolve_route(TypeId type) {
  Route route;
  if (type.is_simply_laced()) {
    route.target = type;
    return route;
  }
  auto f = lookup_folding(type);
  if (!f) throw InvalidInput("no folding route for " + type.name());
  route.target = f->target;
  route.folding = VerifiedFolding::verify(*f);
  return route;
}

namespace {

void require_pure(const ArtinWord& w, const char* what) {
  auto rs = root_system(w.type());
  const WElem x = rs->word_to_w(w);
  if (x.is_identity()) return;
  std::size_t inversions = 0;
  for (std::size_t p = 0; p < rs->size(); ++p)
    if (x.apply(static_cast<std::uint32_t>(p)) >= rs->size()) ++inversions;
  throw NotPure(std::string(what) + " is not pure: its image in W(" + w.type().name() +
                ") is nontrivial (length " + std::to_string(inversions) + ")");
}

HValuation truncated_valuation(const ArtinWord& target_word, const TruncatedImages& images) {
  return h_valuation(eval_word_truncated(images, target_word));
}

}  // namespace

// ---------------------------------------------------------------- certify

std::optional<int> DepthCertificate::excluded_from() const {
  if (!nontrivial()) return std::nullopt;
  return valuation.value();
}

nlohmann::ordered_json valuation_json(const HValuation& v) {
  if (v.above_order()) return "ABOVE_K";
  return v.value();
}

nlohmann::ordered_json DepthCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["word"] = word.to_string();
  j["type"] = word.type().name();
  j["K"] = order;
  j["valuation"] = valuation_json(valuation);
  nlohmann::ordered_json verdicts;
  verdicts["nontrivial"] = nontrivial();
  if (auto r = excluded_from())
    verdicts["excluded_lcs_levels"] = "all r >= " + std::to_string(*r);
  else
    verdicts["excluded_lcs_levels"] = "none (inconclusive: raise K or use exact mode)";
  j["verdicts"] = verdicts;
  j["route"] = route;
  j["convention"] = kLcsConvention;
  if (seed) {
    j["seed"] = *seed;
    j["prng"] = kPrngName;
  }
  return j;
}

DepthCertificate certify(const ArtinWord& w, int order, RepRegistry& registry) {
  if (order < 0) throw InvalidInput("truncation order must be >= 0");
  require_pure(w, "word");
  const Route route = resolve_route(w.type());
  auto images = registry.truncated(route.target, order);
  DepthCertificate cert;
  cert.word = w;
  cert.order = order;
  cert.route = route.name();
  cert.valuation = truncated_valuation(route.apply(w), *images);
  return cert;
}

// ---------------------------------------------------------------- separate

std::string Separation::verdict_name() const {
  switch (verdict) {
    case Verdict::Distinct: return "distinct";
    case Verdict::Equal: return "equal";
    case Verdict::Indistinguishable: return "indistinguishable";
  }
  return "indistinguishable";
}

nlohmann::ordered_json Separation::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name();
  j["mode"] = exact ? "exact" : "trunc";
  if (!exact || truncation > 0) j["K"] = truncation;
  if (order) j["order"] = *order;
  j["route"] = route;
  return j;
}

Separation separate(const ArtinWord& w1, const ArtinWord& w2, EvalMode mode,
                    RepRegistry& registry, bool escalate) {
  if (w1.type() != w2.type())
    throw InvalidInput("cannot compare words of types " + w1.type().name() + " and " +
                       w2.type().name());
  require_pure(w1, "first word");
  require_pure(w2, "second word");
  const Route route = resolve_route(w1.type());
  const ArtinWord quotient = route.apply(w1 * w2.inverse());

  Separation s;
  s.route = route.name();
  if (!mode.is_exact()) {
    s.truncation = mode.order();
    auto v = truncated_valuation(quotient, *registry.truncated(route.target, mode.order()));
    if (!v.above_order()) {
      s.verdict = Separation::Verdict::Distinct;
      s.order = v.value();
      return s;
    }
    if (!escalate) return s;
  }
  auto rep = registry.get(route.target);
  s.exact = true;
  const MatrixL m = eval_word_exact(*rep, quotient);
  if (m == identity_l(rep->dimension())) {
    s.verdict = Separation::Verdict::Equal;
  } else {
    s.verdict = Separation::Verdict::Distinct;
  }
  return s;
}

// ---------------------------------------------------------------- audit

bool AuditReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

nlohmann::ordered_json AuditReport::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type.name();
  j["r_max"] = r_max;
  j["K"] = order;
  j["samples"] = samples;
  j["seed"] = seed;
  j["prng"] = kPrngName;
  j["route"] = route;
  j["convention"] = kLcsConvention;
  j["pass"] = all_pass();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["r"] = e.level;
    row["word_length"] = e.word.size();
    row["valuation"] = valuation_json(e.valuation);
    row["pass"] = e.pass;
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

namespace {

AuditReport run_audit(TypeId type, const Route& route, const TruncatedImages& images, int r_max,
                      int order, std::size_t samples, std::uint64_t seed) {
  if (r_max < 1) throw InvalidInput("r_max must be >= 1");
  if (order < r_max + 1)
    throw InvalidInput("audit needs K >= r_max + 1 (K = " + std::to_string(order) +
                       ", r_max = " + std::to_string(r_max) + ")");
  if (samples == 0) throw InvalidInput("sample count must be >= 1");
  AuditReport report;
  report.type = type;
  report.r_max = r_max;
  report.order = order;
  report.samples = samples;
  report.seed = seed;
  report.route = route.name();
  WordSampler sampler(seed);
  for (int r = 1; r <= r_max; ++r) {
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<ArtinWord> leaves;
      for (int i = 0; i <= r; ++i) leaves.push_back(sampler.pure_leaf(type));
      auto witness = LcsWitness::from_leaves(std::move(leaves));
      AuditEntry e;
      e.level = r;
      e.valuation = truncated_valuation(route.apply(witness.word), images);
      e.pass = e.valuation.lower_bound() >= r + 1;
      e.word = std::move(witness.word);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace

AuditReport filtration_audit(TypeId type, int r_max, int order, std::size_t samples,
                             std::uint64_t seed, RepRegistry& registry) {
  if (order < r_max + 1)
    throw InvalidInput("audit needs K >= r_max + 1 (K = " + std::to_string(order) +
                       ", r_max = " + std::to_string(r_max) + ")");
  const Route route = resolve_route(type);
  auto images = registry.truncated(route.target, order);
  return run_audit(type, route, *images, r_max, order, samples, seed);
}

AuditReport filtration_audit_unchecked(const RepTable& table, int r_max, int order,
                                       std::size_t samples, std::uint64_t seed) {
  if (order < r_max + 1)
    throw InvalidInput("audit needs K >= r_max + 1 (K = " + std::to_string(order) +
                       ", r_max = " + std::to_string(r_max) + ")");
  Route route;
  route.target = table.type;
  const auto images = TruncatedImages::unchecked(table, order);
  auto report = run_audit(table.type, route, images, r_max, order, samples, seed);
  report.route = "unchecked table";
  return report;
}

}  // namespace pureartin
