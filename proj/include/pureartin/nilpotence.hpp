#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pureartin/coxeter.hpp"
#include "pureartin/folding.hpp"
#include "pureartin/lkb.hpp"

namespace pureartin {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr const char* kPrngName = "mt19937_64";
inline constexpr const char* kLcsConvention = "C1=(P,P)";

/// Deterministic word source. Draws are raw mt19937_64 outputs reduced
/// modulo the range, so streams replay across standard libraries.
class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed = kDefaultSeed) : seed_(seed), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t below(std::uint64_t n);

  /// Uniform length in [0, max_len], uniform generators and signs.
  ArtinWord word(TypeId type, std::size_t max_len);
  /// u σ_i² u^{-1} with |u| ≤ max_conj_len.
  ArtinWord pure_leaf(TypeId type, std::size_t max_conj_len = 3);

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

std::vector<ArtinWord> sample_pure(TypeId type, std::size_t count,
                                   std::uint64_t seed = kDefaultSeed);

/// [p_r, [… [p_2, [p_1, p_0]] …]] with pure leaves p_k = leaves[k].
struct LcsWitness {
  int level = 0;
  std::vector<ArtinWord> leaves;
  ArtinWord word{TypeId::make(Family::A, 1)};

  static LcsWitness from_leaves(std::vector<ArtinWord> leaves);
  nlohmann::ordered_json to_json() const;
};

LcsWitness lcs_element(TypeId type, int r, std::uint64_t seed = kDefaultSeed);

/// How a word reaches a representation: directly, or through a folding.
struct Route {
  std::optional<VerifiedFolding> folding;
  TypeId target = TypeId::make(Family::A, 1);

  std::string name() const { return folding ? "via " + folding->def().id() : "direct"; }
  ArtinWord apply(const ArtinWord& w) const;
};

/// Direct for simply-laced types, preferred verified folding otherwise.
Route resolve_route(TypeId type);

struct DepthCertificate {
  ArtinWord word{TypeId::make(Family::A, 1)};
  int order = 0;
  HValuation valuation = HValuation::above(0);
  std::string route;
  std::optional<std::uint64_t> seed;

  bool nontrivial() const { return !valuation.above_order(); }
  /// Lowest excluded C^r P level; every r ≥ this is excluded.
  std::optional<int> excluded_from() const;
  nlohmann::ordered_json to_json() const;
};

/// Refuses non-pure words (NotPure, naming the permutation obstruction).
DepthCertificate certify(const ArtinWord& w, int order, RepRegistry& registry);

struct Separation {
  enum class Verdict { Distinct, Indistinguishable, Equal };
  Verdict verdict = Verdict::Indistinguishable;
  std::optional<int> order;  // h-degree where the images first differ
  int truncation = 0;
  bool exact = false;
  std::string route;

  std::string verdict_name() const;
  nlohmann::ordered_json to_json() const;
};

/// Compares R(w1) and R(w2) through R(w1 w2^{-1}). Exact mode decides
/// equality outright; truncated mode is one-sided. With escalate set, an
/// inconclusive truncated result is rerun exactly.
Separation separate(const ArtinWord& w1, const ArtinWord& w2, EvalMode mode,
                    RepRegistry& registry, bool escalate = false);

struct AuditEntry {
  int level = 0;
  ArtinWord word{TypeId::make(Family::A, 1)};
  HValuation valuation = HValuation::above(0);
  bool pass = false;
};

struct AuditReport {
  TypeId type = TypeId::make(Family::A, 1);
  int r_max = 0;
  int order = 0;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string route;
  std::vector<AuditEntry> entries;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

/// For each level r ≤ r_max, samples witnesses and checks v ≥ r + 1.
/// Requires order ≥ r_max + 1.
AuditReport filtration_audit(TypeId type, int r_max, int order, std::size_t samples,
                             std::uint64_t seed, RepRegistry& registry);
/// Same audit against a raw table that never passed validation.
AuditReport filtration_audit_unchecked(const RepTable& table, int r_max, int order,
                                       std::size_t samples, std::uint64_t seed);

nlohmann::ordered_json valuation_json(const HValuation& v);

}  // namespace pureartin
