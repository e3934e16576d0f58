#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pureartin/coxeter.hpp"
#include "pureartin/matrices.hpp"

namespace pureartin {

/// Exact Laurent arithmetic, or ι-images truncated after h^K.
class EvalMode {
 public:
  static EvalMode exact() { return EvalMode(true, 0); }
  static EvalMode truncated(int order);

  bool is_exact() const { return exact_; }
  int order() const { return order_; }
  std::string to_string() const;

 private:
  EvalMode(bool e, int k) : exact_(e), order_(k) {}
  bool exact_;
  int order_;
};

/// Relation checks run exactly up to this dimension, truncated beyond.
inline constexpr std::size_t kExactRelationDimension = 36;
inline constexpr int kEvidenceOrder = 12;
EvalMode default_validation_mode(std::size_t dimension);

/// Unvalidated generator data as read from a table file. Row/column indices
/// refer to the canonical reflection ordering of the type's root system.
struct RepTable {
  TypeId type = TypeId::make(Family::A, 1);
  std::size_t dimension = 0;
  std::string basis = "reflections-canonical";
  nlohmann::ordered_json metadata;  // free-form convention notes; may be null
  std::vector<MatrixL> generators;
};

/// Parses the JSON table dialect. Throws InvalidInput on malformed input.
RepTable parse_table(std::string_view json_text);
/// Canonical serialized form (compact JSON, fixed key order, trailing newline).
std::string emit_table(const RepTable& table);

/// Krammer's type-A matrices on the basis x_{j,k} ↔ reflection (j k).
RepTable builtin_typeA_table(int n);

struct RelationCheck {
  int i = 0;
  int j = 0;
  int m = 0;
  bool pass = false;
};

struct BraidReport {
  TypeId type = TypeId::make(Family::A, 1);
  EvalMode mode = EvalMode::exact();
  std::vector<RelationCheck> checks;

  bool all_pass() const;
  const RelationCheck* first_failure() const;
  /// "proof" for exact mode, "evidence" for truncated mode.
  std::string strength() const { return mode.is_exact() ? "proof" : "evidence"; }
};

/// Checks σ_iσ_jσ_i… = σ_jσ_iσ_j… (m(i,j) factors) for every pair i < j.
BraidReport verify_braid_relations(const RepTable& table, EvalMode mode);

struct SpecializationCheck {
  int gen = 0;
  bool pass = false;
  std::string problem;  // empty when pass
};

struct SpecializationReport {
  std::vector<SpecializationCheck> checks;
  bool all_pass() const;
};

/// Checks that every generator at q = t = 1 is the plain permutation matrix
/// of the conjugation action of s_i on reflections.
SpecializationReport verify_specialization(const RepTable& table);

/// A representation that has passed both validators. Immutable.
class LKBRep {
 public:
  static LKBRep builtin_typeA(int n);
  /// Validates and computes exact generator inverses. Throws InvalidInput
  /// for structural problems, ValidationFailure when a validator fails.
  static LKBRep from_table(RepTable table);
  static LKBRep load_table(std::string_view json_text);
  static LKBRep load_table_file(const std::filesystem::path& path);

  TypeId type() const { return table_.type; }
  std::size_t dimension() const { return table_.dimension; }
  const RepTable& table() const { return table_; }
  const RootSystem& roots() const { return *roots_; }
  const BraidReport& relation_report() const { return relations_; }

  /// 1-based generator index; exp = −1 selects the exact inverse.
  const MatrixL& generator(int gen, int exp = 1) const;

 private:
  LKBRep() = default;

  RepTable table_;
  std::vector<MatrixL> inverses_;
  std::shared_ptr<const RootSystem> roots_;
  BraidReport relations_;
};

/// ι-images of the generators and their inverses at a fixed order.
class TruncatedImages {
 public:
  static TruncatedImages of(const LKBRep& rep, int order);
  /// From raw table data, inverting by Neumann series; used for negative
  /// controls on tables that never passed validation.
  static TruncatedImages unchecked(const RepTable& table, int order);

  TypeId type() const { return type_; }
  int order() const { return order_; }
  std::size_t dimension() const { return dimension_; }
  const MatrixH& generator(int gen, int exp = 1) const;

 private:
  TypeId type_ = TypeId::make(Family::A, 1);
  int order_ = 0;
  std::size_t dimension_ = 0;
  std::vector<MatrixH> gens_;
  std::vector<MatrixH> invs_;
};

/// R(w), multiplying generator matrices left to right.
MatrixL eval_word_exact(const LKBRep& rep, const ArtinWord& w);
MatrixH eval_word_truncated(const TruncatedImages& images, const ArtinWord& w);

using EvalResult = std::variant<MatrixL, MatrixH>;
EvalResult eval_word(const LKBRep& rep, const ArtinWord& w, EvalMode mode);

/// Lazily loads and caches validated representations: type A is built in,
/// D/E come from <table dir>/<type>.json or an explicitly registered file.
/// Thread-safe.
class RepRegistry {
 public:
  explicit RepRegistry(std::filesystem::path table_dir = default_table_dir());

  /// $PUREARTIN_TABLES if set, else the data/tables directory of the build.
  static std::filesystem::path default_table_dir();

  /// Uses this file for its type (read now, validated on first use).
  void add_table_file(const std::filesystem::path& path);

  bool available(TypeId type) const;
  /// Throws MissingData when no table exists for a simply-laced type and
  /// InvalidInput for types that have no direct representation.
  std::shared_ptr<const LKBRep> get(TypeId type);
  std::shared_ptr<const TruncatedImages> truncated(TypeId type, int order);

 private:
  std::filesystem::path table_path(TypeId type) const;

  std::filesystem::path dir_;
  std::map<TypeId, std::filesystem::path> overrides_;
  mutable std::mutex mu_;
  std::map<TypeId, std::shared_ptr<const LKBRep>> reps_;
  std::map<std::pair<TypeId, int>, std::shared_ptr<const TruncatedImages>> images_;
};

}  // namespace pureartin
