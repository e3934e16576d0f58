#include "pureartin/lkb.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pureartin/errors.hpp"

#ifndef PUREARTIN_DATA_DIR
#define PUREARTIN_DATA_DIR "data"
#endif

namespace pureartin {

EvalMode EvalMode::truncated(int order) {
  if (order < 0) throw InvalidInput("truncation order must be >= 0");
  return EvalMode(false, order);
}

std::string EvalMode::to_string() const {
  return exact_ ? std::string("exact") : "truncated(K=" + std::to_string(order_) + ")";
}

EvalMode default_validation_mode(std::size_t dimension) {
  return dimension <= kExactRelationDimension ? EvalMode::exact()
                                              : EvalMode::truncated(kEvidenceOrder);
}

bool BraidReport::all_pass() const { return first_failure() == nullptr; }

const RelationCheck* BraidReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

bool SpecializationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

template <class M>
M alternating(const M& a, const M& b, int m) {
  M acc = a;
  for (int k = 1; k < m; ++k) acc = acc * ((k % 2 == 0) ? a : b);
  return acc;
}

template <class M>
BraidReport check_relations(TypeId type, EvalMode mode, const std::vector<M>& gens) {
  BraidReport report;
  report.type = type;
  report.mode = mode;
  const int n = type.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int m = type.coxeter_entry(i, j);
      const auto& a = gens[static_cast<std::size_t>(i - 1)];
      const auto& b = gens[static_cast<std::size_t>(j - 1)];
      report.checks.push_back({i, j, m, alternating(a, b, m) == alternating(b, a, m)});
    }
  return report;
}

void check_shape(const RepTable& table) {
  if (table.generators.size() != static_cast<std::size_t>(table.type.rank()))
    throw InvalidInput("table for " + table.type.name() + " needs " +
                       std::to_string(table.type.rank()) + " generators");
  for (const auto& g : table.generators)
    if (g.rows() != table.dimension || g.cols() != table.dimension)
      throw InvalidInput("generator shape " + g.shape() + " does not match dimension " +
                         std::to_string(table.dimension));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingData("cannot read table file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

BraidReport verify_braid_relations(const RepTable& table, EvalMode mode) {
  check_shape(table);
  if (mode.is_exact()) return check_relations(table.type, mode, table.generators);
  std::vector<MatrixH> images;
  for (const auto& g : table.generators) images.push_back(iota_substitute(g, mode.order()));
  return check_relations(table.type, mode, images);
}

SpecializationReport verify_specialization(const RepTable& table) {
  check_shape(table);
  auto rs = root_system(table.type);
  if (rs->size() != table.dimension)
    throw InvalidInput("dimension " + std::to_string(table.dimension) + " does not match the " +
                       std::to_string(rs->size()) + " reflections of " + table.type.name());
  SpecializationReport report;
  for (int i = 1; i <= table.type.rank(); ++i) {
    const MatrixR s = specialize_at_one(table.generators[static_cast<std::size_t>(i - 1)]);
    const auto perm = rs->conj_perm(rs->simple(i));
    SpecializationCheck check{i, true, {}};
    bool signed_perm = true;
    bool plain = true;
    for (std::size_t r = 0; r < s.rows(); ++r) {
      if (s.row(r).size() != 1) signed_perm = plain = false;
      for (const auto& [c, v] : s.row(r)) {
        if (v != 1) plain = false;
        if (v != 1 && v != -1) signed_perm = false;
      }
    }
    if (!plain) {
      check.pass = false;
      check.problem = signed_perm ? "signed permutation at q=t=1 (sign conventions are rejected)"
                                  : "not a permutation matrix at q=t=1";
    } else {
      for (std::size_t p = 0; p < perm.size(); ++p) {
        if (!s.find(perm[p], p)) {
          check.pass = false;
          check.problem = "column " + std::to_string(p) +
                          " differs from the conjugation action of s" + std::to_string(i);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

// ---------------------------------------------------------------- LKBRep

LKBRep LKBRep::builtin_typeA(int n) { return from_table(builtin_typeA_table(n)); }

LKBRep LKBRep::from_table(RepTable table) {
  if (!table.type.is_simply_laced())
    throw InvalidInput("representation tables are served for A/D/E only; " +
                       table.type.name() + " goes through a folding");
  if (table.basis != "reflections-canonical")
    throw InvalidInput("unknown basis convention '" + table.basis + "'");
  check_shape(table);
  auto rs = root_system(table.type);
  if (rs->size() != table.dimension)
    throw InvalidInput("dimension " + std::to_string(table.dimension) + " does not match the " +
                       std::to_string(rs->size()) + " reflections of " + table.type.name());

  const auto spec = verify_specialization(table);
  for (const auto& c : spec.checks)
    if (!c.pass)
      throw ValidationFailure("specialization failure for " + table.type.name() + " generator " +
                              std::to_string(c.gen) + ": " + c.problem);

  BraidReport relations = verify_braid_relations(table, default_validation_mode(table.dimension));
  if (const auto* bad = relations.first_failure())
    throw ValidationFailure("braid relation of length " + std::to_string(bad->m) +
                            " between s" + std::to_string(bad->i) + " and s" +
                            std::to_string(bad->j) + " fails for " + table.type.name() + " (" +
                            relations.mode.to_string() + ")");

  LKBRep rep;
  for (std::size_t g = 0; g < table.generators.size(); ++g) {
    try {
      rep.inverses_.push_back(invert_exact(table.generators[g]));
    } catch (const NotInvertible& e) {
      throw ValidationFailure("generator " + std::to_string(g + 1) + " is not invertible: " +
                              e.what());
    }
  }
  rep.table_ = std::move(table);
  rep.roots_ = std::move(rs);
  rep.relations_ = std::move(relations);
  return rep;
}

LKBRep LKBRep::load_table(std::string_view json_text) { return from_table(parse_table(json_text)); }

LKBRep LKBRep::load_table_file(const std::filesystem::path& path) {
  return load_table(read_file(path));
}

const MatrixL& LKBRep::generator(int gen, int exp) const {
  if (gen < 1 || gen > type().rank())
    throw InvalidInput("generator index " + std::to_string(gen) + " out of range for " +
                       type().name());
  const auto k = static_cast<std::size_t>(gen - 1);
  return exp > 0 ? table_.generators[k] : inverses_[k];
}

// ---------------------------------------------------------------- evaluation

TruncatedImages TruncatedImages::of(const LKBRep& rep, int order) {
  TruncatedImages out;
  out.type_ = rep.type();
  out.order_ = order;
  out.dimension_ = rep.dimension();
  for (int g = 1; g <= rep.type().rank(); ++g) {
    out.gens_.push_back(iota_substitute(rep.generator(g, 1), order));
    out.invs_.push_back(iota_substitute(rep.generator(g, -1), order));
  }
  return out;
}

TruncatedImages TruncatedImages::unchecked(const RepTable& table, int order) {
  check_shape(table);
  TruncatedImages out;
  out.type_ = table.type;
  out.order_ = order;
  out.dimension_ = table.dimension;
  for (const auto& g : table.generators) {
    out.gens_.push_back(iota_substitute(g, order));
    out.invs_.push_back(invert_truncated(out.gens_.back()));
  }
  return out;
}

const MatrixH& TruncatedImages::generator(int gen, int exp) const {
  if (gen < 1 || static_cast<std::size_t>(gen) > gens_.size())
    throw InvalidInput("generator index " + std::to_string(gen) + " out of range for " +
                       type_.name());
  const auto k = static_cast<std::size_t>(gen - 1);
  return exp > 0 ? gens_[k] : invs_[k];
}

MatrixL eval_word_exact(const LKBRep& rep, const ArtinWord& w) {
  if (w.type() != rep.type())
    throw InvalidInput("word of type " + w.type().name() + " evaluated in " + rep.type().name());
  if (w.empty()) return identity_l(rep.dimension());
  MatrixL acc = rep.generator(w.letters()[0].gen, w.letters()[0].exp);
  for (std::size_t k = 1; k < w.size(); ++k)
    acc = acc * rep.generator(w.letters()[k].gen, w.letters()[k].exp);
  return acc;
}

MatrixH eval_word_truncated(const TruncatedImages& images, const ArtinWord& w) {
  if (w.type() != images.type())
    throw InvalidInput("word of type " + w.type().name() + " evaluated in " +
                       images.type().name());
  if (w.empty()) return identity_h(images.dimension(), images.order());
  MatrixH acc = images.generator(w.letters()[0].gen, w.letters()[0].exp);
  for (std::size_t k = 1; k < w.size(); ++k)
    acc = acc * images.generator(w.letters()[k].gen, w.letters()[k].exp);
  return acc;
}

EvalResult eval_word(const LKBRep& rep, const ArtinWord& w, EvalMode mode) {
  if (mode.is_exact()) return eval_word_exact(rep, w);
  return eval_word_truncated(TruncatedImages::of(rep, mode.order()), w);
}

// ---------------------------------------------------------------- registry

RepRegistry::RepRegistry(std::filesystem::path table_dir) : dir_(std::move(table_dir)) {}

std::filesystem::path RepRegistry::default_table_dir() {
  if (const char* env = std::getenv("PUREARTIN_TABLES"); env && *env) return env;
  return std::filesystem::path(PUREARTIN_DATA_DIR) / "tables";
}

void RepRegistry::add_table_file(const std::filesystem::path& path) {
  RepTable table = parse_table(read_file(path));
  std::lock_guard<std::mutex> lock(mu_);
  overrides_[table.type] = path;
  reps_.erase(table.type);
  for (auto it = images_.begin(); it != images_.end();)
    it = it->first.first == table.type ? images_.erase(it) : std::next(it);
}

std::filesystem::path RepRegistry::table_path(TypeId type) const {
  if (auto it = overrides_.find(type); it != overrides_.end()) return it->second;
  return dir_ / (type.name() + ".json");
}

bool RepRegistry::available(TypeId type) const {
  if (!type.is_simply_laced()) return false;
  std::lock_guard<std::mutex> lock(mu_);
  if (type.family() == Family::A && !overrides_.count(type)) return true;
  std::error_code ec;
  return std::filesystem::exists(table_path(type), ec);
}

std::shared_ptr<const LKBRep> RepRegistry::get(TypeId type) {
  if (!type.is_simply_laced())
    throw InvalidInput(type.name() + " has no direct representation; use a folding");
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = reps_.find(type); it != reps_.end()) return it->second;
  std::shared_ptr<const LKBRep> rep;
  if (type.family() == Family::A && !overrides_.count(type)) {
    rep = std::make_shared<const LKBRep>(LKBRep::builtin_typeA(type.param()));
  } else {
    const auto path = table_path(type);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
      throw MissingData("no representation table for " + type.name() + " (looked for " +
                        path.string() + ")");
    rep = std::make_shared<const LKBRep>(LKBRep::load_table_file(path));
  }
  reps_.emplace(type, rep);
  return rep;
}

std::shared_ptr<const TruncatedImages> RepRegistry::truncated(TypeId type, int order) {
  auto rep = get(type);
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(type, order);
  if (auto it = images_.find(key); it != images_.end()) return it->second;
  auto img = std::make_shared<const TruncatedImages>(TruncatedImages::of(*rep, order));
  images_.emplace(key, img);
  return img;
}

}  // namespace pureartin
