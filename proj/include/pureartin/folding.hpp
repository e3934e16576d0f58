#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pureartin/coxeter.hpp"
#include "pureartin/lkb.hpp"

namespace pureartin {

enum class Provenance { Paper, Derived, PaperAsPrinted };

std::string provenance_name(Provenance p);
Provenance parse_provenance(std::string_view text);

/// Generator images of a folding morphism j: B(source) → B(target).
struct FoldingDef {
  TypeId source = TypeId::make(Family::A, 1);
  TypeId target = TypeId::make(Family::A, 1);
  std::vector<ArtinWord> images;  // images[i] = j(σ_{i+1}), positive words
  Provenance provenance = Provenance::Derived;

  /// "H3->D6", with a "/paper-as-printed" suffix for that provenance.
  std::string id() const;
  friend bool operator==(const FoldingDef&, const FoldingDef&) = default;
};

/// Builds a definition from 1-based target node lists; validates ranges.
FoldingDef make_folding(TypeId source, TypeId target,
                        const std::vector<std::vector<int>>& images, Provenance provenance);

FoldingDef folding_B(int n);
FoldingDef folding_I2(int m);
FoldingDef folding_H3();
FoldingDef folding_H4();
/// The H4 images exactly as printed (σ1 ↦ σ'3σ'5); fails verification.
FoldingDef folding_H4_as_printed();
FoldingDef folding_F4();
FoldingDef folding_G2();

/// Registry listing: every built-in folding plus the printed H4
/// fixture. Parametric families appear for B2..B5 and I2(5)..I2(12).
std::vector<FoldingDef> builtin_foldings();

/// All serving routes for a non-simply-laced type, preferred first.
/// Empty for simply-laced types.
std::vector<FoldingDef> folding_routes(TypeId type);
std::optional<FoldingDef> lookup_folding(TypeId type);

/// Named fixture: "corrected" or "paper-as-printed" (H4 only), or "default"
/// for the preferred route of any type.
FoldingDef folding_fixture(TypeId type, std::string_view name);

struct FoldingRelation {
  int i = 0;
  int j = 0;
  int m = 0;
  bool pass = false;
};

struct FoldingReport {
  std::string id;
  std::string level;  // "W" or "rep"
  std::string strength;  // "proof", "evidence", or "W-level only"
  bool orbit_commutation = false;  // letters inside each image commute
  bool images_disjoint = false;    // no target node used twice
  std::vector<FoldingRelation> relations;
  std::string note;

  bool all_pass() const;
  std::vector<FoldingRelation> failures() const;
};

/// Checks each source relation on the images in W(target).
FoldingReport verify_folding_W(const FoldingDef& f);
/// Checks each source relation on the images under the target
/// representation. Falls back to the W-level check, marked "W-level only",
/// when the registry has no table for the target.
FoldingReport verify_folding_rep(const FoldingDef& f, RepRegistry& registry, EvalMode mode);

/// ǰ tabulated on all of W(source).
struct InducedWMap {
  std::unordered_map<WElem, WElem, WElemHash> table;
  std::size_t source_order = 0;
  std::size_t image_size = 0;

  bool injective() const { return image_size == source_order; }
  const WElem& operator()(const WElem& x) const;
};

InducedWMap induced_w_map(const FoldingDef& f, std::uint64_t cap = 200000);

/// A folding that passed verify_folding_W.
class VerifiedFolding {
 public:
  /// Throws ValidationFailure naming the first failed relation.
  static VerifiedFolding verify(FoldingDef f);
  const FoldingDef& def() const { return def_; }

 private:
  explicit VerifiedFolding(FoldingDef f) : def_(std::move(f)) {}
  FoldingDef def_;
};

/// Letter-by-letter image; σ_i^{-1} goes to the reversed inverse image.
ArtinWord transport_pure(const VerifiedFolding& f, const ArtinWord& w);

/// All assignments of target nodes to source generators in which every
/// class pairwise commutes and the source relations hold in W(target).
std::vector<FoldingDef> search_foldings(TypeId source, TypeId target);

FoldingDef parse_folding(std::string_view json_text);
std::string emit_folding(const FoldingDef& f);

}  // namespace pureartin
