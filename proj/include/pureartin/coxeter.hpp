#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pureartin/matrices.hpp"
#include "pureartin/quad.hpp"

namespace pureartin {

enum class Family { A, B, D, E, F, H, I2 };

/// Irreducible spherical Coxeter type with Bourbaki node numbering.
///
/// Adjacency: A_n chain 1–…–n; B_n chain with m(n−1,n)=4; D_n chain
/// 1–…–(n−2) with n−1 and n both attached to n−2; E_n chain 1–3–4–…–n with 2
/// attached to 4; F4 chain with m(2,3)=4; H3 m(1,2)=5, m(2,3)=3; H4 adds
/// m(3,4)=3; I2(m) has a single edge labelled m. G2 is I2(6).
class TypeId {
 public:
  /// Validates the parameter range (A n≥1, B n≥2, D n≥4, E 6–8, F 4, H 3–4,
  /// I2 m≥5). Throws InvalidInput.
  static TypeId make(Family family, int param);
  /// Parses "A3", "B4", "D6", "E8", "F4", "H3", "H4", "I2(7)", "G2".
  static TypeId parse(std::string_view text);

  Family family() const { return family_; }
  /// n for A–H, m for I2(m).
  int param() const { return param_; }
  int rank() const { return family_ == Family::I2 ? 2 : param_; }
  std::string name() const;

  bool is_simply_laced() const;
  bool is_crystallographic() const;
  /// Coxeter matrix entry m(i, j), 1-based generator indices.
  int coxeter_entry(int i, int j) const;
  /// Number of reflections N (positive roots).
  std::size_t reflection_count() const;
  /// |W|, exact for every supported type.
  std::uint64_t group_order() const;
  /// 2N / rank.
  int coxeter_number() const;

  friend auto operator<=>(const TypeId&, const TypeId&) = default;

 private:
  TypeId(Family f, int p) : family_(f), param_(p) {}
  Family family_;
  int param_;
};

class RootSystem;

/// Element of W, stored as the images of the positive roots inside the
/// signed root set {0..N−1} ∪ {N..2N−1} (index p + N is −root p).
class WElem {
 public:
  WElem() = default;
  static WElem identity(std::size_t n_roots);

  std::size_t root_count() const { return images_.size(); }
  /// Image of a signed root index.
  std::uint32_t apply(std::uint32_t signed_root) const;
  bool is_identity() const;
  WElem inverse() const;
  /// Composition: (x * y)(β) = x(y(β)).
  friend WElem operator*(const WElem& x, const WElem& y);
  friend bool operator==(const WElem&, const WElem&) = default;
  /// Multiplicative order.
  std::size_t order() const;

  const std::vector<std::uint16_t>& images() const { return images_; }
  static WElem from_images(std::vector<std::uint16_t> images);

 private:
  std::vector<std::uint16_t> images_;
};

struct WElemHash {
  std::size_t operator()(const WElem& w) const;
};

using WSet = std::unordered_set<WElem, WElemHash>;

/// One letter σ_gen^{exp} of an Artin word; gen is 1-based, exp is ±1.
struct Letter {
  int gen = 1;
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class ArtinWord {
 public:
  explicit ArtinWord(TypeId type, std::vector<Letter> letters = {});
  /// σ_i^k expanded into |k| letters.
  static ArtinWord power(TypeId type, int gen, int k);

  TypeId type() const { return type_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  ArtinWord inverse() const;
  friend ArtinWord operator*(const ArtinWord& a, const ArtinWord& b);
  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;

  /// Canonical text form: signed generator indices separated by spaces.
  std::string to_string() const;

 private:
  TypeId type_;
  std::vector<Letter> letters_;
};

/// Group commutator a b a^{-1} b^{-1}, not freely reduced.
ArtinWord commutator(const ArtinWord& a, const ArtinWord& b);

/// Positive roots and the signed-root action of the simple reflections.
///
/// Crystallographic and H types carry simple-root coordinates (over ℚ(√5);
/// the √5 part vanishes outside H3/H4). I2(m) is purely combinatorial.
/// Roots are ordered by height, then by descending coordinates, so simple
/// root i sits at index i − 1.
class RootSystem {
 public:
  static RootSystem build(TypeId type);

  TypeId type() const { return type_; }
  std::size_t size() const { return n_roots_; }
  int rank() const { return type_.rank(); }

  /// Empty for I2(m).
  const std::vector<std::vector<QuadElem>>& coordinates() const { return coords_; }
  std::optional<std::size_t> index_of(const std::vector<QuadElem>& coords) const;

  /// Image of a signed root under the simple reflection s_gen (1-based).
  std::uint32_t reflect(int gen, std::uint32_t signed_root) const;

  WElem identity() const { return WElem::identity(n_roots_); }
  WElem simple(int gen) const;
  /// π: σ_i^{±1} ↦ s_i, extended multiplicatively.
  WElem word_to_w(const ArtinWord& w) const;
  bool is_pure(const ArtinWord& w) const { return word_to_w(w).is_identity(); }

  /// Conjugation action on reflections: position p ↦ |x(root p)|.
  std::vector<std::size_t> conj_perm(const WElem& x) const;
  /// Matrix with a 1 in (conj_perm(x)[p], p); over ℚ(√2) to compare with
  /// reduce_mod_h.
  MatrixQ conj_matrix(const WElem& x) const;

 private:
  RootSystem() : type_(TypeId::make(Family::A, 1)) {}
  void check_word(const ArtinWord& w) const;

  TypeId type_;
  std::size_t n_roots_ = 0;
  std::vector<std::vector<QuadElem>> coords_;
  std::vector<std::vector<std::uint32_t>> action_;  // [gen-1][signed root]
};

/// Shared, immutable root system per type.
std::shared_ptr<const RootSystem> root_system(TypeId type);

/// True iff the alternating products aba… and bab… with m factors agree.
bool braid_order_holds_W(const WElem& a, const WElem& b, int m);

/// Alternating product x y x … with m factors.
WElem alternating_product(const WElem& x, const WElem& y, int m);

/// Breadth-first closure over the simple generators. Refuses (CapExceeded)
/// when |W| > cap.
WSet enumerate_group(TypeId type, std::uint64_t cap);

/// Closure of an arbitrary generating set inside the group of signed root
/// permutations. Throws CapExceeded once more than cap elements appear.
WSet generate_group(const std::vector<WElem>& gens, std::uint64_t cap);

}  // namespace pureartin
