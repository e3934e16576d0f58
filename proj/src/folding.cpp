#include "pureartin/folding.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <json.hpp>

#include "pureartin/errors.hpp"

namespace pureartin {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Derived: return "derived";
    case Provenance::PaperAsPrinted: return "paper-as-printed";
  }
  return "derived";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "paper") return Provenance::Paper;
  if (text == "derived") return Provenance::Derived;
  if (text == "paper-as-printed") return Provenance::PaperAsPrinted;
  throw InvalidInput("unknown provenance '" + std::string(text) + "'");
}

std::string FoldingDef::id() const {
  std::string s = source.name() + "->" + target.name();
  if (provenance == Provenance::PaperAsPrinted) s += "/paper-as-printed";
  return s;
}

FoldingDef make_folding(TypeId source, TypeId target,
                        const std::vector<std::vector<int>>& images, Provenance provenance) {
  if (images.size() != static_cast<std::size_t>(source.rank()))
    throw InvalidInput("folding " + source.name() + "->" + target.name() + " needs " +
                       std::to_string(source.rank()) + " images, got " +
                       std::to_string(images.size()));
  FoldingDef f;
  f.source = source;
  f.target = target;
  f.provenance = provenance;
  for (const auto& nodes : images) {
    if (nodes.empty()) throw InvalidInput("folding image must be a nonempty positive word");
    std::vector<Letter> letters;
    for (int g : nodes) letters.push_back({g, 1});
    f.images.emplace_back(target, std::move(letters));
  }
  return f;
}

FoldingDef folding_B(int n) {
  auto src = TypeId::make(Family::B, n);
  std::vector<std::vector<int>> images;
  for (int i = 1; i < n; ++i) images.push_back({i, 2 * n - i});
  images.push_back({n});
  return make_folding(src, TypeId::make(Family::A, 2 * n - 1), images, Provenance::Derived);
}

FoldingDef folding_I2(int m) {
  std::vector<int> odd, even;
  for (int i = 1; i <= m - 1; ++i) (i % 2 ? odd : even).push_back(i);
  return make_folding(TypeId::make(Family::I2, m), TypeId::make(Family::A, m - 1), {odd, even},
                      Provenance::Derived);
}

FoldingDef folding_H3() {
  return make_folding(TypeId::make(Family::H, 3), TypeId::make(Family::D, 6),
                      {{3, 5}, {2, 4}, {1, 6}}, Provenance::Paper);
}

FoldingDef folding_H4() {
  return make_folding(TypeId::make(Family::H, 4), TypeId::make(Family::E, 8),
                      {{2, 5}, {4, 6}, {3, 7}, {1, 8}}, Provenance::Derived);
}

FoldingDef folding_H4_as_printed() {
  return make_folding(TypeId::make(Family::H, 4), TypeId::make(Family::E, 8),
                      {{3, 5}, {4, 6}, {3, 7}, {1, 8}}, Provenance::PaperAsPrinted);
}

FoldingDef folding_F4() {
  return make_folding(TypeId::make(Family::F, 4), TypeId::make(Family::E, 6),
                      {{2}, {4}, {3, 5}, {1, 6}}, Provenance::Derived);
}

FoldingDef folding_G2() {
  return make_folding(TypeId::make(Family::I2, 6), TypeId::make(Family::D, 4), {{2}, {1, 3, 4}},
                      Provenance::Derived);
}

std::vector<FoldingDef> builtin_foldings() {
  std::vector<FoldingDef> out{folding_H3(), folding_H4(), folding_H4_as_printed(), folding_F4(),
                              folding_G2()};
  for (int n = 2; n <= 5; ++n) out.push_back(folding_B(n));
  for (int m = 5; m <= 12; ++m) out.push_back(folding_I2(m));
  return out;
}

std::vector<FoldingDef> folding_routes(TypeId type) {
  switch (type.family()) {
    case Family::B: return {folding_B(type.param())};
    case Family::F: return {folding_F4()};
    case Family::H: return {type.param() == 3 ? folding_H3() : folding_H4()};
    case Family::I2:
      if (type.param() == 6) return {folding_G2(), folding_I2(6)};
      return {folding_I2(type.param())};
    default: return {};
  }
}

std::optional<FoldingDef> lookup_folding(TypeId type) {
  auto routes = folding_routes(type);
  if (routes.empty()) return std::nullopt;
  return routes.front();
}

FoldingDef folding_fixture(TypeId type, std::string_view name) {
  if (name == "paper-as-printed" || name == "corrected") {
    if (type != TypeId::make(Family::H, 4))
      throw InvalidInput("fixture '" + std::string(name) + "' exists for H4 only");
    return name == "corrected" ? folding_H4() : folding_H4_as_printed();
  }
  if (name != "default") throw InvalidInput("unknown fixture '" + std::string(name) + "'");
  auto f = lookup_folding(type);
  if (!f) throw InvalidInput(type.name() + " is simply laced and needs no folding");
  return *f;
}

// ---------------------------------------------------------------- verification

bool FoldingReport::all_pass() const {
  if (!orbit_commutation) return false;
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.pass; });
}

std::vector<FoldingRelation> FoldingReport::failures() const {
  std::vector<FoldingRelation> out;
  for (const auto& r : relations)
    if (!r.pass) out.push_back(r);
  return out;
}

namespace {

void check_def(const FoldingDef& f) {
  if (f.images.size() != static_cast<std::size_t>(f.source.rank()))
    throw InvalidInput("folding " + f.id() + " has the wrong number of images");
  for (const auto& w : f.images) {
    if (w.type() != f.target) throw InvalidInput("folding image over the wrong type");
    for (const auto& l : w.letters())
      if (l.exp != 1) throw InvalidInput("folding images must be positive words");
  }
}

void fill_precheck(const FoldingDef& f, FoldingReport& report) {
  report.id = f.id();
  report.orbit_commutation = true;
  std::set<int> used;
  report.images_disjoint = true;
  for (const auto& w : f.images) {
    const auto& ls = w.letters();
    for (std::size_t a = 0; a < ls.size(); ++a) {
      if (!used.insert(ls[a].gen).second) report.images_disjoint = false;
      for (std::size_t b = a + 1; b < ls.size(); ++b)
        if (ls[a].gen == ls[b].gen || f.target.coxeter_entry(ls[a].gen, ls[b].gen) != 2)
          report.orbit_commutation = false;
    }
  }
  if (!report.images_disjoint) report.note = "a target generator appears in more than one image";
}

template <class M, class Eq>
std::vector<FoldingRelation> relations_on(const FoldingDef& f, const std::vector<M>& gens,
                                          Eq alternating_equal) {
  std::vector<FoldingRelation> out;
  const int n = f.source.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int m = f.source.coxeter_entry(i, j);
      out.push_back({i, j, m,
                     alternating_equal(gens[static_cast<std::size_t>(i - 1)],
                                       gens[static_cast<std::size_t>(j - 1)], m)});
    }
  return out;
}

template <class M>
bool alternating_equal(const M& a, const M& b, int m) {
  M x = a, y = b;
  for (int k = 1; k < m; ++k) {
    x = x * (k % 2 ? b : a);
    y = y * (k % 2 ? a : b);
  }
  return x == y;
}

std::vector<WElem> image_elements(const FoldingDef& f) {
  auto rs = root_system(f.target);
  std::vector<WElem> out;
  for (const auto& w : f.images) out.push_back(rs->word_to_w(w));
  return out;
}

}  // namespace

FoldingReport verify_folding_W(const FoldingDef& f) {
  check_def(f);
  FoldingReport report;
  fill_precheck(f, report);
  report.level = "W";
  report.strength = "W-level only";
  report.relations = relations_on(f, image_elements(f), braid_order_holds_W);
  return report;
}

FoldingReport verify_folding_rep(const FoldingDef& f, RepRegistry& registry, EvalMode mode) {
  check_def(f);
  if (!registry.available(f.target)) {
    FoldingReport report = verify_folding_W(f);
    report.note = "no representation table for " + f.target.name() + "; W-level only";
    return report;
  }
  FoldingReport report;
  fill_precheck(f, report);
  report.level = "rep";
  report.strength = mode.is_exact() ? "proof" : "evidence";
  auto rep = registry.get(f.target);
  if (mode.is_exact()) {
    std::vector<MatrixL> gens;
    for (const auto& w : f.images) gens.push_back(eval_word_exact(*rep, w));
    report.relations = relations_on(f, gens, alternating_equal<MatrixL>);
  } else {
    auto images = registry.truncated(f.target, mode.order());
    std::vector<MatrixH> gens;
    for (const auto& w : f.images) gens.push_back(eval_word_truncated(*images, w));
    report.relations = relations_on(f, gens, alternating_equal<MatrixH>);
  }
  return report;
}

// ---------------------------------------------------------------- ǰ

const WElem& InducedWMap::operator()(const WElem& x) const {
  auto it = table.find(x);
  if (it == table.end()) throw InvalidInput("element is not in the source group");
  return it->second;
}

InducedWMap induced_w_map(const FoldingDef& f, std::uint64_t cap) {
  check_def(f);
  const auto order = f.source.group_order();
  if (order > cap)
    throw CapExceeded("|W(" + f.source.name() + ")| = " + std::to_string(order) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  auto src = root_system(f.source);
  const auto targets = image_elements(f);
  std::vector<WElem> sources;
  for (int g = 1; g <= f.source.rank(); ++g) sources.push_back(src->simple(g));

  InducedWMap map;
  std::deque<std::pair<WElem, WElem>> queue;
  map.table.emplace(src->identity(), root_system(f.target)->identity());
  queue.emplace_back(src->identity(), root_system(f.target)->identity());
  while (!queue.empty()) {
    auto [x, y] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t g = 0; g < sources.size(); ++g) {
      WElem nx = x * sources[g];
      WElem ny = y * targets[g];
      auto [it, fresh] = map.table.emplace(nx, ny);
      if (fresh) {
        queue.emplace_back(std::move(nx), std::move(ny));
      } else if (!(it->second == ny)) {
        throw ValidationFailure("generator images of " + f.id() +
                                " do not define a homomorphism of Coxeter groups");
      }
    }
  }
  map.source_order = map.table.size();
  WSet image;
  for (const auto& [x, y] : map.table) image.insert(y);
  map.image_size = image.size();
  return map;
}

VerifiedFolding VerifiedFolding::verify(FoldingDef f) {
  auto report = verify_folding_W(f);
  if (!report.orbit_commutation)
    throw ValidationFailure("folding " + f.id() + ": image letters do not commute");
  for (const auto& r : report.relations)
    if (!r.pass)
      throw ValidationFailure("folding " + f.id() + " violates the relation of length " +
                              std::to_string(r.m) + " between s" + std::to_string(r.i) +
                              " and s" + std::to_string(r.j));
  return VerifiedFolding(std::move(f));
}

ArtinWord transport_pure(const VerifiedFolding& vf, const ArtinWord& w) {
  const auto& f = vf.def();
  if (w.type() != f.source)
    throw InvalidInput("word of type " + w.type().name() + " given to folding " + f.id());
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const auto& img = f.images[static_cast<std::size_t>(l.gen - 1)].letters();
    if (l.exp > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back({it->gen, -it->exp});
    }
  }
  return ArtinWord(f.target, std::move(out));
}

// ---------------------------------------------------------------- search

std::vector<FoldingDef> search_foldings(TypeId source, TypeId target) {
  const int r = source.rank();
  const int n = target.rank();
  auto rs = root_system(target);
  std::vector<WElem> simple;
  for (int g = 1; g <= n; ++g) simple.push_back(rs->simple(g));

  std::vector<FoldingDef> found;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  // Depth-first over node → class assignments, pruning non-commuting classes.
  auto recurse = [&](auto&& self, int node) -> void {
    if (node == n) {
      std::vector<std::vector<int>> classes(static_cast<std::size_t>(r));
      for (int v = 0; v < n; ++v) classes[static_cast<std::size_t>(assign[v])].push_back(v + 1);
      for (const auto& c : classes)
        if (c.empty()) return;
      std::vector<WElem> imgs;
      for (const auto& c : classes) {
        WElem x = rs->identity();
        for (int v : c) x = x * simple[static_cast<std::size_t>(v - 1)];
        imgs.push_back(std::move(x));
      }
      for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
          if (!braid_order_holds_W(imgs[i - 1], imgs[j - 1], source.coxeter_entry(i, j))) return;
      found.push_back(make_folding(source, target, classes, Provenance::Derived));
      return;
    }
    for (int c = 0; c < r; ++c) {
      bool ok = true;
      for (int v = 0; v < node && ok; ++v)
        if (assign[v] == c && target.coxeter_entry(v + 1, node + 1) != 2) ok = false;
      if (!ok) continue;
      assign[static_cast<std::size_t>(node)] = c;
      self(self, node + 1);
    }
  };
  recurse(recurse, 0);
  return found;
}

// ---------------------------------------------------------------- JSON

FoldingDef parse_folding(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("folding JSON: ") + e.what());
  }
  try {
    auto source = TypeId::parse(doc.at("source").get<std::string>());
    auto target = TypeId::parse(doc.at("target").get<std::string>());
    auto images = doc.at("images").get<std::vector<std::vector<int>>>();
    auto prov = parse_provenance(doc.value("provenance", std::string("derived")));
    for (const auto& img : images)
      for (int g : img)
        if (g < 1 || g > target.rank())
          throw InvalidInput("folding image letter " + std::to_string(g) + " out of range for " +
                             target.name());
    return make_folding(source, target, images, prov);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("folding JSON: ") + e.what());
  }
}

std::string emit_folding(const FoldingDef& f) {
  nlohmann::ordered_json doc;
  doc["source"] = f.source.name();
  doc["target"] = f.target.name();
  auto images = nlohmann::ordered_json::array();
  for (const auto& w : f.images) {
    auto img = nlohmann::ordered_json::array();
    for (const auto& l : w.letters()) img.push_back(l.gen);
    images.push_back(img);
  }
  doc["images"] = images;
  doc["provenance"] = provenance_name(f.provenance);
  return doc.dump() + "\n";
}

}  // namespace pureartin
