#include "pureartin/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "pureartin/errors.hpp"

namespace pureartin {

// ---------------------------------------------------------------- TypeId

TypeId TypeId::make(Family family, int param) {
  auto bad = [&](const std::string& why) {
    return InvalidInput("unsupported Coxeter type: " + why);
  };
  switch (family) {
    case Family::A:
      if (param < 1) throw bad("A_n needs n >= 1");
      break;
    case Family::B:
      if (param < 2) throw bad("B_n needs n >= 2");
      break;
    case Family::D:
      if (param < 4) throw bad("D_n needs n >= 4");
      break;
    case Family::E:
      if (param < 6 || param > 8) throw bad("E_n needs 6 <= n <= 8");
      break;
    case Family::F:
      if (param != 4) throw bad("only F4 exists");
      break;
    case Family::H:
      if (param != 3 && param != 4) throw bad("only H3 and H4 are finite");
      break;
    case Family::I2:
      if (param < 5)
        throw bad("I2(m) needs m >= 5 (I2(3) is A2, I2(4) is B2)");
      break;
  }
  return TypeId(family, param);
}

TypeId TypeId::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  auto fail = [&]() { return InvalidInput("cannot parse Coxeter type '" + std::string(text) + "'"); };
  auto to_int = [&](std::string_view digits) {
    int v = 0;
    if (digits.empty()) throw fail();
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw fail();
    return v;
  };
  if (s.empty()) throw fail();
  if (s == "G2" || s == "g2") return make(Family::I2, 6);
  if (s.size() > 3 && (s[0] == 'I' || s[0] == 'i') && s[1] == '2' && s[2] == '(' &&
      s.back() == ')')
    return make(Family::I2, to_int(std::string_view(s).substr(3, s.size() - 4)));
  Family f;
  switch (s[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'B': case 'b': f = Family::B; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    case 'F': case 'f': f = Family::F; break;
    case 'H': case 'h': f = Family::H; break;
    default: throw fail();
  }
  return make(f, to_int(std::string_view(s).substr(1)));
}

std::string TypeId::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(param_);
    case Family::B: return "B" + std::to_string(param_);
    case Family::D: return "D" + std::to_string(param_);
    case Family::E: return "E" + std::to_string(param_);
    case Family::F: return "F" + std::to_string(param_);
    case Family::H: return "H" + std::to_string(param_);
    case Family::I2: return "I2(" + std::to_string(param_) + ")";
  }
  return "?";
}

bool TypeId::is_simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

bool TypeId::is_crystallographic() const {
  return family_ != Family::H && !(family_ == Family::I2 && param_ != 6);
}

int TypeId::coxeter_entry(int i, int j) const {
  const int n = rank();
  if (i < 1 || j < 1 || i > n || j > n)
    throw InvalidInput("generator index out of range for " + name());
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  switch (family_) {
    case Family::A:
      return j == i + 1 ? 3 : 2;
    case Family::B:
      if (j != i + 1) return 2;
      return j == n ? 4 : 3;
    case Family::D:
      if (j == i + 1 && j <= n - 1) return 3;
      if (i == n - 2 && j == n) return 3;
      return 2;
    case Family::E:
      if ((i == 1 && j == 3) || (i == 2 && j == 4)) return 3;
      if (i >= 3 && j == i + 1) return 3;
      return 2;
    case Family::F:
      if (j != i + 1) return 2;
      return i == 2 ? 4 : 3;
    case Family::H:
      if (j != i + 1) return 2;
      return i == 1 ? 5 : 3;
    case Family::I2:
      return param_;
  }
  return 2;
}

std::size_t TypeId::reflection_count() const {
  const auto n = static_cast<std::size_t>(param_);
  switch (family_) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I2: return n;
  }
  return 0;
}

std::uint64_t TypeId::group_order() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    return (b != 0 && a > kMax / b) ? kMax : a * b;
  };
  auto factorial = [&](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f = mul(f, k);
    return f;
  };
  auto pow2 = [&](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 0; k < n; ++k) f = mul(f, 2);
    return f;
  };
  const auto n = static_cast<std::uint64_t>(param_);
  switch (family_) {
    case Family::A: return factorial(n + 1);
    case Family::B: return mul(pow2(n), factorial(n));
    case Family::D: return mul(pow2(n - 1), factorial(n));
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::H: return n == 3 ? 120 : 14400;
    case Family::I2: return 2 * n;
  }
  return 0;
}

int TypeId::coxeter_number() const {
  return static_cast<int>(2 * reflection_count() / static_cast<std::size_t>(rank()));
}

// ---------------------------------------------------------------- WElem

namespace {

inline std::uint32_t negate_root(std::uint32_t s, std::size_t n) {
  return s < n ? static_cast<std::uint32_t>(s + n) : static_cast<std::uint32_t>(s - n);
}

}  // namespace

WElem WElem::identity(std::size_t n_roots) {
  WElem w;
  w.images_.resize(n_roots);
  for (std::size_t p = 0; p < n_roots; ++p) w.images_[p] = static_cast<std::uint16_t>(p);
  return w;
}

WElem WElem::from_images(std::vector<std::uint16_t> images) {
  WElem w;
  w.images_ = std::move(images);
  return w;
}

std::uint32_t WElem::apply(std::uint32_t s) const {
  const std::size_t n = images_.size();
  if (s < n) return images_[s];
  return negate_root(images_[s - n], n);
}

bool WElem::is_identity() const {
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

WElem WElem::inverse() const {
  const std::size_t n = images_.size();
  WElem w;
  w.images_.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::uint16_t y = images_[p];
    if (y < n) w.images_[y] = static_cast<std::uint16_t>(p);
    else w.images_[y - n] = static_cast<std::uint16_t>(p + n);
  }
  return w;
}

WElem operator*(const WElem& x, const WElem& y) {
  if (x.images_.size() != y.images_.size())
    throw InvalidInput("composing Coxeter group elements of different root systems");
  WElem w;
  w.images_.resize(y.images_.size());
  for (std::size_t p = 0; p < y.images_.size(); ++p)
    w.images_[p] = static_cast<std::uint16_t>(x.apply(y.images_[p]));
  return w;
}

std::size_t WElem::order() const {
  std::size_t k = 1;
  WElem p = *this;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

std::size_t WElemHash::operator()(const WElem& w) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : w.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- ArtinWord

ArtinWord::ArtinWord(TypeId type, std::vector<Letter> letters)
    : type_(type), letters_(std::move(letters)) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const auto& l = letters_[k];
    if (l.gen < 1 || l.gen > type_.rank())
      throw InvalidInput("generator index " + std::to_string(l.gen) + " at position " +
                         std::to_string(k + 1) + " out of range 1.." +
                         std::to_string(type_.rank()) + " for " + type_.name());
    if (l.exp != 1 && l.exp != -1)
      throw InvalidInput("letter exponent must be +1 or -1");
  }
}

ArtinWord ArtinWord::power(TypeId type, int gen, int k) {
  std::vector<Letter> letters(static_cast<std::size_t>(k < 0 ? -k : k),
                              Letter{gen, k < 0 ? -1 : 1});
  return ArtinWord(type, std::move(letters));
}

ArtinWord ArtinWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  ArtinWord w(type_);
  w.letters_ = std::move(out);
  return w;
}

ArtinWord operator*(const ArtinWord& a, const ArtinWord& b) {
  if (a.type_ != b.type_)
    throw InvalidInput("cannot concatenate words of types " + a.type_.name() + " and " +
                       b.type_.name());
  ArtinWord w(a.type_);
  w.letters_.reserve(a.size() + b.size());
  w.letters_ = a.letters_;
  w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
  return w;
}

std::string ArtinWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) os << ' ';
    os << letters_[k].gen * letters_[k].exp;
  }
  return os.str();
}

ArtinWord commutator(const ArtinWord& a, const ArtinWord& b) {
  return a * b * a.inverse() * b.inverse();
}

// ---------------------------------------------------------------- RootSystem

namespace {

using Coords = std::vector<QuadElem>;

struct CoordsLess {
  bool operator()(const Coords& a, const Coords& b) const {
    QuadStructuralLess less;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less);
  }
};

QuadElem q5(long a, long b = 0, long den = 1) {
  return QuadElem(5, Rational(a, den), Rational(b, den));
}

// ⟨α_j, α_i^∨⟩ for the simple roots of a non-dihedral type.
std::vector<Coords> cartan(TypeId type) {
  const int n = type.rank();
  std::vector<Coords> c(static_cast<std::size_t>(n), Coords(static_cast<std::size_t>(n), q5(0)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      QuadElem& e = c[i - 1][j - 1];
      if (i == j) {
        e = q5(2);
        continue;
      }
      switch (type.coxeter_entry(i, j)) {
        case 2: e = q5(0); break;
        case 3: e = q5(-1); break;
        case 5: e = q5(-1, -1, 2); break;  // −2cos(π/5) = −τ
        case 4: {
          // Long–short pair: the short root's coroot pairs to −2.
          int short_node = type.family() == Family::B ? n : 3;
          if (type.family() == Family::F && (i == 2 || i == 3) && (j == 2 || j == 3))
            short_node = 3;
          e = (i == short_node) ? q5(-2) : q5(-1);
          break;
        }
        default:
          throw InvalidInput("no coordinate model for " + type.name());
      }
    }
  }
  return c;
}

int coord_sign(const Coords& v) {
  for (const auto& x : v)
    if (int s = x.sign(); s != 0) return s;
  return 0;
}

Coords reflect_coords(const std::vector<Coords>& c, int i, const Coords& beta) {
  QuadElem pairing = q5(0);
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (!beta[j].is_zero() && !c[i][j].is_zero()) pairing += c[i][j] * beta[j];
  Coords out = beta;
  out[static_cast<std::size_t>(i)] -= pairing;
  return out;
}

}  // namespace

RootSystem RootSystem::build(TypeId type) {
  RootSystem rs;
  rs.type_ = type;
  const int n = type.rank();

  if (type.family() == Family::I2) {
    // Root k (0 ≤ k < 2m) sits at angle kπ/m; 0..m−1 are positive, with
    // α1 = root 0 and α2 = root m−1. Reflection in root j: k ↦ 2j + m − k.
    const int m = type.param();
    std::vector<int> order{0, m - 1};
    std::vector<int> rest;
    for (int k = 1; k <= m - 2; ++k) rest.push_back(k);
    std::stable_sort(rest.begin(), rest.end(), [m](int a, int b) {
      return std::min(a, m - 1 - a) < std::min(b, m - 1 - b);
    });
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<std::uint32_t> pos(static_cast<std::size_t>(m));
    for (std::size_t p = 0; p < order.size(); ++p) pos[static_cast<std::size_t>(order[p])] = static_cast<std::uint32_t>(p);
    rs.n_roots_ = static_cast<std::size_t>(m);
    auto signed_of_angle = [&](int k) -> std::uint32_t {
      k = ((k % (2 * m)) + 2 * m) % (2 * m);
      if (k < m) return pos[static_cast<std::size_t>(k)];
      return negate_root(pos[static_cast<std::size_t>(k - m)], rs.n_roots_);
    };
    const int wall[2] = {0, m - 1};
    for (int g = 0; g < 2; ++g) {
      std::vector<std::uint32_t> act(2 * rs.n_roots_);
      for (std::size_t p = 0; p < rs.n_roots_; ++p) {
        const int k = order[p];
        act[p] = signed_of_angle(2 * wall[g] + m - k);
        act[p + rs.n_roots_] = negate_root(act[p], rs.n_roots_);
      }
      rs.action_.push_back(std::move(act));
    }
    return rs;
  }

  const auto c = cartan(type);
  std::vector<Coords> roots;
  std::map<Coords, std::size_t, CoordsLess> seen;
  std::deque<Coords> frontier;
  for (int i = 0; i < n; ++i) {
    Coords e(static_cast<std::size_t>(n), q5(0));
    e[static_cast<std::size_t>(i)] = q5(1);
    seen.emplace(e, 0);
    roots.push_back(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    Coords beta = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      Coords img = reflect_coords(c, i, beta);
      if (coord_sign(img) <= 0) continue;
      if (seen.emplace(img, 0).second) {
        roots.push_back(img);
        frontier.push_back(std::move(img));
      }
    }
  }

  auto height = [](const Coords& v) {
    QuadElem h = q5(0);
    for (const auto& x : v) h += x;
    return h;
  };
  std::sort(roots.begin(), roots.end(), [&](const Coords& a, const Coords& b) {
    if (auto o = compare_real(height(a), height(b)); o != 0) return o < 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (auto o = compare_real(a[k], b[k]); o != 0) return o > 0;
    return false;
  });
  rs.n_roots_ = roots.size();
  rs.coords_ = roots;
  for (std::size_t p = 0; p < roots.size(); ++p) seen[roots[p]] = p;

  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> act(2 * rs.n_roots_);
    for (std::size_t p = 0; p < rs.n_roots_; ++p) {
      Coords img = reflect_coords(c, i, roots[p]);
      std::uint32_t target;
      if (coord_sign(img) > 0) {
        target = static_cast<std::uint32_t>(seen.at(img));
      } else {
        for (auto& x : img) x = -x;
        target = static_cast<std::uint32_t>(seen.at(img) + rs.n_roots_);
      }
      act[p] = target;
      act[p + rs.n_roots_] = negate_root(target, rs.n_roots_);
    }
    rs.action_.push_back(std::move(act));
  }
  return rs;
}

std::optional<std::size_t> RootSystem::index_of(const std::vector<QuadElem>& coords) const {
  for (std::size_t p = 0; p < coords_.size(); ++p)
    if (coords_[p] == coords) return p;
  return std::nullopt;
}

std::uint32_t RootSystem::reflect(int gen, std::uint32_t signed_root) const {
  if (gen < 1 || gen > rank()) throw InvalidInput("generator index out of range");
  return action_[static_cast<std::size_t>(gen - 1)].at(signed_root);
}

WElem RootSystem::simple(int gen) const {
  if (gen < 1 || gen > rank())
    throw InvalidInput("generator index " + std::to_string(gen) + " out of range for " +
                       type_.name());
  const auto& act = action_[static_cast<std::size_t>(gen - 1)];
  std::vector<std::uint16_t> img(n_roots_);
  for (std::size_t p = 0; p < n_roots_; ++p) img[p] = static_cast<std::uint16_t>(act[p]);
  return WElem::from_images(std::move(img));
}

void RootSystem::check_word(const ArtinWord& w) const {
  if (w.type() != type_)
    throw InvalidInput("word of type " + w.type().name() + " used with root system " +
                       type_.name());
}

WElem RootSystem::word_to_w(const ArtinWord& w) const {
  check_word(w);
  std::vector<std::uint16_t> img(n_roots_);
  for (std::size_t p = 0; p < n_roots_; ++p) img[p] = static_cast<std::uint16_t>(p);
  WElem acc = WElem::from_images(img);
  // acc ← acc · s_i, i.e. new(p) = acc(s_i(p)).
  for (const auto& l : w.letters()) {
    const auto& act = action_[static_cast<std::size_t>(l.gen - 1)];
    for (std::size_t p = 0; p < n_roots_; ++p) img[p] = static_cast<std::uint16_t>(acc.apply(act[p]));
    acc = WElem::from_images(img);
  }
  return acc;
}

std::vector<std::size_t> RootSystem::conj_perm(const WElem& x) const {
  if (x.root_count() != n_roots_) throw InvalidInput("element of a different Coxeter group");
  std::vector<std::size_t> perm(n_roots_);
  for (std::size_t p = 0; p < n_roots_; ++p) {
    const std::uint32_t y = x.apply(static_cast<std::uint32_t>(p));
    perm[p] = y < n_roots_ ? y : y - n_roots_;
  }
  return perm;
}

MatrixQ RootSystem::conj_matrix(const WElem& x) const {
  const auto perm = conj_perm(x);
  MatrixQ m(n_roots_, n_roots_);
  for (std::size_t p = 0; p < n_roots_; ++p) m.set(perm[p], p, QuadElem(2, Rational(1)));
  return m;
}

std::shared_ptr<const RootSystem> root_system(TypeId type) {
  static std::mutex mu;
  static std::map<TypeId, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end())
    it = cache.emplace(type, std::make_shared<const RootSystem>(RootSystem::build(type))).first;
  return it->second;
}

// ---------------------------------------------------------------- groups

WElem alternating_product(const WElem& x, const WElem& y, int m) {
  WElem acc = WElem::identity(x.root_count());
  for (int k = 0; k < m; ++k) acc = acc * ((k % 2 == 0) ? x : y);
  return acc;
}

bool braid_order_holds_W(const WElem& a, const WElem& b, int m) {
  if (m < 2) throw InvalidInput("braid relation length must be >= 2");
  return alternating_product(a, b, m) == alternating_product(b, a, m);
}

WSet generate_group(const std::vector<WElem>& gens, std::uint64_t cap) {
  if (gens.empty()) throw InvalidInput("empty generating set");
  WSet seen;
  std::deque<WElem> frontier;
  WElem id = WElem::identity(gens.front().root_count());
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    WElem x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      WElem y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeded cap " + std::to_string(cap));
        frontier.push_back(std::move(y));
      }
    }
  }
  return seen;
}

WSet enumerate_group(TypeId type, std::uint64_t cap) {
  const std::uint64_t order = type.group_order();
  if (order > cap)
    throw CapExceeded("refusing to enumerate W(" + type.name() + ") of order " +
                      std::to_string(order) + " with cap " + std::to_string(cap));
  auto rs = root_system(type);
  std::vector<WElem> gens;
  for (int i = 1; i <= type.rank(); ++i) gens.push_back(rs->simple(i));
  return generate_group(gens, cap);
}

}  // namespace pureartin
