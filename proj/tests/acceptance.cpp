// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "pureartin/errors.hpp"
#include "pureartin/folding.hpp"
#include "pureartin/lkb.hpp"
#include "pureartin/nilpotence.hpp"

using namespace pureartin;

namespace {

constexpr int kFrozenCommutatorValuation = 2;
constexpr int kFrozenSeparatingOrder = 2;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

RepRegistry& registry() {
  static RepRegistry reg(std::filesystem::path(PUREARTIN_DATA_DIR) / "tables");
  return reg;
}

ArtinWord sq(TypeId t, int g) { return ArtinWord::power(t, g, 2); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict exact_braid_relations() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 4; ++n) {
    const auto t = builtin_typeA_table(n);
    const auto rel = verify_braid_relations(t, EvalMode::exact());
    v.require(t.dimension == static_cast<std::size_t>(n * (n + 1) / 2), "dimension");
    v.require(rel.all_pass(), "A" + std::to_string(n) + " relation fails");
  }
  RepTable mutated = builtin_typeA_table(2);
  mutated.generators[0].set(1, 1, LaurentQT(1) - LaurentQT::monomial(2, 1, 0));
  bool caught = false;
  try {
    LKBRep::from_table(mutated);
  } catch (const ValidationFailure&) {
    caught = true;
  }
  v.require(caught, "mutated A2 table accepted");
  const double s = seconds_since(t0);
  v.require(s < 10, "runtime " + std::to_string(s) + "s");
  if (v.pass) v.detail = "A2/A3/A4 exact, mutation caught, " + std::to_string(s) + "s";
  return v;
}

Verdict diagram() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::string done;
  for (const char* name : {"A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"}) {
    const auto type = TypeId::parse(name);
    if (!registry().available(type)) continue;
    auto img = registry().truncated(type, 1);
    auto rs = root_system(type);
    WordSampler s(2000);
    for (int n = 0; n < 1000; ++n) {
      const ArtinWord w = s.word(type, 20);
      if (!(reduce_mod_h(eval_word_truncated(*img, w)) == rs->conj_matrix(rs->word_to_w(w)))) {
        v.require(false, std::string(name) + " word " + w.to_string());
        break;
      }
    }
    done += std::string(name) + " ";
    if (std::string(name) == "D4") {
      const double s = seconds_since(t0);
      v.require(s < 60, "A/D4 runtime " + std::to_string(s) + "s");
    }
  }
  if (v.pass) v.detail = "1000 words each over " + done + "(" + std::to_string(seconds_since(t0)) + "s)";
  return v;
}

Verdict filtration() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* name : {"A2", "A3"}) {
    const auto r = filtration_audit(TypeId::parse(name), 3, 6, 20, kDefaultSeed, registry());
    v.require(r.entries.size() == 60, "sample count");
    v.require(r.all_pass(), std::string(name) + " witness below r+1");
  }
  const auto A2 = TypeId::parse("A2");
  const auto c = certify(commutator(sq(A2, 1), sq(A2, 2)), 6, registry());
  v.require(c.valuation.value() >= 2, "commutator below the inclusion bound");
  v.require(c.valuation.value() == kFrozenCommutatorValuation,
            "frozen v([s1^2, s2^2]) changed to " + c.valuation.to_string());
  const double s = seconds_since(t0);
  v.require(s < 300, "runtime " + std::to_string(s) + "s");
  if (v.pass)
    v.detail = "A2, A3 at r<=3, K=6 all v>=r+1; v([s1^2,s2^2]) = " +
               std::to_string(kFrozenCommutatorValuation) + ", " + std::to_string(s) + "s";
  return v;
}

Verdict purity() {
  Verdict v;
  int pure = 0, total = 0;
  for (const char* name : {"A3", "D5"}) {
    const auto type = TypeId::parse(name);
    auto img = registry().truncated(type, 2);
    auto rs = root_system(type);
    WordSampler s(4000);
    for (int n = 0; n < 500; ++n) {
      ArtinWord w = s.word(type, 12);
      if (n % 2 == 0) w = w * sq(type, 1 + static_cast<int>(s.below(type.rank()))) * w.inverse();
      const auto val = h_valuation(eval_word_truncated(*img, w));
      const bool is_pure = rs->is_pure(w);
      v.require((val.lower_bound() >= 1) == is_pure, std::string(name) + " " + w.to_string());
      v.require(is_pure || val.value() == 0, "non-pure word with v != 0");
      pure += is_pure;
      ++total;
    }
  }
  if (v.pass)
    v.detail = std::to_string(total) + " words over A3, D5 (" + std::to_string(pure) + " pure)";
  return v;
}

Verdict folding_suite() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto h3 = verify_folding_W(folding_H3());
  std::vector<int> orders;
  for (const auto& r : h3.relations) orders.push_back(r.m);
  v.require(h3.all_pass() && orders == std::vector<int>{5, 2, 3}, "H3 W-level");
  const auto h3rep = verify_folding_rep(folding_H3(), registry(), EvalMode::exact());
  v.require(h3rep.all_pass() && h3rep.strength == "proof", "H3 rep-level exact in D6");
  for (int n = 2; n <= 3; ++n) {
    v.require(verify_folding_W(folding_B(n)).all_pass(), "B W-level");
    v.require(verify_folding_rep(folding_B(n), registry(), EvalMode::exact()).all_pass(),
              "B rep-level");
  }
  v.require(verify_folding_W(folding_F4()).all_pass(), "F4");
  v.require(verify_folding_W(folding_G2()).all_pass(), "G2");
  for (int m = 5; m <= 12; ++m) {
    v.require(verify_folding_W(folding_I2(m)).all_pass(), "I2 W-level");
    v.require(verify_folding_rep(folding_I2(m), registry(), EvalMode::exact()).all_pass(),
              "I2 rep-level");
  }
  const auto j3 = induced_w_map(folding_H3()).image_size;
  const auto j4 = induced_w_map(folding_H4()).image_size;
  const auto jb = induced_w_map(folding_B(2)).image_size;
  v.require(j3 == 120 && j4 == 14400 && jb == 8, "injectivity sizes");
  const double s = seconds_since(t0);
  v.require(s < 300, "runtime " + std::to_string(s) + "s");
  if (v.pass)
    v.detail = "|j(W(H3))|=" + std::to_string(j3) + " |j(W(H4))|=" + std::to_string(j4) +
               " |j(W(B2))|=" + std::to_string(jb) + ", " + std::to_string(s) + "s";
  return v;
}

Verdict h4_discrepancy() {
  Verdict v;
  const auto printed = verify_folding_W(folding_H4_as_printed());
  const auto f = printed.failures();
  v.require(f.size() == 1 && f[0].i == 1 && f[0].j == 4 && f[0].m == 2,
            "printed fixture should fail exactly (s1, s4)");
  const auto corrected = verify_folding_W(folding_H4());
  v.require(corrected.all_pass() && corrected.relations.size() == 6, "corrected fixture");
  if (v.pass) v.detail = "printed fails only (s1, s4); corrected passes 6/6";
  return v;
}

Verdict ring_filtration() {
  Verdict v;
  std::mt19937_64 rng(7000);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  auto unipotent = [&](int shift) {
    MatrixH m = identity_h(3, 8);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        std::vector<QuadElem> c(9, QuadElem(2));
        for (int k = shift; k <= 8; ++k)
          if (pick(0, 1)) c[static_cast<std::size_t>(k)] = QuadElem(2, pick(-5, 5), pick(-5, 5));
        m.add_to(i, j, HSeries::from_coeffs(c));
      }
    return m;
  };
  for (int n = 0; n < 1000; ++n) {
    const MatrixH a = unipotent(pick(1, 4)), b = unipotent(pick(1, 4));
    const MatrixH c = a * b * invert_truncated(a) * invert_truncated(b);
    const int va = h_valuation(a).lower_bound(), vb = h_valuation(b).lower_bound();
    v.require(h_valuation(c).lower_bound() >= std::min(va + vb, 9), "pair " + std::to_string(n));
  }
  if (v.pass) v.detail = "1000 random pairs, K=8";
  return v;
}

Verdict separation() {
  Verdict v;
  const auto A2 = TypeId::parse("A2");
  const auto a = sq(A2, 1) * sq(A2, 2), b = sq(A2, 2) * sq(A2, 1);
  int minimal = -1;
  for (int k = 0; k <= 6 && minimal < 0; ++k)
    if (separate(a, b, EvalMode::truncated(k), registry()).verdict == Separation::Verdict::Distinct)
      minimal = k;
  v.require(minimal >= 0, "not separated at K <= 6");
  v.require(minimal == kFrozenSeparatingOrder, "frozen order changed to " + std::to_string(minimal));
  const auto rep = registry().get(A2);
  v.require(!(eval_word_exact(*rep, a * b.inverse()) == identity_l(3)), "exact quotient is I");
  if (v.pass) v.detail = "distinct from K=" + std::to_string(minimal) + "; exact quotient != I";
  return v;
}

Verdict coherence() {
  Verdict v;
  for (const char* name : {"A2", "A3"}) {
    const auto type = TypeId::parse(name);
    auto rep = registry().get(type);
    auto i4 = registry().truncated(type, 4), i6 = registry().truncated(type, 6);
    WordSampler s(9000);
    for (int n = 0; n < 200; ++n) {
      const ArtinWord w = s.word(type, 15);
      const MatrixL exact = eval_word_exact(*rep, w);
      v.require(iota_substitute(exact, 4) == eval_word_truncated(*i4, w), "K=4 " + w.to_string());
      v.require(iota_substitute(exact, 6) == eval_word_truncated(*i6, w), "K=6 " + w.to_string());
    }
  }
  if (v.pass) v.detail = "200 words each in A2, A3 at K=4 and K=6";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"exact braid relations", exact_braid_relations},
      {"commutative diagram", diagram},
      {"filtration audit", filtration},
      {"purity criterion", purity},
      {"folding suite", folding_suite},
      {"H4 discrepancy", h4_discrepancy},
      {"ring-level filtration", ring_filtration},
      {"separation", separation},
      {"exact/truncated coherence", coherence},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d (%s): %s  %s\n", index, name, v.pass ? "PASS" : "FAIL",
                v.detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
