#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "pureartin/cli.hpp"
#include "pureartin/errors.hpp"

using namespace pureartin;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const TypeId A2 = TypeId::parse("A2");

}  // namespace

TEST(ParseWord, Syntaxes) {
  EXPECT_EQ(cli::parse_word(A2, "1 1"), ArtinWord::power(A2, 1, 2));
  EXPECT_EQ(cli::parse_word(A2, "s1 s2 s1^-1"), ArtinWord(A2, {{1, 1}, {2, 1}, {1, -1}}));
  EXPECT_EQ(cli::parse_word(A2, "  1,\t2  -1 "), ArtinWord(A2, {{1, 1}, {2, 1}, {1, -1}}));
  EXPECT_EQ(cli::parse_word(A2, "s2^-2"), ArtinWord::power(A2, 2, -2));
  EXPECT_TRUE(cli::parse_word(A2, "").empty());
}

TEST(ParseWord, Errors) {
  try {
    cli::parse_word(A2, "0");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("generator indices start at 1"), std::string::npos);
  }
  try {
    cli::parse_word(A2, "1 2 3");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("token 3"), std::string::npos);
  }
  for (const char* bad : {"x", "s", "s1^", "s1^0", "1.5", "s-1", "--1"})
    EXPECT_THROW(cli::parse_word(A2, bad), InvalidInput) << bad;
}

TEST(ParseWord, RoundTrip) {
  const ArtinWord w(TypeId::parse("E8"), {{8, 1}, {2, -1}, {4, 1}, {4, 1}});
  EXPECT_EQ(cli::parse_word(w.type(), w.to_string()), w);
}

TEST(Run, Info) {
  const auto r = run({"info", "--type", "H3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("N=15"), std::string::npos);
  EXPECT_NE(r.out.find("Coxeter number 10"), std::string::npos);
  EXPECT_NE(r.out.find("folding target D6"), std::string::npos);
}

TEST(Run, DepthJson) {
  const auto r = run({"depth", "--type", "A2", "--word", "1 1 2 2 -1 -1 -2 -2", "--order", "6",
                      "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "depth");
  EXPECT_GE(j["report"]["valuation"].get<int>(), 2);
  EXPECT_EQ(j["report"]["convention"], "C1=(P,P)");
}

TEST(Run, PrintedH4FixtureNamesFailure) {
  const auto r = run({"verify-folding", "--type", "H4", "--fixture", "paper-as-printed"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(s1, s4) commutation"), std::string::npos);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run({"depth", "--type", "A2", "--word", "0"}).code, 2);
  EXPECT_EQ(run({"depth", "--type", "A2", "--word", "1 2"}).code, 2);
  EXPECT_EQ(run({"info", "--type", "Q7"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"verify-rep", "--type", "D4", "--table", "/nonexistent/D4.json"}).code, 3);
  EXPECT_EQ(run({"verify-rep", "--type", "A3"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Run, Deterministic) {
  const std::vector<std::string> args = {"audit", "--type", "A2", "--rmax", "2", "--order", "3",
                                         "--samples", "4", "--json"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> diag = {"verify-diagram", "--type", "A3", "--count", "50",
                                         "--order", "1", "--json", "--seed", "5"};
  EXPECT_EQ(run(diag).out, run(diag).out);
}
