#include <gtest/gtest.h>

#include "anick/chains.hpp"
#include "anick/g23.hpp"
#include "test_support.hpp"

namespace anick {
namespace {

const ObstructionSet& v() {
  static const ObstructionSet s(g23::presentation());
  return s;
}

const testing::RawChainOracle& oracle() {
  static const testing::RawChainOracle o({"aa", "bb", "cc", "ba", "bca"});
  return o;
}

std::vector<std::string> words_of(const std::vector<ChainElement>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(render_word(c.word));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

TEST(Prechain, Examples) {
  EXPECT_TRUE(is_prechain(Word("bca"), 1, v()));
  EXPECT_FALSE(is_prechain(Word("ab"), 1, v()));
  // b^2 at [1,2] then bca at [2,4]: a_2 = 2 <= b_1 = 2 < b_2 = 4.
  EXPECT_TRUE(oracle().is_prechain("bbca", 2));
  EXPECT_TRUE(is_prechain(Word("bbca"), 2, v()));
  EXPECT_FALSE(is_prechain(Word("bbca"), 1, v()));
  EXPECT_FALSE(is_prechain(Word("a"), 0, v()));
}

TEST(Prechain, AgreesWithRawDefinition) {
  for (const auto& s : testing::all_words("abc", 1, 7))
    for (int n = 1; n <= 4; ++n) ASSERT_EQ(is_prechain(Word(s), n, v()), oracle().is_prechain(s, n)) << s << " " << n;
}

TEST(ChainDegree, Examples) {
  EXPECT_EQ(chain_degree(Word("a"), v()), 0);
  EXPECT_EQ(chain_degree(Word("bcaa"), v()), 2);
  EXPECT_TRUE(oracle().chain_degrees("bcab").empty());
  EXPECT_EQ(chain_degree(Word("bcab"), v()), std::nullopt);
  EXPECT_EQ(chain_degree(Word(""), v()), std::nullopt);
}

TEST(ChainDegree, AgreesWithRawDefinitionOnShortWords) {
  for (const auto& s : testing::all_words("abc", 1, 7)) {
    auto raw = oracle().chain_degrees(s);
    ASSERT_LE(raw.size(), 1u) << s;
    auto mine = chain_degree(Word(s), v());
    if (raw.empty()) {
      ASSERT_FALSE(mine.has_value()) << s;
      continue;
    }
    ASSERT_EQ(mine, *raw.begin()) << s;
    // The canonical boundaries must be one of the raw witnesses.
    auto c = chain_factorization(Word(s), v());
    if (c.degree == 0) continue;
    std::vector<std::size_t> bs;
    std::size_t pos = c.factors[0].size();
    for (std::size_t k = 1; k < c.factors.size(); ++k) bs.push_back(pos += c.factors[k].size());
    auto wit = oracle().chain_witnesses(s, c.degree);
    ASSERT_NE(std::find(wit.begin(), wit.end(), bs), wit.end()) << s;
  }
}

TEST(ChainFactorization, Examples) {
  auto f = [](const char* w) {
    auto c = chain_factorization(parse_word(w), v());
    std::vector<std::string> out;
    for (const auto& x : c.factors) out.push_back(x.letters());
    return out;
  };
  EXPECT_EQ(f("bca"), (std::vector<std::string>{"b", "ca"}));
  EXPECT_EQ(f("bca^2"), (std::vector<std::string>{"b", "ca", "a"}));
  EXPECT_EQ(f("a^3"), (std::vector<std::string>{"a", "a", "a"}));
  EXPECT_EQ(render(chain_factorization(parse_word("bca^2"), v())), "bca^2 = b|ca|a");
  EXPECT_THROW(chain_factorization(Word("bcab"), v()), NotAChain);
}

TEST(EnumerateChains, LowDegrees) {
  EXPECT_EQ(words_of(enumerate_chains(0, v())), sorted({"a", "b", "c"}));
  EXPECT_EQ(words_of(enumerate_chains(1, v())), sorted({"a^2", "b^2", "c^2", "ba", "bca"}));
  EXPECT_EQ(words_of(enumerate_chains(2, v())), sorted({"a^3", "b^3", "c^3", "b^2a", "ba^2", "b^2ca", "bca^2"}));
  auto empty = enumerate_chains(-1, v());
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].degree, -1);
}

TEST(EnumerateChains, ClosedPatternThroughDegree12) {
  for (int n = 3; n <= 12; ++n) {
    std::vector<std::string> expect;
    for (char x : {'a', 'b', 'c'}) expect.push_back(std::string(n + 1, x));
    for (int i = 1; i <= n; ++i) {
      int j = n + 1 - i;
      expect.push_back(std::string(i, 'b') + std::string(j, 'a'));
      expect.push_back(std::string(i, 'b') + "c" + std::string(j, 'a'));
    }
    auto chains = enumerate_chains(n, v());
    std::vector<std::string> got;
    for (const auto& c : chains) got.push_back(c.word.letters());
    EXPECT_EQ(sorted(got), sorted(expect)) << "n=" << n;
    EXPECT_EQ(chains.size(), static_cast<std::size_t>(2 * n + 3));
  }
}

TEST(EnumerateChains, FactorizationsAreConsistent) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& c : enumerate_chains(n, v())) {
      EXPECT_EQ(concat(c.factors), c.word);
      EXPECT_EQ(c.factors.size(), static_cast<std::size_t>(n + 1));
      EXPECT_EQ(chain_factorization(c.word, v()), c);
      std::vector<Word> head(c.factors.begin(), c.factors.end() - 1);
      EXPECT_EQ(chain_degree(concat(head), v()), n - 1);
    }
  }
}

TEST(EnumerateChains, MatchesRawDefinitionByFiltering) {
  // Filtering all words of length <= 7 with the raw definition gives the same sets.
  std::map<int, std::vector<std::string>> raw;
  for (const auto& s : testing::all_words("abc", 1, 7))
    for (int d : oracle().chain_degrees(s)) raw[d].push_back(s);
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::string> got;
    for (const auto& c : enumerate_chains(n, v()))
      if (c.word.size() <= 7) got.push_back(c.word.letters());
    EXPECT_EQ(sorted(got), sorted(raw[n])) << "n=" << n;
  }
}

TEST(EnumerateChains, OtherPresentation) {
  // Single obstruction aba: chains overlap on the shared a.
  Presentation p(Alphabet("ab"), {{Word("aba"), NCPolynomial()}});
  ObstructionSet s(p);
  EXPECT_EQ(words_of(enumerate_chains(1, s)), sorted({"aba"}));
  EXPECT_EQ(words_of(enumerate_chains(2, s)), sorted({"ababa"}));
  EXPECT_EQ(render(enumerate_chains(2, s)[0]), "ababa = a|ba|ba");
}

}  // namespace
}  // namespace anick
