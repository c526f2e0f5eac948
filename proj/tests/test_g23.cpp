#include <gtest/gtest.h>

#include "anick/g23.hpp"
#include "anick/morse.hpp"

namespace anick {
namespace {

std::string cf(const char* w, int n) { return render(g23::closed_form_differential(parse_word(w), n)); }

TEST(G23, PresentationIsRecognized) {
  auto p = g23::presentation();
  EXPECT_TRUE(g23::is_g23(p));
  EXPECT_FALSE(g23::is_g23(g23::defining_relations()));
  EXPECT_EQ(p.rules().size(), 5u);
  EXPECT_EQ(p.obstructions(), (std::vector<Word>{Word("aa"), Word("bb"), Word("cc"), Word("ba"), Word("bca")}));
  EXPECT_EQ(render(p.rules()[3].rhs), "cabc");
  EXPECT_EQ(render(p.rules()[4].rhs), "acb");
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(3, 1), 3);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(10, 5), 252);
}

TEST(ChainShapes, RoundTrip) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& ch : g23::chains(n)) {
      EXPECT_EQ(ch.degree(), n);
      auto back = g23::Chain::from_word(ch.word());
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(back->word(), ch.word());
    }
  EXPECT_FALSE(g23::Chain::from_word(Word("ab")).has_value());
  EXPECT_FALSE(g23::Chain::from_word(Word("a")).has_value());
  EXPECT_FALSE(g23::Chain::from_word(Word("bcb")).has_value());
}

TEST(ChainShapes, MatchEnumeration) {
  ObstructionSet v(g23::presentation());
  for (int n = 1; n <= 12; ++n) {
    std::set<Word> shapes, enumerated;
    for (const auto& ch : g23::chains(n)) shapes.insert(ch.word());
    for (const auto& c : enumerate_chains(n, v)) enumerated.insert(c.word);
    EXPECT_EQ(shapes, enumerated) << "n=" << n;
    EXPECT_EQ(shapes.size(), static_cast<std::size_t>(2 * n + 3));
  }
}

TEST(ClosedForm, DegreeOne) {
  EXPECT_EQ(cf("bca", 1), "-[a]cb + bc[a] + [b]ca - ac[b] - a[c]b + b[c]a");
  EXPECT_EQ(cf("ba", 1), "b[a] - c[a]bc + [b]a - ca[b]c - [c]abc - cab[c]");
  EXPECT_EQ(cf("c^2", 1), "[c]c + c[c]");
}

TEST(ClosedForm, DegreeTwo) {
  EXPECT_EQ(cf("b^3", 2), "-[b^2]b + b[b^2]");
  EXPECT_EQ(cf("b^2a", 2), "b[ba] - [b^2]a + ac[b^2]c + [bca]bc + a[c^2]");
  EXPECT_EQ(cf("b^2ca", 2), "[ba]cb - [b^2]ca + ca[b^2] + b[bca] + cab[c^2]b");
  EXPECT_EQ(cf("bca^2", 2), "-[a^2]bc + bc[a^2] - ac[ba] - [bca]a - a[c^2]abc");
}

TEST(ClosedForm, HigherDegrees) {
  EXPECT_EQ(cf("b^3a", 3), "b[b^2a] + [b^3]a - ca[b^3]c - [b^2ca]bc - cab[c^3]");
  EXPECT_EQ(cf("b^2ca^2", 3), "[ba^2]bc + ca[b^2a] + [b^2ca]a + b[bca^2] - [c^3] + cab[c^3]abc");
  EXPECT_EQ(cf("b^3a^2", 4), "b[b^2a^2] - [b^3a]a - ca[b^3ca] - [b^2ca^2]cb - [c^4]b");
  EXPECT_EQ(cf("b^3ca^3", 5), "-[b^2a^3]cb - ac[b^3a^2] + [b^3ca^2]a + b[b^2ca^3] - 2a[c^5]b");
}

TEST(ClosedForm, BinomialCoefficientsGrow) {
  auto row = g23::closed_form_differential(parse_word("b^5ca^5"), 9);
  auto it = row.entries.find(Word(std::string(9, 'c')));
  ASSERT_NE(it, row.entries.end());
  EXPECT_EQ(it->second, BimoduleCoefficient(Word("a"), Word("b"), -6));
}

TEST(ClosedForm, DegreeMismatch) {
  EXPECT_THROW(g23::closed_form_differential(parse_word("bca"), 2), DegreeMismatch);
  EXPECT_THROW(g23::closed_form_differential(parse_word("a^2"), 0), DegreeMismatch);
  EXPECT_THROW(g23::closed_form_differential(parse_word("abc"), 2), NotAChain);
}

TEST(ClosedForm, DegreeZeroTable) {
  auto t = g23::closed_form_table(0);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(render(t.at(Word("b"))), "-[]b + b[]");
}

TEST(ClosedForm, ComposesToZero) {
  auto p = g23::presentation();
  NormalFormCache nf(p);
  for (int n = 1; n <= 10; ++n)
    EXPECT_TRUE(compose_vanishes(g23::closed_form_table(n), g23::closed_form_table(n - 1), nf)) << "n=" << n;
}

TEST(ClosedForm, AgreesWithMorseThroughDegree10) {
  MorseComplex mc(g23::presentation());
  for (int n = 0; n <= 10; ++n) {
    auto morse = mc.table(n);
    auto closed = g23::closed_form_table(n);
    ASSERT_EQ(morse.size(), closed.size());
    for (const auto& [w, row] : closed) {
      auto it = morse.find(w);
      ASSERT_NE(it, morse.end()) << render_word(w);
      EXPECT_EQ(it->second, row) << render_word(w) << ": " << render(it->second) << " vs " << render(row);
    }
  }
}

}  // namespace
}  // namespace anick
