#include <sstream>

#include <gtest/gtest.h>

#include "anick/g23.hpp"
#include "anick/morse.hpp"
#include "test_support.hpp"

namespace anick {
namespace {

BarVertex vertex(const std::string& text) {
  BarVertex v;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    v.factors.push_back(parse_word(text.substr(start, bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return v;
}

ChainElement chain(const char* w) {
  static const ObstructionSet v(g23::presentation());
  return chain_factorization(parse_word(w), v);
}

BimoduleCoefficient coef(std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
  BimoduleCoefficient out;
  for (const auto& [l, r, c] : terms) out.add(Word(l), Word(r), c);
  return out;
}

const BarEdge* edge_to(const std::vector<BarEdge>& edges, const BarVertex& t) {
  for (const auto& e : edges)
    if (e.target == t) return &e;
  return nullptr;
}

TEST(BarEdges, SquareOfGenerator) {
  auto edges = bar_edges(vertex("a|a"), g23::presentation());
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].target, vertex("a"));
  EXPECT_EQ(edges[0].weight, coef({{"a", "", 1}, {"", "a", 1}}));
}

TEST(BarEdges, InteriorReduction) {
  auto edges = bar_edges(vertex("b|ca"), g23::presentation());
  ASSERT_EQ(edges.size(), 3u);
  ASSERT_NE(edge_to(edges, vertex("acb")), nullptr);
  EXPECT_EQ(edge_to(edges, vertex("acb"))->weight, coef({{"", "", -1}}));
  EXPECT_EQ(edge_to(edges, vertex("ca"))->weight, coef({{"b", "", 1}}));
  EXPECT_EQ(edge_to(edges, vertex("b"))->weight, coef({{"", "ca", 1}}));
}

TEST(BarEdges, DegreeOneSigns) {
  auto edges = bar_edges(vertex("c"), g23::presentation());
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_TRUE(edges[0].target.factors.empty());
  EXPECT_EQ(edges[0].weight, coef({{"c", "", 1}, {"", "c", -1}}));
}

TEST(BarEdges, ThreeFactorSigns) {
  // [b|a|a]: head +1, tail (-1)^3, interior ba -> cabc with sign -1, aa -> 1 dropped.
  auto edges = bar_edges(vertex("b|a|a"), g23::presentation());
  ASSERT_EQ(edges.size(), 3u);
  EXPECT_EQ(edge_to(edges, vertex("a|a"))->weight, coef({{"b", "", 1}}));
  EXPECT_EQ(edge_to(edges, vertex("b|a"))->weight, coef({{"", "a", -1}}));
  EXPECT_EQ(edge_to(edges, vertex("cabc|a"))->weight, coef({{"", "", -1}}));
}

TEST(Classify, Examples) {
  auto p = g23::presentation();
  EXPECT_TRUE(classify_vertex(vertex("b|ca"), p).critical());
  EXPECT_TRUE(classify_vertex(vertex("b|ca|a"), p).critical());
  EXPECT_TRUE(classify_vertex(vertex("c"), p).critical());

  auto acb = classify_vertex(vertex("acb"), p);
  EXPECT_EQ(acb.kind, MatchInfo::Kind::matched_to_finer);
  EXPECT_EQ(acb.partner, vertex("a|cb"));
  EXPECT_EQ(acb.weight, Scalar(1));

  auto a_cb = classify_vertex(vertex("a|cb"), p);
  EXPECT_EQ(a_cb.kind, MatchInfo::Kind::matched_to_coarser);
  EXPECT_EQ(a_cb.partner, vertex("acb"));
  EXPECT_EQ(a_cb.weight, Scalar(-1));

  auto c_a = classify_vertex(vertex("c|a"), p);
  EXPECT_EQ(c_a.kind, MatchInfo::Kind::matched_to_coarser);
  EXPECT_EQ(c_a.partner, vertex("ca"));

  auto b_c_a = classify_vertex(vertex("b|c|a"), p);
  EXPECT_EQ(b_c_a.kind, MatchInfo::Kind::matched_to_coarser);
  EXPECT_EQ(b_c_a.partner, vertex("bc|a"));
  EXPECT_EQ(classify_vertex(vertex("bc|a"), p).partner, vertex("b|c|a"));
}

TEST(Classify, RejectsInvalidVertices) {
  auto p = g23::presentation();
  EXPECT_THROW(classify_vertex(vertex("aa|b"), p), Error);
}

// Every vertex of small total length: critical exactly on chain factorizations,
// and matched vertices reciprocate.
TEST(Classify, ExhaustiveSmallVertices) {
  auto p = g23::presentation();
  ObstructionSet obs(p);
  NormalFormCache nf(p);
  std::vector<std::string> reduced;
  for (const auto& s : testing::all_words("abc", 1, 6))
    if (obs.is_reduced(Word(s))) reduced.push_back(s);
  std::size_t checked = 0;
  std::function<void(BarVertex&, std::size_t)> rec = [&](BarVertex& v, std::size_t len) {
    if (!v.factors.empty()) {
      auto info = classify_vertex(v, obs, nf);
      auto c = try_chain_factorization(v.word(), obs);
      bool is_chain = c && c->factors == v.factors;
      ASSERT_EQ(info.critical(), is_chain) << render(v);
      if (!info.critical()) {
        auto back = classify_vertex(info.partner, obs, nf);
        ASSERT_EQ(back.partner, v) << render(v);
        ASSERT_NE(back.kind, info.kind) << render(v);
      }
      ++checked;
    }
    for (const auto& s : reduced) {
      if (len + s.size() > 6) continue;
      v.factors.push_back(Word(s));
      rec(v, len + s.size());
      v.factors.pop_back();
    }
  };
  BarVertex v;
  rec(v, 0);
  EXPECT_GT(checked, 1000u);
}

TEST(Differential, DegreeOneExamples) {
  auto p = g23::presentation();
  EXPECT_EQ(render(anick_differential(chain("bca"), p)), "-[a]cb + bc[a] + [b]ca - ac[b] - a[c]b + b[c]a");
  EXPECT_EQ(render(anick_differential(chain("a^2"), p)), "[a]a + a[a]");
  EXPECT_EQ(render(anick_differential(chain("ba"), p)), "b[a] - c[a]bc + [b]a - ca[b]c - [c]abc - cab[c]");
  EXPECT_EQ(render(anick_differential(chain("c"), p)), "-[]c + c[]");
}

TEST(Differential, DegreeTwoExamples) {
  MorseComplex mc(g23::presentation());
  EXPECT_EQ(render(mc.differential(chain("bca^2"))), "-[a^2]bc + bc[a^2] - ac[ba] - [bca]a - a[c^2]abc");
  EXPECT_EQ(render(mc.differential(chain("a^3"))), "-[a^2]a + a[a^2]");
  EXPECT_EQ(render(mc.differential(chain("b^2a"))), "b[ba] - [b^2]a + ac[b^2]c + [bca]bc + a[c^2]");
  EXPECT_EQ(render(mc.differential(chain("ba^2"))), "b[a^2] - c[a^2]cb - [ba]a - ca[bca] - [c^2]b");
  EXPECT_EQ(render(mc.differential(chain("b^2ca"))), "[ba]cb - [b^2]ca + ca[b^2] + b[bca] + cab[c^2]b");
}

TEST(Differential, NonCriticalStartIsRejected) {
  MorseComplex mc(g23::presentation());
  ChainElement fake{Word("acb"), 0, {Word("acb")}};
  EXPECT_THROW(mc.differential(fake), NotAChain);
}

TEST(Differential, DepthBudget) {
  MorseComplex tight(g23::presentation(), 1);
  EXPECT_THROW(tight.differential(chain("bca^3")), DepthBudgetExceeded);
  MorseComplex enough(g23::presentation());
  EXPECT_NO_THROW(enough.differential(chain("bca^3")));
}

TEST(Differential, ComposesToZero) {
  MorseComplex mc(g23::presentation());
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(compose_check(n, mc)) << "n=" << n;
}

TEST(Differential, ComposeDetectsBrokenTable) {
  MorseComplex mc(g23::presentation());
  auto upper = mc.table(2);
  auto lower = mc.table(1);
  EXPECT_TRUE(compose_vanishes(upper, lower, mc.normal_forms()));
  upper.begin()->second.add(Word("aa"), BimoduleCoefficient(Word("b"), Word{}, 1));
  EXPECT_FALSE(compose_vanishes(upper, lower, mc.normal_forms()));
}

TEST(Differential, OtherPresentation) {
  // k<x> / (x^2): every chain is x^{n+1} and d alternates between x[]+[]x and x[]-[]x.
  Presentation p(Alphabet("x"), {{Word("xx"), NCPolynomial()}});
  MorseComplex mc(p);
  for (int n = 1; n <= 5; ++n) {
    auto chains = enumerate_chains(n, mc.obstructions());
    ASSERT_EQ(chains.size(), 1u);
    auto row = mc.differential(chains[0]);
    Word target(std::string(n, 'x'));
    DifferentialRow expect{chains[0], {}};
    expect.add(target, BimoduleCoefficient(Word("x"), Word{}, 1));
    expect.add(target, BimoduleCoefficient(Word{}, Word("x"), n % 2 == 0 ? -1 : 1));
    EXPECT_EQ(row, expect) << "n=" << n;
    EXPECT_TRUE(compose_check(n, mc));
  }
}

TEST(Audit, CleanAfterDegreeSix) {
  MorseComplex mc(g23::presentation());
  for (int n = 0; n <= 6; ++n) mc.table(n);
  auto audit = mc.audit();
  EXPECT_TRUE(audit.ok()) << (audit.violations.empty() ? "" : audit.violations.front());
  EXPECT_GT(audit.vertices, 0u);
  EXPECT_LE(audit.critical + audit.matched_pairs, audit.vertices);
}

TEST(Dot, MarksCriticalAndReversedEdges) {
  MorseComplex mc(g23::presentation());
  ExploredGraph g;
  mc.set_trace(&g);
  mc.differential(chain("bca"));
  mc.set_trace(nullptr);
  std::ostringstream os;
  write_dot(os, g);
  auto dot = os.str();
  EXPECT_EQ(dot.rfind("digraph morse {", 0), 0u);
  EXPECT_NE(dot.find("[label=\"[b|ca]\", shape=box]"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"[acb]\", shape=plaintext]"), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
}

}  // namespace
}  // namespace anick
