#include <gtest/gtest.h>

#include <random>

#include "covernum/classes.hpp"
#include "covernum/error.hpp"
#include "covernum/generators.hpp"
#include "covernum/invariants.hpp"
#include "covernum/io.hpp"
#include "oracles.hpp"

using namespace covernum;

namespace {

const char* const kPetersen = "IheA@GUAo";

void expect_witnesses(const Graph& g) {
  const auto chi = chromatic_number(g);
  EXPECT_TRUE(is_proper(g, chi.coloring));
  EXPECT_EQ(chi.coloring.count, chi.chi);
  const auto omega = clique_number(g);
  EXPECT_TRUE(g.is_clique(omega.witness.vertices));
  EXPECT_EQ(static_cast<std::size_t>(std::popcount(omega.witness.vertices)), omega.size);
  EXPECT_LE(omega.size, chi.chi);
  EXPECT_LE(chi.chi, g.order());
}

}  // namespace

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(clique_number(cycle(5)).size, 2U);
  EXPECT_EQ(clique_number(complete(7)).size, 7U);
  EXPECT_EQ(clique_number(hypercube(3)).size, 2U);
  EXPECT_EQ(clique_number(Graph(0)).size, 0U);
  EXPECT_EQ(clique_number(Graph(3)).size, 1U);
}

TEST(CliqueNumber, LowestWitness) {
  // Two triangles {1,2,3} and {0,4,5}; the lexicographically smallest is {0,4,5}.
  const Graph g = Graph::from_edges(6, std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}});
  EXPECT_EQ(clique_number(g).witness.vertices, VertexMask{0b110001});
}

TEST(KColorable, Examples) {
  EXPECT_FALSE(is_k_colorable(cycle(5), 2).has_value());
  const auto three = is_k_colorable(cycle(5), 3);
  ASSERT_TRUE(three.has_value());
  EXPECT_TRUE(is_proper(cycle(5), *three));
  const auto one = is_k_colorable(Graph(4), 1);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->colors, std::vector<std::uint32_t>(4, 0));
  EXPECT_FALSE(is_k_colorable(Graph(1), 0).has_value());
}

TEST(ChromaticNumber, Examples) {
  const Graph petersen = parse_graph6(kPetersen);
  EXPECT_EQ(chromatic_number(petersen).chi, 3U);
  EXPECT_FALSE(is_k_colorable(petersen, 2).has_value());
  EXPECT_EQ(chromatic_number(triangle_free_chromatic(4)).chi, 4U);
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(chromatic_number(complete(n)).chi, n);
  EXPECT_EQ(chromatic_number(Graph(0)).chi, 0U);
  EXPECT_EQ(chromatic_number(Graph(5)).chi, 1U);
  expect_witnesses(petersen);
  expect_witnesses(triangle_free_chromatic(5));
}

TEST(Invariants, AgreeWithBruteForceUpToSix) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint64_t count = std::uint64_t{1} << oracle::pair_count(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const Graph g = oracle::from_code(n, code);
      ASSERT_EQ(chromatic_number(g).chi, oracle::chi(g)) << n << "#" << code;
      ASSERT_EQ(clique_number(g).size, oracle::omega(g)) << n << "#" << code;
    }
  }
}

TEST(Invariants, RandomLargerGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 7 + rng() % 6;
    const Graph g = oracle::from_code(n, rng());
    EXPECT_EQ(chromatic_number(g).chi, oracle::chi(g));
    EXPECT_EQ(clique_number(g).size, oracle::omega(g));
    expect_witnesses(g);
  }
}

TEST(CeilLog, Examples) {
  EXPECT_EQ(ceil_log(2, 4), 2U);
  EXPECT_EQ(ceil_log(3, 10), 3U);
  EXPECT_EQ(ceil_log(2, 1), 0U);
  EXPECT_EQ(ceil_log(2, 3), 2U);
  EXPECT_THROW(ceil_log(1, 4), InvalidArgument);
  EXPECT_THROW(ceil_log(2, 0), InvalidArgument);
  EXPECT_EQ(ceil_log(2, ~std::uint64_t{0}), 64U);
}

TEST(CeilLog, DefiningIdentity) {
  for (std::uint64_t b = 2; b <= 40; ++b) {
    for (std::uint64_t a = 1; a <= 3000; ++a) {
      const auto t = ceil_log(b, a);
      unsigned __int128 p = 1;
      for (std::size_t i = 0; i < t; ++i) p *= b;
      EXPECT_GE(p, a);
      if (t > 0) EXPECT_LT(p / b, a);
    }
  }
}

TEST(CeilLog, ExactPowers) {
  for (std::uint64_t b = 2; b <= 100; ++b) {
    std::uint64_t p = 1;
    for (std::size_t t = 0;; ++t) {
      EXPECT_EQ(ceil_log(b, p), t);
      if (p > (std::uint64_t{1} << 62) / b) break;
      p *= b;
    }
  }
}

TEST(FSpec, FormsAndParsing) {
  EXPECT_EQ(FSpec::identity()(5), 5U);
  EXPECT_EQ(FSpec::plus(1)(5), 6U);
  EXPECT_EQ(FSpec::power(2)(5), 25U);
  EXPECT_EQ(FSpec::constant(3)(5), 3U);
  EXPECT_TRUE(FSpec::power(2).majorizes_identity());
  EXPECT_FALSE(FSpec::constant(3).majorizes_identity());
  EXPECT_EQ(FSpec::parse("plus:2"), FSpec::plus(2));
  EXPECT_EQ(FSpec::parse("pow:3"), FSpec::power(3));
  EXPECT_EQ(FSpec::parse("const:2"), FSpec::constant(2));
  EXPECT_EQ(FSpec::parse("identity").to_string(), "identity");
  EXPECT_THROW(FSpec::parse("sqrt"), InvalidArgument);
  EXPECT_THROW(FSpec::parse("pow:0"), InvalidArgument);
  EXPECT_THROW(FSpec::parse("const:0"), InvalidArgument);
  EXPECT_THROW(FSpec::table({3, 2, 4}), InvalidArgument);
  const FSpec table = FSpec::table({1, 3, 3});
  EXPECT_EQ(table(2), 3U);
  EXPECT_TRUE(table.defined_at(3));
  EXPECT_FALSE(table.defined_at(4));
  EXPECT_THROW(table(4), InvalidArgument);
}

TEST(ClassSpec, GrammarRoundTrip) {
  for (const char* text : {"bipartite", "chi-le:3", "chi-le-f:identity", "chi-le-f:plus:1", "chi-le-f:pow:2",
                           "chi-le-f:const:3", "chi-eq-omega", "perfect", "unipolar", "co-unipolar", "gsp"}) {
    EXPECT_EQ(ClassSpec::parse(text).to_string(), text);
  }
  EXPECT_THROW(ClassSpec::parse("chi-le:0"), InvalidArgument);
  EXPECT_THROW(ClassSpec::parse("planar"), InvalidArgument);
  EXPECT_THROW(ClassSpec::parse("chi-le:x"), InvalidArgument);
}
