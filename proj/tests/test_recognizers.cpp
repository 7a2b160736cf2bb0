#include <gtest/gtest.h>

#include <random>

#include "covernum/error.hpp"
#include "covernum/generators.hpp"
#include "covernum/recognizers.hpp"
#include "oracles.hpp"

using namespace covernum;

namespace {

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

const std::vector<ClassSpec>& all_classes() {
  static const std::vector<ClassSpec> classes{
      ClassSpec::bipartite(),        ClassSpec::chi_le(1),
      ClassSpec::chi_le(2),          ClassSpec::chi_le(3),
      ClassSpec::chi_le_f(FSpec::identity()), ClassSpec::chi_le_f(FSpec::plus(1)),
      ClassSpec::chi_le_f(FSpec::constant(2)), ClassSpec::chi_eq_omega(),
      ClassSpec::perfect(),          ClassSpec::unipolar(),
      ClassSpec::co_unipolar(),      ClassSpec::gsp()};
  return classes;
}

bool oracle_member(const Graph& g, const ClassSpec& spec) {
  switch (spec.kind()) {
    case ClassSpec::Kind::bipartite:
      return oracle::chi(g) <= 2;
    case ClassSpec::Kind::chi_le:
      return oracle::chi(g) <= spec.k();
    case ClassSpec::Kind::chi_le_f:
      return oracle::chi(g) <= spec.f()(oracle::omega(g));
    case ClassSpec::Kind::chi_eq_omega:
      return oracle::chi(g) == oracle::omega(g);
    case ClassSpec::Kind::perfect:
      return oracle::perfect(g);
    case ClassSpec::Kind::unipolar:
      return oracle::unipolar(g);
    case ClassSpec::Kind::co_unipolar:
      return oracle::co_unipolar(g);
    case ClassSpec::Kind::gsp:
      return oracle::unipolar(g) || oracle::co_unipolar(g);
  }
  return false;
}

}  // namespace

TEST(Bipartite, Examples) {
  EXPECT_TRUE(is_bipartite(cycle(6)).has_value());
  EXPECT_FALSE(is_bipartite(cycle(5)).has_value());
  EXPECT_TRUE(is_bipartite(Graph(3)).has_value());
  const auto w = is_bipartite(hypercube(4));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(check_witness(hypercube(4), ClassSpec::bipartite(), ClassWitness{*w}));
}

TEST(Cluster, Examples) {
  EXPECT_TRUE(is_cluster(kKl(2, 3)));
  EXPECT_FALSE(is_cluster(path(3)));
  EXPECT_TRUE(is_cluster(Graph(1)));
}

TEST(Unipolar, Examples) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_unipolar(complete(n)).has_value());
  EXPECT_FALSE(is_unipolar(cycle(5)).has_value());
  const auto w = is_unipolar(kKl(3, 4));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->clique, 0U);
  EXPECT_EQ(w->clusters.size(), 3U);
}

TEST(CoUnipolar, Examples) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto w = is_co_unipolar(complete(n));
    ASSERT_TRUE(w.has_value()) << n;
    EXPECT_TRUE(check_witness(complete(n), ClassSpec::co_unipolar(), ClassWitness{*w}));
  }
  EXPECT_TRUE(is_co_unipolar(hypercube(3)).has_value());
  EXPECT_TRUE(is_co_unipolar(cycle(6)).has_value());
  EXPECT_FALSE(is_gsp(cycle(5)).has_value());
}

TEST(ChiOmega, Examples) {
  EXPECT_TRUE(is_chi_eq_omega(path(4)).member);
  EXPECT_FALSE(is_chi_eq_omega(cycle(5)).member);
  EXPECT_TRUE(is_chi_eq_omega(complete(5)).member);
  EXPECT_FALSE(is_chi_le_f(cycle(5), FSpec::identity()).member);
  EXPECT_TRUE(is_chi_le_f(cycle(5), FSpec::plus(1)).member);
  EXPECT_FALSE(is_chi_le_f(complete(4), FSpec::constant(2)).member);
  const auto v = is_chi_le_f(cycle(5), FSpec::plus(1));
  EXPECT_EQ(v.chi, 3U);
  EXPECT_EQ(v.omega, 2U);
  EXPECT_EQ(v.bound, 3U);
}

TEST(Perfect, Examples) {
  const auto c5 = is_perfect(cycle(5));
  EXPECT_FALSE(c5.perfect);
  ASSERT_TRUE(c5.obstruction.has_value());
  EXPECT_FALSE(c5.obstruction->antihole);
  EXPECT_EQ(c5.obstruction->cycle, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_perfect(cycle(6)).perfect);
  const Graph anti7 = complement(cycle(7));
  const auto a7 = is_perfect(anti7);
  EXPECT_FALSE(a7.perfect);
  ASSERT_TRUE(a7.obstruction.has_value());
  EXPECT_TRUE(a7.obstruction->antihole);
  EXPECT_TRUE(check_obstruction(anti7, *a7.obstruction));
  EXPECT_FALSE(check_obstruction(cycle(6), OddHole{false, {0, 1, 2, 3, 4}}));
  EXPECT_THROW(is_perfect(Graph(27)), BudgetExceeded);
}

TEST(InClass, Examples) {
  EXPECT_TRUE(in_class(complete(4), ClassSpec::chi_eq_omega()).has_value());
  EXPECT_FALSE(in_class(cycle(5), ClassSpec::gsp()).has_value());
  EXPECT_TRUE(in_class(kKl(2, 4), ClassSpec::unipolar()).has_value());
}

TEST(Witness, ForgedWitnessesRejected) {
  const Graph c5 = cycle(5);
  EXPECT_FALSE(check_witness(c5, ClassSpec::bipartite(), ClassWitness{Bipartition{0b00101}}));
  EXPECT_FALSE(check_witness(c5, ClassSpec::unipolar(), ClassWitness{SplitWitness{false, 0b11, {0b11100}}}));
  EXPECT_FALSE(check_witness(complete(3), ClassSpec::chi_le(2),
                             ClassWitness{ChromaticWitness{Coloring{{0, 1, 1}, 2}, CliqueWitness{0b011, 2}, 2}}));
}

TEST(Recognizers, AgreeWithOraclesUpToFive) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << oracle::pair_count(n)); ++code) {
      const Graph g = oracle::from_code(n, code);
      for (const auto& spec : all_classes()) {
        const auto witness = in_class(g, spec);
        ASSERT_EQ(witness.has_value(), oracle_member(g, spec)) << spec.to_string() << " n" << n << "#" << code;
        ASSERT_EQ(is_member(g, spec), witness.has_value());
        if (witness) EXPECT_TRUE(check_witness(g, spec, *witness)) << spec.to_string() << " #" << code;
      }
      const auto verdict = is_perfect(g);
      if (!verdict.perfect) {
        ASSERT_TRUE(verdict.obstruction.has_value());
        EXPECT_TRUE(check_obstruction(g, *verdict.obstruction));
      }
    }
  }
}

TEST(Recognizers, AgreeWithOraclesRandomSeven) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::from_code(7, rng());
    for (const auto& spec : all_classes()) {
      const auto witness = in_class(g, spec);
      EXPECT_EQ(witness.has_value(), oracle_member(g, spec)) << spec.to_string();
      if (witness) EXPECT_TRUE(check_witness(g, spec, *witness));
    }
  }
}

TEST(Recognizers, InclusionsPointwise) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::from_code(4 + rng() % 5, rng());
    const bool bip = is_member(g, ClassSpec::bipartite());
    const bool cou = is_member(g, ClassSpec::co_unipolar());
    const bool gsp = is_member(g, ClassSpec::gsp());
    const bool per = is_member(g, ClassSpec::perfect());
    const bool ceo = is_member(g, ClassSpec::chi_eq_omega());
    EXPECT_TRUE(!bip || cou);
    EXPECT_TRUE(!cou || gsp);
    EXPECT_TRUE(!gsp || per);
    EXPECT_TRUE(!per || ceo);
    EXPECT_TRUE(!is_member(g, ClassSpec::chi_le(3)) || is_member(g, ClassSpec::chi_le_f(FSpec::constant(3))));
  }
}

TEST(Components, SplitsCorrectly) {
  const auto parts = components(kKl(3, 2), 0b111111);
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], VertexMask{0b11});
  EXPECT_EQ(parts[2], VertexMask{0b110000});
}
