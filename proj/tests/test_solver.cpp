#include <gtest/gtest.h>

#include <map>
#include <random>

#include "covernum/error.hpp"
#include "covernum/generators.hpp"
#include "covernum/solver.hpp"
#include "oracles.hpp"

using namespace covernum;

namespace {

oracle::Member oracle_for(const ClassSpec& spec) {
  switch (spec.kind()) {
    case ClassSpec::Kind::bipartite:
      return [](const Graph& g) { return oracle::chi(g) <= 2; };
    case ClassSpec::Kind::chi_le:
      return [k = spec.k()](const Graph& g) { return oracle::chi(g) <= k; };
    case ClassSpec::Kind::chi_le_f:
      return [f = spec.f()](const Graph& g) { return oracle::chi(g) <= f(oracle::omega(g)); };
    case ClassSpec::Kind::chi_eq_omega:
      return [](const Graph& g) { return oracle::chi(g) == oracle::omega(g); };
    case ClassSpec::Kind::perfect:
      return [](const Graph& g) { return oracle::perfect(g); };
    case ClassSpec::Kind::unipolar:
      return [](const Graph& g) { return oracle::unipolar(g); };
    case ClassSpec::Kind::co_unipolar:
      return [](const Graph& g) { return oracle::co_unipolar(g); };
    case ClassSpec::Kind::gsp:
      return [](const Graph& g) { return oracle::unipolar(g) || oracle::co_unipolar(g); };
  }
  return {};
}

const std::vector<ClassSpec>& classes() {
  static const std::vector<ClassSpec> list{ClassSpec::bipartite(),
                                           ClassSpec::chi_le(3),
                                           ClassSpec::chi_le_f(FSpec::identity()),
                                           ClassSpec::chi_le_f(FSpec::plus(1)),
                                           ClassSpec::chi_eq_omega(),
                                           ClassSpec::perfect(),
                                           ClassSpec::unipolar(),
                                           ClassSpec::co_unipolar(),
                                           ClassSpec::gsp()};
  return list;
}

void expect_sound(const Graph& g, const ClassSpec& spec, const SolveResult& r) {
  EXPECT_EQ(r.witness.parts.size(), r.value);
  EXPECT_TRUE(check_certificate(g, r.witness)) << spec.to_string();
  const auto at = decide_cover(g, spec, r.value);
  ASSERT_TRUE(at.has_value());
  EXPECT_TRUE(check_certificate(g, *at));
  if (r.value > 0) EXPECT_FALSE(decide_cover(g, spec, r.value - 1).has_value());
}

}  // namespace

TEST(MaximalSubgraphs, Examples) {
  const auto k3 = maximal_class_subgraphs(complete(3), ClassSpec::bipartite());
  ASSERT_EQ(k3.size(), 3U);
  for (const auto& s : k3) EXPECT_EQ(s.count(), 2U);
  for (const auto& spec : classes()) {
    const auto k2 = maximal_class_subgraphs(complete(2), spec);
    ASSERT_EQ(k2.size(), 1U);
    EXPECT_EQ(k2[0].count(), 1U);
  }
  // C4 is unipolar: an edge as the clique leaves the opposite edge.
  const auto c4 = maximal_class_subgraphs(cycle(4), ClassSpec::unipolar());
  ASSERT_EQ(c4.size(), 1U);
  EXPECT_EQ(c4[0].count(), 4U);
}

TEST(ExactCover, Examples) {
  EXPECT_EQ(exact_cover_number(cycle(5), ClassSpec::bipartite()).value, 2U);
  EXPECT_EQ(exact_cover_number(complete(4), ClassSpec::chi_eq_omega()).value, 1U);
  EXPECT_EQ(exact_cover_number(kKl(2, 4), ClassSpec::co_unipolar()).value, 2U);
  EXPECT_EQ(exact_cover_number(Graph(4), ClassSpec::bipartite()).value, 0U);
  EXPECT_EQ(exact_cover_number(complete(4), ClassSpec::co_unipolar()).value, 1U);
  EXPECT_EQ(exact_cover_number(complete(4), ClassSpec::bipartite()).value, 2U);
  EXPECT_EQ(exact_cover_number(complete(5), ClassSpec::chi_le(2)).value, 3U);
}

TEST(ExactCover, HypercubeThree) {
  const Graph q3 = hypercube(3);
  EXPECT_EQ(max_class_subgraph_size(q3, ClassSpec::unipolar()), 8U);
  EXPECT_EQ(max_unipolar_subgraph_size(q3), 8U);
  EXPECT_EQ(oracle::max_member_size(q3, oracle::unipolar), 8U);
  const auto r = exact_cover_number(q3, ClassSpec::unipolar());
  EXPECT_EQ(r.value, oracle::cover_number(q3, oracle::unipolar));
  expect_sound(q3, ClassSpec::unipolar(), r);
  EXPECT_TRUE(decide_cover(q3, ClassSpec::unipolar(), 3).has_value());
}

TEST(ExactCover, DecideExamples) {
  EXPECT_FALSE(decide_cover(cycle(5), ClassSpec::bipartite(), 1).has_value());
  EXPECT_TRUE(decide_cover(cycle(5), ClassSpec::bipartite(), 2).has_value());
  EXPECT_TRUE(decide_cover(cycle(5), ClassSpec::bipartite(), 7).has_value());
}

TEST(MaxSubgraph, Examples) {
  EXPECT_EQ(max_class_subgraph_size(complete(4), ClassSpec::bipartite()), 4U);
  EXPECT_EQ(max_class_subgraph_size(cycle(5), ClassSpec::bipartite()), 4U);
  EXPECT_EQ(max_class_subgraph_size(complete(6), ClassSpec::unipolar()), 15U);
  EXPECT_EQ(max_class_subgraph_size(hypercube(3), ClassSpec::bipartite()), 12U);
}

TEST(MaxSubgraph, StructuralAgreesWithEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::from_code(5 + rng() % 3, rng());
    if (g.size() > 16) continue;
    EXPECT_EQ(max_unipolar_subgraph_size(g), oracle::max_member_size(g, oracle::unipolar));
  }
  const auto q4 = max_unipolar_subgraph_size(hypercube(4));
  EXPECT_LE(q4, unipolar_subgraph_bound(4));
}

TEST(ExactCover, AgreesWithOracleUpToFour) {
  for (const auto& spec : classes()) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const oracle::MembershipTable table(n, oracle_for(spec));
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << oracle::pair_count(n)); ++code) {
        const Graph g = oracle::from_code(n, code);
        const auto r = exact_cover_number(g, spec);
        ASSERT_EQ(r.value, table.cover_number(code)) << spec.to_string() << " n" << n << "#" << code;
        expect_sound(g, spec, r);
      }
    }
  }
}

TEST(ExactCover, AgreesWithOracleOnFive) {
  std::mt19937_64 rng(17);
  std::vector<std::uint64_t> codes;
  for (int i = 0; i < 60; ++i) codes.push_back(rng() & 1023);
  codes.push_back(1023);
  for (const auto& spec : classes()) {
    const oracle::MembershipTable table(5, oracle_for(spec));
    for (auto code : codes) {
      const Graph g = oracle::from_code(5, code);
      const auto r = exact_cover_number(g, spec);
      ASSERT_EQ(r.value, table.cover_number(code)) << spec.to_string() << " #" << code;
      EXPECT_TRUE(check_certificate(g, r.witness));
    }
  }
}

TEST(ExactCover, DeterministicWitness) {
  const Graph g = triangle_free_chromatic(4);
  const auto a = exact_cover_number(g, ClassSpec::bipartite());
  const auto b = exact_cover_number(g, ClassSpec::bipartite());
  ASSERT_EQ(a.witness.parts.size(), b.witness.parts.size());
  for (std::size_t i = 0; i < a.witness.parts.size(); ++i) EXPECT_EQ(a.witness.parts[i], b.witness.parts[i]);
}

TEST(ExactCover, Budgets) {
  EXPECT_THROW(exact_cover_number(complete(8), ClassSpec::bipartite()), BudgetExceeded);
  SolveBudget small;
  small.max_edges = 5;
  EXPECT_THROW(exact_cover_number(complete(4), ClassSpec::bipartite(), small), BudgetExceeded);
  SolveBudget shallow;
  shallow.max_k = 1;
  EXPECT_THROW(exact_cover_number(complete(4), ClassSpec::bipartite(), shallow), BudgetExceeded);
  EXPECT_THROW(exact_cover_number(complete(3), ClassSpec::chi_le(1)), InvalidArgument);
}
