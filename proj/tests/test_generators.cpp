#include <gtest/gtest.h>

#include "covernum/error.hpp"
#include "covernum/generators.hpp"
#include "covernum/io.hpp"
#include "covernum/recognizers.hpp"
#include "covernum/solver.hpp"

using namespace covernum;

TEST(Generators, BasicFamilies) {
  const Graph k4 = complete(4);
  EXPECT_EQ(k4.size(), 6U);
  EXPECT_EQ(chromatic_number(k4).chi, 4U);
  EXPECT_EQ(clique_number(k4).size, 4U);
  EXPECT_EQ(chromatic_number(cycle(5)).chi, 3U);
  EXPECT_EQ(clique_number(cycle(5)).size, 2U);
  const std::vector<std::size_t> two_two{2, 2};
  EXPECT_EQ(complete_multipartite(two_two), Graph::from_edges(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const std::vector<std::size_t> ones(5, 1);
  EXPECT_EQ(complete_multipartite(ones), complete(5));
  EXPECT_THROW(cycle(2), InvalidArgument);
  EXPECT_THROW(complete(65), CapacityError);
  const std::vector<std::size_t> huge{40, 30};
  EXPECT_THROW(complete_multipartite(huge), CapacityError);
}

TEST(Generators, Hypercubes) {
  for (std::size_t d = 1; d <= 6; ++d) {
    const Graph q = hypercube(d);
    EXPECT_EQ(q.order(), std::size_t{1} << d);
    EXPECT_EQ(q.size(), d << (d - 1));
    EXPECT_TRUE(is_bipartite(q).has_value());
    for (Vertex v = 0; v < q.order(); ++v) EXPECT_EQ(q.degree(v), d);
  }
  EXPECT_EQ(hypercube(1), complete(2));
  EXPECT_THROW(hypercube(7), CapacityError);
  EXPECT_THROW(hypercube(0), InvalidArgument);
}

TEST(Generators, Mycielski) {
  EXPECT_EQ(triangle_free_chromatic(2), complete(2));
  const Graph m3 = triangle_free_chromatic(3);
  EXPECT_EQ(m3.order(), 5U);
  EXPECT_EQ(m3.size(), 5U);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(m3.degree(v), 2U);
  const std::vector<std::size_t> orders{2, 5, 11, 23, 47};
  for (std::size_t c = 2; c <= 6; ++c) {
    const Graph g = triangle_free_chromatic(c);
    EXPECT_EQ(g.order(), orders[c - 2]);
    EXPECT_EQ(clique_number(g).size, 2U);
    if (c <= 5) EXPECT_EQ(chromatic_number(g).chi, c);
  }
  EXPECT_EQ(triangle_free_chromatic(4).size(), 20U);
  EXPECT_THROW(triangle_free_chromatic(7), CapacityError);
  EXPECT_THROW(mycielski_step(Graph(32)), CapacityError);
}

TEST(Generators, KKl) {
  const Graph g = kKl(2, 4);
  EXPECT_EQ(g.order(), 8U);
  EXPECT_EQ(g.size(), 12U);
  EXPECT_EQ(kKl(1, 6), complete(6));
  EXPECT_EQ(kKl(3, 1), Graph(3));
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t l = 1; l <= 8; ++l) {
      const Graph h = kKl(k, l);
      const auto w = is_unipolar(h);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(w->clique, 0U);
      EXPECT_EQ(chromatic_number(h).chi, l);
      EXPECT_EQ(clique_number(h).size, l);
    }
  }
  EXPECT_THROW(kKl(9, 8), CapacityError);
}

TEST(Generators, FarGraph) {
  const auto f12 = far_graph(1, 2);
  EXPECT_EQ(f12.graph.order(), 11U + 4U + 2U);
  EXPECT_EQ(f12.z_end, 11U);
  EXPECT_EQ(f12.k_end, 15U);
  EXPECT_EQ(chromatic_number(f12.graph).chi, 4U);
  EXPECT_EQ(clique_number(f12.graph).size, 4U);

  const auto f22 = far_graph(2, 2);
  EXPECT_EQ(f22.graph.order(), 26U);
  EXPECT_TRUE(is_chi_eq_omega(f22.graph).member);
  const VertexMask r = f22.graph.vertices() & ~first_vertices(f22.k_end);
  const Graph rk = f22.graph.induced(r);
  EXPECT_EQ(rk, triangle_free_chromatic(4));
  EXPECT_EQ(exact_cover_number(rk, ClassSpec::chi_eq_omega()).value, 2U);
  EXPECT_TRUE(is_chi_eq_omega(f22.graph.induced(first_vertices(f22.k_end))).member);

  EXPECT_THROW(far_graph(0, 2), InvalidArgument);
  EXPECT_THROW(far_graph(3, 2), InvalidArgument);
  EXPECT_THROW(far_graph(1, 3), CapacityError);
}

TEST(Generators, FamilyGrammar) {
  EXPECT_EQ(generate("complete:4"), complete(4));
  EXPECT_EQ(generate("cycle:5"), cycle(5));
  EXPECT_EQ(generate("multipartite:2,2"), complete_multipartite(std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(generate("hypercube:3"), hypercube(3));
  EXPECT_EQ(generate("mycielski:4"), triangle_free_chromatic(4));
  EXPECT_EQ(generate("kkl:2,4"), kKl(2, 4));
  EXPECT_EQ(generate("far:1,2"), far_graph(1, 2).graph);
  EXPECT_THROW(generate("star:3"), InvalidArgument);
  EXPECT_THROW(generate("complete:x"), InvalidArgument);
  EXPECT_THROW(generate("complete:99"), CapacityError);
}
