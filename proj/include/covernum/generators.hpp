#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covernum/graph.hpp"

namespace covernum {

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> parts);
/// Vertices are the integers 0..2^d-1; edges join words at Hamming distance 1.
Graph hypercube(std::size_t d);

/// Mycielskian: vertices 0..n-1 original, n..2n-1 shadows, 2n the apex.
Graph mycielski_step(const Graph& g);
/// K2 followed by chi-2 Mycielski steps: triangle-free with chromatic number chi.
Graph triangle_free_chromatic(std::size_t chi);
/// k disjoint copies of K_l.
Graph kKl(std::size_t k, std::size_t l);

/// Components in order (Z, K, R): triangle_free_chromatic(2^l), K_{2^l},
/// triangle_free_chromatic(2^k). Needs 1 <= k <= l.
struct FarGraph {
  Graph graph;
  std::size_t z_end = 0;  // vertices [0, z_end) form Z
  std::size_t k_end = 0;  // vertices [z_end, k_end) form K; the rest form R
};
FarGraph far_graph(std::size_t k, std::size_t l);

/// complete:<n> | cycle:<n> | multipartite:<a,b,...> | hypercube:<d> |
/// mycielski:<chi> | kkl:<k>,<l> | far:<k>,<l>
Graph generate(std::string_view family);

}  // namespace covernum
