#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace covernum {

inline constexpr std::size_t kMaxVertices = 64;

using Vertex = std::uint32_t;
using VertexMask = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr VertexMask vertex_bit(Vertex v) noexcept { return VertexMask{1} << v; }

constexpr VertexMask first_vertices(std::size_t n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Calls f(v) for every vertex v in the mask, in increasing order.
template <class F>
constexpr void for_each_vertex(VertexMask mask, F&& f) {
  while (mask != 0) {
    f(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(std::span<const Vertex> vertices);

/// Simple undirected graph on vertices 0..n-1 with n <= 64. Each adjacency
/// row is one machine word. Immutable once constructed.
class Graph {
 public:
  using Rows = std::array<VertexMask, kMaxVertices>;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Duplicate pairs collapse; (u,v) and (v,u) are the same edge.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  /// Rows beyond n must be zero. Throws unless symmetric and irreflexive.
  static Graph from_rows(std::size_t n, const Rows& rows);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  VertexMask vertices() const noexcept { return first_vertices(n_); }
  VertexMask neighbors(Vertex v) const noexcept { return adj_[v]; }
  const Rows& rows() const noexcept { return adj_; }
  bool adjacent(Vertex u, Vertex v) const noexcept { return (adj_[u] >> v) & 1U; }
  std::size_t degree(Vertex v) const noexcept { return std::popcount(adj_[v]); }

  /// Lexicographically sorted, u < v.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `keep`, relabeled to 0..|keep|-1 in increasing order.
  Graph induced(VertexMask keep) const;

  bool is_clique(VertexMask set) const noexcept;
  bool is_independent(VertexMask set) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  Rows adj_{};
};

Graph complement(const Graph& g);
/// Blocks are relabeled consecutively in list order.
Graph disjoint_union(std::span<const Graph> parts);

}  // namespace covernum
