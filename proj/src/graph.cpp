#include "covernum/graph.hpp"

#include <string>

#include "covernum/error.hpp"

namespace covernum {

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(std::popcount(mask));
  for_each_vertex(mask, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) {
    if (v >= kMaxVertices) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    mask |= vertex_bit(v);
  }
  return mask;
}

Graph::Graph(std::size_t n) : n_(n) {
  if (n > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; at most 64 supported");
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has a vertex out of range for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u] |= vertex_bit(e.v);
    g.adj_[e.v] |= vertex_bit(e.u);
  }
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) degree_sum += std::popcount(g.adj_[v]);
  g.m_ = degree_sum / 2;
  return g;
}

Graph Graph::from_rows(std::size_t n, const Rows& rows) {
  Graph g(n);
  const VertexMask universe = first_vertices(n);
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < kMaxVertices; ++u) {
    const VertexMask row = rows[u];
    if (u >= n) {
      if (row != 0) throw InvalidArgument("adjacency row beyond vertex count is non-empty");
      continue;
    }
    if ((row & ~universe) != 0) throw InvalidArgument("adjacency references a vertex out of range");
    if ((row >> u) & 1U) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    for_each_vertex(row, [&](Vertex v) {
      if (((rows[v] >> u) & 1U) == 0) throw InvalidArgument("adjacency is not symmetric");
    });
    degree_sum += std::popcount(row);
  }
  g.adj_ = rows;
  g.m_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~first_vertices(u + 1), [&](Vertex v) { out.push_back({u, v}); });
  }
  return out;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertices();
  const auto kept = mask_to_vertices(keep);
  Rows rows{};
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (adjacent(kept[i], kept[j])) rows[i] |= vertex_bit(static_cast<Vertex>(j));
    }
  }
  return from_rows(kept.size(), rows);
}

bool Graph::is_clique(VertexMask set) const noexcept {
  VertexMask rest = set;
  while (rest != 0) {
    const auto v = static_cast<Vertex>(std::countr_zero(rest));
    rest &= rest - 1;
    if ((adj_[v] & rest) != rest) return false;
  }
  return true;
}

bool Graph::is_independent(VertexMask set) const noexcept {
  bool ok = true;
  for_each_vertex(set, [&](Vertex v) { ok = ok && (adj_[v] & set) == 0; });
  return ok;
}

Graph complement(const Graph& g) {
  Graph::Rows rows{};
  const VertexMask universe = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = universe & ~g.neighbors(v) & ~vertex_bit(v);
  return Graph::from_rows(g.order(), rows);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t total = 0;
  for (const Graph& p : parts) total += p.order();
  if (total > kMaxVertices) {
    throw CapacityError("disjoint union needs " + std::to_string(total) + " vertices; at most 64 supported");
  }
  Graph::Rows rows{};
  std::size_t offset = 0;
  for (const Graph& p : parts) {
    for (Vertex v = 0; v < p.order(); ++v) rows[offset + v] = p.neighbors(v) << offset;
    offset += p.order();
  }
  return Graph::from_rows(total, rows);
}

}  // namespace covernum
