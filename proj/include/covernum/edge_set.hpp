#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "covernum/graph.hpp"

namespace covernum {

using EdgeId = std::size_t;

/// Canonical numbering of a graph's edges: lexicographic order of (u,v), u < v.
class EdgeIndex {
 public:
  static std::shared_ptr<const EdgeIndex> of(const Graph& g);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::optional<EdgeId> find(Vertex u, Vertex v) const noexcept;
  /// Throws InvalidArgument when uv is not an edge of the host.
  EdgeId id(Vertex u, Vertex v) const;

  explicit EdgeIndex(const Graph& g);

 private:
  Graph graph_;
  std::vector<Edge> edges_;
  std::vector<std::int16_t> ids_;  // n*n table, -1 for non-edges
};

using EdgeIndexPtr = std::shared_ptr<const EdgeIndex>;

/// Subset of a host graph's edges, as a bitset over its EdgeIndex.
class EdgeSet {
 public:
  static EdgeSet none(EdgeIndexPtr host);
  static EdgeSet all(EdgeIndexPtr host);
  static EdgeSet from_ids(EdgeIndexPtr host, std::span<const EdgeId> ids);
  static EdgeSet from_edges(EdgeIndexPtr host, std::span<const Edge> edges);
  /// Bit i of `mask` selects edge id i. Requires at most 64 host edges.
  static EdgeSet from_mask(EdgeIndexPtr host, std::uint64_t mask);

  const EdgeIndex& host() const noexcept { return *host_; }
  const EdgeIndexPtr& host_ptr() const noexcept { return host_; }
  bool same_host(const EdgeSet& other) const noexcept;

  bool contains(EdgeId id) const noexcept;
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<EdgeId> ids() const;
  std::vector<Edge> edges() const;
  /// Only valid when the host has at most 64 edges.
  std::uint64_t mask() const;

  bool is_subset_of(const EdgeSet& other) const;
  EdgeSet operator|(const EdgeSet& other) const;
  EdgeSet operator&(const EdgeSet& other) const;
  EdgeSet operator-(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.same_host(b) && a.words_ == b.words_;
  }

 private:
  EdgeSet(EdgeIndexPtr host, std::vector<std::uint64_t> words)
      : host_(std::move(host)), words_(std::move(words)) {}
  void require_same_host(const EdgeSet& other) const;

  EdgeIndexPtr host_;
  std::vector<std::uint64_t> words_;
};

/// The cover part as a graph on the host's full vertex set.
Graph spanning_subgraph(const Graph& g, const EdgeSet& edges);

/// Union of the parts, all of which must share one host.
EdgeSet union_of(EdgeIndexPtr host, std::span<const EdgeSet> parts);

}  // namespace covernum
