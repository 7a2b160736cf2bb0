#include "covernum/edge_set.hpp"

#include <bit>
#include <string>

#include "covernum/error.hpp"

namespace covernum {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

EdgeIndex::EdgeIndex(const Graph& g)
    : graph_(g), edges_(g.edges()), ids_(g.order() * g.order(), -1) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    ids_[u * n + v] = static_cast<std::int16_t>(i);
    ids_[v * n + u] = static_cast<std::int16_t>(i);
  }
}

std::shared_ptr<const EdgeIndex> EdgeIndex::of(const Graph& g) {
  return std::make_shared<const EdgeIndex>(g);
}

std::optional<EdgeId> EdgeIndex::find(Vertex u, Vertex v) const noexcept {
  const std::size_t n = graph_.order();
  if (u >= n || v >= n) return std::nullopt;
  const auto id = ids_[u * n + v];
  if (id < 0) return std::nullopt;
  return static_cast<EdgeId>(id);
}

EdgeId EdgeIndex::id(Vertex u, Vertex v) const {
  if (auto found = find(u, v)) return *found;
  throw InvalidArgument("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge of the host graph");
}

EdgeSet EdgeSet::none(EdgeIndexPtr host) {
  const std::size_t words = word_count(host->size());
  return EdgeSet(std::move(host), std::vector<std::uint64_t>(words, 0));
}

EdgeSet EdgeSet::all(EdgeIndexPtr host) {
  const std::size_t m = host->size();
  std::vector<std::uint64_t> words(word_count(m), ~std::uint64_t{0});
  if (m % 64 != 0) words.back() = (std::uint64_t{1} << (m % 64)) - 1;
  return EdgeSet(std::move(host), std::move(words));
}

EdgeSet EdgeSet::from_ids(EdgeIndexPtr host, std::span<const EdgeId> ids) {
  EdgeSet out = none(std::move(host));
  for (EdgeId id : ids) {
    if (id >= out.host_->size()) throw InvalidArgument("edge id " + std::to_string(id) + " out of range");
    out.words_[id / 64] |= std::uint64_t{1} << (id % 64);
  }
  return out;
}

EdgeSet EdgeSet::from_edges(EdgeIndexPtr host, std::span<const Edge> edges) {
  EdgeSet out = none(std::move(host));
  for (const Edge& e : edges) {
    const EdgeId id = out.host_->id(e.u, e.v);
    out.words_[id / 64] |= std::uint64_t{1} << (id % 64);
  }
  return out;
}

EdgeSet EdgeSet::from_mask(EdgeIndexPtr host, std::uint64_t mask) {
  const std::size_t m = host->size();
  if (m > 64) throw InvalidArgument("from_mask needs a host with at most 64 edges");
  if (m < 64 && (mask >> m) != 0) throw InvalidArgument("mask selects edge ids beyond the host's edges");
  EdgeSet out = none(std::move(host));
  if (!out.words_.empty()) out.words_[0] = mask;
  return out;
}

bool EdgeSet::same_host(const EdgeSet& other) const noexcept {
  return host_ == other.host_ || host_->graph() == other.host_->graph();
}

void EdgeSet::require_same_host(const EdgeSet& other) const {
  if (!same_host(other)) throw HostMismatch("edge sets belong to different host graphs");
}

bool EdgeSet::contains(EdgeId id) const noexcept {
  return id < host_->size() && ((words_[id / 64] >> (id % 64)) & 1U);
}

std::size_t EdgeSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  for (EdgeId id : ids()) out.push_back(host_->edge(id));
  return out;
}

std::uint64_t EdgeSet::mask() const {
  if (host_->size() > 64) throw InvalidArgument("mask() needs a host with at most 64 edges");
  return words_.empty() ? 0 : words_[0];
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  require_same_host(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

EdgeSet EdgeSet::operator|(const EdgeSet& other) const {
  require_same_host(other);
  auto words = words_;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words_[i];
  return EdgeSet(host_, std::move(words));
}

EdgeSet EdgeSet::operator&(const EdgeSet& other) const {
  require_same_host(other);
  auto words = words_;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= other.words_[i];
  return EdgeSet(host_, std::move(words));
}

EdgeSet EdgeSet::operator-(const EdgeSet& other) const {
  require_same_host(other);
  auto words = words_;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~other.words_[i];
  return EdgeSet(host_, std::move(words));
}

Graph spanning_subgraph(const Graph& g, const EdgeSet& edges) {
  if (!(edges.host().graph() == g)) throw HostMismatch("edge set is not hosted by this graph");
  Graph::Rows rows{};
  for (EdgeId id : edges.ids()) {
    const auto [u, v] = edges.host().edge(id);
    rows[u] |= vertex_bit(v);
    rows[v] |= vertex_bit(u);
  }
  return Graph::from_rows(g.order(), rows);
}

EdgeSet union_of(EdgeIndexPtr host, std::span<const EdgeSet> parts) {
  EdgeSet out = EdgeSet::none(std::move(host));
  for (const EdgeSet& p : parts) out = out | p;
  return out;
}

}  // namespace covernum
