#include "covernum/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "covernum/error.hpp"

namespace covernum {

namespace {

constexpr std::size_t kEnumerationHardCap = 30;
constexpr std::size_t kStructuralVertexCap = 24;

void require_enumerable(const Graph& g, const SolveBudget& budget) {
  const std::size_t cap = std::min(budget.max_edges, kEnumerationHardCap);
  if (g.size() > cap) {
    throw BudgetExceeded("graph has " + std::to_string(g.size()) + " edges; subset enumeration is limited to " +
                         std::to_string(cap));
  }
}

// Membership flag per edge-id mask, visited in Gray-code order so each step
// toggles one edge of the adjacency rows.
std::vector<std::uint8_t> membership_table(const EdgeIndex& index, const ClassSpec& spec, SolveStats& stats) {
  const std::size_t m = index.size();
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<std::uint8_t> member(total, 0);
  Graph::Rows rows{};
  const std::size_t n = index.graph().order();
  std::uint64_t mask = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(i));
      mask ^= std::uint64_t{1} << bit;
      const auto [u, v] = index.edge(bit);
      rows[u] ^= vertex_bit(v);
      rows[v] ^= vertex_bit(u);
    }
    member[mask] = is_member(Graph::from_rows(n, rows), spec) ? 1 : 0;
  }
  stats.membership_tests += total;
  return member;
}

std::vector<std::uint64_t> maximal_masks(const EdgeIndex& index, const ClassSpec& spec, SolveStats& stats) {
  const std::size_t m = index.size();
  const auto member = membership_table(index, spec, stats);
  // up[S] = some member T with S ⊆ T, by a superset-sum transform.
  std::vector<std::uint8_t> up = member;
  for (std::size_t e = 0; e < m; ++e) {
    const std::uint64_t bit = std::uint64_t{1} << e;
    for (std::uint64_t s = 0; s < up.size(); ++s) {
      if ((s & bit) == 0) up[s] |= up[s | bit];
    }
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t s = 0; s < member.size(); ++s) {
    if (!member[s]) continue;
    bool maximal = true;
    for (std::uint64_t free = full & ~s; free != 0 && maximal; free &= free - 1) {
      if (up[s | (free & (~free + 1))]) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

// Exact set cover over the family by branch and bound.
class SetCoverSearch {
 public:
  SetCoverSearch(std::vector<std::uint64_t> sets, std::size_t elements)
      : sets_(std::move(sets)), containing_(elements), last_index_(elements, 0) {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      for (std::uint64_t s = sets_[i]; s != 0; s &= s - 1) {
        const auto e = static_cast<std::size_t>(std::countr_zero(s));
        containing_[e].push_back(i);
        last_index_[e] = i;
      }
    }
  }

  /// Smallest cover size <= limit, or nullopt when none exists.
  std::optional<std::size_t> minimum(std::uint64_t universe, std::size_t limit) {
    best_ = limit + 1;
    const std::size_t greedy = greedy_size(universe);
    if (greedy < best_) best_ = greedy;
    branch(universe, 0);
    if (best_ > limit) return std::nullopt;
    return best_;
  }

  /// Lexicographically least index tuple of the given size covering `universe`.
  std::vector<std::size_t> least_cover(std::uint64_t universe, std::size_t size) {
    std::vector<std::size_t> chosen;
    if (!lex_search(universe, 0, size, chosen)) throw std::logic_error("no cover of the optimal size");
    return chosen;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t greedy_size(std::uint64_t uncovered) const {
    std::size_t used = 0;
    while (uncovered != 0) {
      std::size_t pick = 0;
      int gain = -1;
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        const int g = std::popcount(sets_[i] & uncovered);
        if (g > gain) {
          gain = g;
          pick = i;
        }
      }
      if (gain <= 0) return sets_.size() + 1;
      uncovered &= ~sets_[pick];
      ++used;
    }
    return used;
  }

  void branch(std::uint64_t uncovered, std::size_t depth) {
    ++nodes_;
    if (uncovered == 0) {
      best_ = std::min(best_, depth);
      return;
    }
    int widest = 0;
    for (auto s : sets_) widest = std::max(widest, std::popcount(s & uncovered));
    if (widest == 0) return;
    const std::size_t remaining = static_cast<std::size_t>(std::popcount(uncovered));
    const std::size_t lower = (remaining + widest - 1) / widest;
    if (depth + lower >= best_) return;

    std::size_t pivot = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::uint64_t u = uncovered; u != 0; u &= u - 1) {
      const auto e = static_cast<std::size_t>(std::countr_zero(u));
      if (containing_[e].size() < fewest) {
        fewest = containing_[e].size();
        pivot = e;
      }
    }
    for (std::size_t i : containing_[pivot]) {
      branch(uncovered & ~sets_[i], depth + 1);
      if (best_ <= depth + 1) return;
    }
  }

  bool lex_search(std::uint64_t uncovered, std::size_t start, std::size_t slots, std::vector<std::size_t>& chosen) {
    ++nodes_;
    if (uncovered == 0) {
      return true;
    }
    if (slots == 0) return false;
    // The uncovered edge whose last containing set comes first bounds this slot.
    std::size_t stop = SIZE_MAX;
    for (std::uint64_t u = uncovered; u != 0; u &= u - 1) {
      stop = std::min(stop, last_index_[static_cast<std::size_t>(std::countr_zero(u))]);
    }
    if (stop < start) return false;
    for (std::size_t i = start; i <= stop && i < sets_.size(); ++i) {
      if ((sets_[i] & uncovered) == 0) continue;
      chosen.push_back(i);
      if (lex_search(uncovered & ~sets_[i], i + 1, slots - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::vector<std::uint64_t> sets_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> last_index_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

CoverCertificate certificate_from(const Graph& g, const ClassSpec& spec, const EdgeIndexPtr& host,
                                  const std::vector<std::uint64_t>& masks) {
  CoverCertificate cert{spec, {}, {}, masks.size()};
  for (auto mask : masks) {
    cert.parts.push_back(EdgeSet::from_mask(host, mask));
    const Graph part = spanning_subgraph(g, cert.parts.back());
    auto witness = in_class(part, spec);
    if (!witness) throw std::logic_error("family member failed re-recognition");
    cert.witnesses.push_back(std::move(*witness));
  }
  return cert;
}

std::optional<SolveResult> solve_within(const Graph& g, const ClassSpec& spec, std::size_t limit,
                                        const SolveBudget& budget) {
  require_enumerable(g, budget);
  const auto host = EdgeIndex::of(g);
  SolveResult result;
  if (g.size() == 0) {
    result.witness = CoverCertificate{spec, {}, {}, 0};
    return result;
  }
  const auto family = maximal_masks(*host, spec, result.stats);
  result.stats.family_size = family.size();
  const std::uint64_t universe = (std::uint64_t{1} << g.size()) - 1;
  std::uint64_t reachable = 0;
  for (auto mask : family) reachable |= mask;
  if (reachable != universe) {
    throw InvalidArgument("class " + spec.to_string() + " contains no graph with an edge; no cover exists");
  }

  SetCoverSearch search(family, g.size());
  const auto best = search.minimum(universe, limit);
  if (!best) {
    result.stats.nodes = search.nodes();
    return std::nullopt;
  }
  std::vector<std::uint64_t> masks;
  for (std::size_t i : search.least_cover(universe, *best)) masks.push_back(family[i]);
  result.stats.nodes = search.nodes();
  result.value = *best;
  result.witness = certificate_from(g, spec, host, masks);
  return result;
}

class ClusterPartition {
 public:
  explicit ClusterPartition(const Graph& g) : g_(g) {}

  // Best total edge count over partitions of `mask` into cliques.
  std::size_t best(VertexMask mask) {
    if (std::popcount(mask) <= 1) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const auto v = static_cast<Vertex>(std::countr_zero(mask));
    const VertexMask rest = mask & ~vertex_bit(v);
    std::size_t out = 0;
    each_clique(vertex_bit(v), g_.neighbors(v) & rest, [&](VertexMask clique) {
      const std::size_t k = std::popcount(clique);
      out = std::max(out, k * (k - 1) / 2 + best(mask & ~clique));
    });
    memo_.emplace(mask, out);
    return out;
  }

  template <class F>
  void each_clique(VertexMask clique, VertexMask candidates, F&& f) {
    f(clique);
    for (VertexMask c = candidates; c != 0; c &= c - 1) {
      const VertexMask bit = c & (~c + 1);
      const auto w = static_cast<Vertex>(std::countr_zero(c));
      each_clique(clique | bit, candidates & g_.neighbors(w) & ~first_vertices(w + 1), f);
    }
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexMask, std::size_t> memo_;
};

}  // namespace

std::vector<EdgeSet> maximal_class_subgraphs(const Graph& g, const ClassSpec& spec, const SolveBudget& budget) {
  require_enumerable(g, budget);
  const auto host = EdgeIndex::of(g);
  SolveStats stats;
  std::vector<EdgeSet> out;
  for (auto mask : maximal_masks(*host, spec, stats)) out.push_back(EdgeSet::from_mask(host, mask));
  return out;
}

SolveResult exact_cover_number(const Graph& g, const ClassSpec& spec, const SolveBudget& budget) {
  auto result = solve_within(g, spec, budget.max_k, budget);
  if (!result) {
    throw BudgetExceeded("no cover with at most " + std::to_string(budget.max_k) + " parts (max_k)");
  }
  return std::move(*result);
}

std::optional<CoverCertificate> decide_cover(const Graph& g, const ClassSpec& spec, std::size_t k,
                                             const SolveBudget& budget) {
  auto result = solve_within(g, spec, std::min(k, budget.max_k), budget);
  if (!result) return std::nullopt;
  return std::move(result->witness);
}

std::size_t max_unipolar_subgraph_size(const Graph& g) {
  if (g.order() > kStructuralVertexCap) {
    throw BudgetExceeded("structural unipolar search is limited to " + std::to_string(kStructuralVertexCap) +
                         " vertices");
  }
  ClusterPartition clusters(g);
  std::size_t best = 0;
  clusters.each_clique(0, g.vertices(), [&](VertexMask a) {
    const std::size_t k = std::popcount(a);
    std::size_t cross = 0;
    for_each_vertex(a, [&](Vertex v) { cross += std::popcount(g.neighbors(v) & ~a); });
    best = std::max(best, k * (k - 1) / 2 + cross + clusters.best(g.vertices() & ~a));
  });
  return best;
}

std::size_t max_class_subgraph_size(const Graph& g, const ClassSpec& spec, const SolveBudget& budget) {
  if (g.size() > std::min(budget.max_edges, kEnumerationHardCap)) {
    if (spec.kind() == ClassSpec::Kind::unipolar) return max_unipolar_subgraph_size(g);
    require_enumerable(g, budget);
  }
  const auto host = EdgeIndex::of(g);
  SolveStats stats;
  const auto member = membership_table(*host, spec, stats);
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < member.size(); ++s) {
    if (member[s]) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

}  // namespace covernum
