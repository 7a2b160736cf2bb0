#include "covernum/invariants.hpp"

#include <array>
#include <limits>
#include <unordered_map>

#include "covernum/error.hpp"

namespace covernum {

namespace {

// Greedy sequential colouring of `candidates` in increasing id order; returns
// the number of colour classes, an upper bound on the clique number inside.
std::size_t greedy_class_count(const Graph& g, VertexMask candidates) {
  std::size_t classes = 0;
  while (candidates != 0) {
    ++classes;
    VertexMask available = candidates;
    while (available != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(available));
      available &= ~g.neighbors(v) & ~vertex_bit(v);
      candidates &= ~vertex_bit(v);
    }
  }
  return classes;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  CliqueWitness run() {
    expand(0, 0, g_.vertices());
    return {best_, best_size_};
  }

 private:
  // Include-first in increasing id order; only strict improvements are kept,
  // so the first maximum clique reached is the lexicographically smallest.
  void expand(VertexMask clique, std::size_t size, VertexMask candidates) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = clique;
      }
      return;
    }
    if (size + greedy_class_count(g_, candidates) <= best_size_) return;
    const auto v = static_cast<Vertex>(std::countr_zero(candidates));
    expand(clique | vertex_bit(v), size + 1, candidates & g_.neighbors(v));
    expand(clique, size, candidates & ~vertex_bit(v));
  }

  const Graph& g_;
  VertexMask best_ = 0;
  std::size_t best_size_ = 0;
};

// Backtracking k-colouring in saturation-degree order. Colour classes are
// stored as vertex masks; a vertex may open at most one new class, which
// keeps the resulting ids dense.
class KColoring {
 public:
  KColoring(const Graph& g, std::size_t k) : g_(g), k_(k) { colors_.fill(kUncolored); }

  bool run() { return extend(g_.vertices(), 0); }

  Coloring result() const {
    Coloring out;
    out.colors.assign(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(g_.order()));
    out.count = used_;
    return out;
  }

 private:
  static constexpr std::uint32_t kUncolored = std::numeric_limits<std::uint32_t>::max();

  bool extend(VertexMask uncolored, std::size_t used) {
    if (uncolored == 0) {
      used_ = used;
      return true;
    }
    // Pick max saturation, then max degree into uncolored, then lowest id.
    Vertex pick = 0;
    int best_sat = -1;
    int best_deg = -1;
    std::uint64_t pick_forbidden = 0;
    for (VertexMask rest = uncolored; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      std::uint64_t forbidden = 0;
      for (std::size_t c = 0; c < used; ++c) {
        if ((g_.neighbors(v) & classes_[c]) != 0) forbidden |= std::uint64_t{1} << c;
      }
      const int sat = std::popcount(forbidden);
      const int deg = std::popcount(g_.neighbors(v) & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        pick_forbidden = forbidden;
      }
    }
    if (static_cast<std::size_t>(best_sat) >= k_) return false;

    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if ((pick_forbidden >> c) & 1U) continue;
      classes_[c] |= vertex_bit(pick);
      colors_[pick] = static_cast<std::uint32_t>(c);
      if (extend(uncolored & ~vertex_bit(pick), std::max(used, c + 1))) return true;
      classes_[c] &= ~vertex_bit(pick);
      colors_[pick] = kUncolored;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::size_t used_ = 0;
  std::array<VertexMask, kMaxVertices> classes_{};
  std::array<std::uint32_t, kMaxVertices> colors_{};
};

// DSATUR without backtracking gives the starting upper bound.
Coloring greedy_dsatur(const Graph& g) {
  KColoring search(g, g.order());
  search.run();
  return search.result();
}

}  // namespace

CliqueResult clique_number(const Graph& g) {
  if (g.order() == 0) return {};
  const CliqueWitness w = CliqueSearch(g).run();
  return {w.size, w};
}

std::optional<Coloring> is_k_colorable(const Graph& g, std::size_t k) {
  if (g.order() == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  KColoring search(g, std::min(k, g.order()));
  if (!search.run()) return std::nullopt;
  return search.result();
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.order() == 0) return {};
  if (g.size() == 0) return {1, Coloring{std::vector<std::uint32_t>(g.order(), 0), 1}};
  Coloring upper = greedy_dsatur(g);
  const std::size_t lower = clique_number(g).size;
  for (std::size_t k = lower; k < upper.count; ++k) {
    if (auto c = is_k_colorable(g, k)) return {c->count, std::move(*c)};
  }
  const std::size_t chi = upper.count;
  return {chi, std::move(upper)};
}

std::size_t ceil_log(std::uint64_t base, std::uint64_t value) {
  if (base < 2) throw InvalidArgument("ceil_log: base must be at least 2");
  if (value < 1) throw InvalidArgument("ceil_log: argument must be at least 1");
  std::size_t t = 0;
  std::uint64_t power = 1;
  while (power < value) {
    ++t;
    if (power > value / base) break;  // next power already exceeds value
    power *= base;
  }
  return t;
}

bool is_proper(const Graph& g, const Coloring& coloring) {
  if (coloring.colors.size() != g.order()) return false;
  for (auto c : coloring.colors) {
    if (c >= coloring.count) return false;
  }
  for (const auto [u, v] : g.edges()) {
    if (coloring.colors[u] == coloring.colors[v]) return false;
  }
  return true;
}

Coloring compress(std::vector<std::uint32_t> colors) {
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (auto& c : colors) {
    auto [it, inserted] = renumber.try_emplace(c, static_cast<std::uint32_t>(renumber.size()));
    c = it->second;
  }
  const std::size_t count = renumber.size();
  return {std::move(colors), count};
}

}  // namespace covernum
