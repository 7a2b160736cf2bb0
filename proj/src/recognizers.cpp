#include "covernum/recognizers.hpp"

#include <string>

#include "covernum/error.hpp"

namespace covernum {

namespace {

struct InducedP3 {
  Vertex a, b, c;  // a-b-c with a, c non-adjacent
};

// Lowest centre b first, then lowest endpoints.
std::optional<InducedP3> find_p3(const Graph& g, VertexMask within) {
  for (VertexMask rest = within; rest != 0; rest &= rest - 1) {
    const auto b = static_cast<Vertex>(std::countr_zero(rest));
    const VertexMask nb = g.neighbors(b) & within;
    for (VertexMask ends = nb; ends != 0; ends &= ends - 1) {
      const auto a = static_cast<Vertex>(std::countr_zero(ends));
      const VertexMask far = nb & ~g.neighbors(a) & ~vertex_bit(a) & ~first_vertices(a);
      if (far != 0) return InducedP3{a, b, static_cast<Vertex>(std::countr_zero(far))};
    }
  }
  return std::nullopt;
}

// Branches on the vertices of an uncovered induced P3: some vertex of every
// induced P3 must lie in the clique part. `excluded` vertices are committed to
// the cluster side.
class UnipolarSearch {
 public:
  explicit UnipolarSearch(const Graph& g) : g_(g) {}

  std::optional<VertexMask> run() {
    if (search(0, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool search(VertexMask clique, VertexMask excluded) {
    const VertexMask rest = g_.vertices() & ~clique;
    VertexMask joinable = rest;
    for_each_vertex(clique, [&](Vertex v) { joinable &= g_.neighbors(v); });
    const VertexMask forced = rest & (excluded | ~joinable);
    if (find_p3(g_, forced)) return false;
    const auto p3 = find_p3(g_, rest);
    if (!p3) {
      found_ = clique;
      return true;
    }
    VertexMask tried = 0;
    for (Vertex v : {p3->a, p3->b, p3->c}) {
      if ((forced & vertex_bit(v)) == 0 && search(clique | vertex_bit(v), excluded | tried)) return true;
      tried |= vertex_bit(v);
    }
    return false;
  }

  const Graph& g_;
  VertexMask found_ = 0;
};

SplitWitness split_for(const Graph& g, VertexMask clique, bool complemented) {
  return {complemented, clique, components(g, g.vertices() & ~clique)};
}

bool is_chordless_cycle(const Graph& g, VertexMask set) {
  bool two_regular = true;
  for_each_vertex(set, [&](Vertex v) { two_regular = two_regular && std::popcount(g.neighbors(v) & set) == 2; });
  if (!two_regular) return false;
  return components(g, set).size() == 1;
}

std::vector<Vertex> cycle_order(const Graph& g, VertexMask set) {
  std::vector<Vertex> order;
  auto current = static_cast<Vertex>(std::countr_zero(set));
  VertexMask visited = vertex_bit(current);
  order.push_back(current);
  for (;;) {
    const VertexMask next = g.neighbors(current) & set & ~visited;
    if (next == 0) break;
    current = static_cast<Vertex>(std::countr_zero(next));
    visited |= vertex_bit(current);
    order.push_back(current);
  }
  return order;
}

// Gosper's hack over k-subsets of {0..n-1}; stops when `visit` returns true.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    if (visit(s)) return true;
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

ChromaticWitness chromatic_witness(std::uint64_t bound, const Coloring& coloring,
                                   const CliqueWitness& clique) {
  return {coloring, clique, bound};
}

bool colorable_within(const Graph& g, std::uint64_t bound) {
  return bound >= g.order() || is_k_colorable(g, static_cast<std::size_t>(bound)).has_value();
}

}  // namespace

std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask unseen = within;
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & within & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  VertexMask side = 0;
  for (VertexMask comp : components(g, g.vertices())) {
    // BFS layers alternate sides starting from the component's lowest vertex.
    VertexMask layer = comp & (~comp + 1);
    VertexMask seen = layer;
    bool odd = false;
    while (layer != 0) {
      if (odd) side |= layer;
      VertexMask next = 0;
      for_each_vertex(layer, [&](Vertex v) { next |= g.neighbors(v); });
      layer = next & ~seen;
      seen |= layer;
      odd = !odd;
    }
  }
  Bipartition out{side};
  if (!g.is_independent(side) || !g.is_independent(g.vertices() & ~side)) return std::nullopt;
  return out;
}

bool is_cluster(const Graph& g, VertexMask within) { return !find_p3(g, within).has_value(); }

bool is_cluster(const Graph& g) { return is_cluster(g, g.vertices()); }

std::optional<SplitWitness> is_unipolar(const Graph& g) {
  if (auto clique = UnipolarSearch(g).run()) return split_for(g, *clique, false);
  return std::nullopt;
}

std::optional<SplitWitness> is_co_unipolar(const Graph& g) {
  const Graph co = complement(g);
  if (auto clique = UnipolarSearch(co).run()) return split_for(co, *clique, true);
  return std::nullopt;
}

std::optional<SplitWitness> is_gsp(const Graph& g) {
  if (auto w = is_unipolar(g)) return w;
  return is_co_unipolar(g);
}

ChiOmegaVerdict is_chi_eq_omega(const Graph& g) {
  const auto clique = clique_number(g);
  const auto chromatic = chromatic_number(g);
  return {chromatic.chi == clique.size, chromatic.chi, clique.size, clique.size, chromatic.coloring, clique.witness};
}

ChiOmegaVerdict is_chi_le_f(const Graph& g, const FSpec& f) {
  const auto clique = clique_number(g);
  const std::uint64_t bound = f(clique.size);
  const auto chromatic = chromatic_number(g);
  return {chromatic.chi <= bound, chromatic.chi, clique.size, bound, chromatic.coloring, clique.witness};
}

PerfectVerdict is_perfect(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kPerfectVertexBudget) {
    throw BudgetExceeded("perfection test enumerates odd vertex subsets; " + std::to_string(n) +
                         " vertices exceeds the budget of " + std::to_string(kPerfectVertexBudget));
  }
  const Graph co = complement(g);
  PerfectVerdict out;
  for (std::size_t k = 5; k <= n; k += 2) {
    for (const bool antihole : {false, true}) {
      const Graph& host = antihole ? co : g;
      VertexMask hit = 0;
      const bool found = for_each_subset(n, k, [&](std::uint64_t s) {
        ++out.subsets_checked;
        if (!is_chordless_cycle(host, s)) return false;
        hit = s;
        return true;
      });
      if (found) {
        out.obstruction = OddHole{antihole, cycle_order(host, hit)};
        return out;
      }
    }
  }
  out.perfect = true;
  return out;
}

std::optional<ClassWitness> in_class(const Graph& g, const ClassSpec& spec) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind()) {
    case Kind::bipartite:
      if (auto w = is_bipartite(g)) return ClassWitness{*w};
      return std::nullopt;
    case Kind::chi_le: {
      if (auto c = is_k_colorable(g, static_cast<std::size_t>(std::min<std::uint64_t>(spec.k(), kMaxVertices)))) {
        return ClassWitness{chromatic_witness(spec.k(), *c, clique_number(g).witness)};
      }
      return std::nullopt;
    }
    case Kind::chi_le_f: {
      const auto v = is_chi_le_f(g, spec.f());
      if (!v.member) return std::nullopt;
      return ClassWitness{chromatic_witness(v.bound, v.coloring, v.clique)};
    }
    case Kind::chi_eq_omega: {
      const auto v = is_chi_eq_omega(g);
      if (!v.member) return std::nullopt;
      return ClassWitness{chromatic_witness(v.bound, v.coloring, v.clique)};
    }
    case Kind::perfect: {
      const auto v = is_perfect(g);
      if (!v.perfect) return std::nullopt;
      const auto cw = is_chi_eq_omega(g);
      return ClassWitness{PerfectWitness{chromatic_witness(cw.bound, cw.coloring, cw.clique), v.subsets_checked}};
    }
    case Kind::unipolar:
      if (auto w = is_unipolar(g)) return ClassWitness{std::move(*w)};
      return std::nullopt;
    case Kind::co_unipolar:
      if (auto w = is_co_unipolar(g)) return ClassWitness{std::move(*w)};
      return std::nullopt;
    case Kind::gsp:
      if (auto w = is_gsp(g)) return ClassWitness{std::move(*w)};
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_member(const Graph& g, const ClassSpec& spec) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind()) {
    case Kind::bipartite:
      return is_bipartite(g).has_value();
    case Kind::chi_le:
      return colorable_within(g, spec.k());
    case Kind::chi_le_f:
      return colorable_within(g, spec.f()(clique_number(g).size));
    case Kind::chi_eq_omega:
      return colorable_within(g, clique_number(g).size);
    case Kind::perfect:
      return is_perfect(g).perfect;
    case Kind::unipolar:
      return UnipolarSearch(g).run().has_value();
    case Kind::co_unipolar:
      return UnipolarSearch(complement(g)).run().has_value();
    case Kind::gsp:
      return UnipolarSearch(g).run().has_value() || UnipolarSearch(complement(g)).run().has_value();
  }
  return false;
}

namespace {

bool check_split(const Graph& g, const SplitWitness& w) {
  const Graph host = w.complemented ? complement(g) : g;
  if ((w.clique & ~host.vertices()) != 0 || !host.is_clique(w.clique)) return false;
  VertexMask covered = w.clique;
  for (VertexMask cluster : w.clusters) {
    if (cluster == 0 || (cluster & covered) != 0 || !host.is_clique(cluster)) return false;
    covered |= cluster;
  }
  if (covered != host.vertices()) return false;
  for (VertexMask cluster : w.clusters) {
    const VertexMask others = host.vertices() & ~w.clique & ~cluster;
    bool isolated = true;
    for_each_vertex(cluster, [&](Vertex v) { isolated = isolated && (host.neighbors(v) & others) == 0; });
    if (!isolated) return false;
  }
  return true;
}

bool check_chromatic(const Graph& g, const ChromaticWitness& w, std::uint64_t bound) {
  if (!is_proper(g, w.coloring) || w.coloring.count > bound) return false;
  return (w.clique.vertices & ~g.vertices()) == 0 && g.is_clique(w.clique.vertices) &&
         static_cast<std::size_t>(std::popcount(w.clique.vertices)) == w.clique.size;
}

}  // namespace

bool check_witness(const Graph& g, const ClassSpec& spec, const ClassWitness& witness) {
  using Kind = ClassSpec::Kind;
  switch (spec.kind()) {
    case Kind::bipartite: {
      const auto* w = std::get_if<Bipartition>(&witness);
      return w && (w->side & ~g.vertices()) == 0 && g.is_independent(w->side) &&
             g.is_independent(g.vertices() & ~w->side);
    }
    case Kind::chi_le: {
      const auto* w = std::get_if<ChromaticWitness>(&witness);
      return w && check_chromatic(g, *w, spec.k());
    }
    case Kind::chi_le_f: {
      const auto* w = std::get_if<ChromaticWitness>(&witness);
      // f is non-decreasing and the clique only bounds omega from below.
      return w && spec.f().defined_at(w->clique.size) && check_chromatic(g, *w, spec.f()(w->clique.size));
    }
    case Kind::chi_eq_omega: {
      const auto* w = std::get_if<ChromaticWitness>(&witness);
      return w && check_chromatic(g, *w, w->clique.size);
    }
    case Kind::perfect: {
      const auto* w = std::get_if<PerfectWitness>(&witness);
      return w && check_chromatic(g, w->chromatic, w->chromatic.clique.size);
    }
    case Kind::unipolar: {
      const auto* w = std::get_if<SplitWitness>(&witness);
      return w && !w->complemented && check_split(g, *w);
    }
    case Kind::co_unipolar: {
      const auto* w = std::get_if<SplitWitness>(&witness);
      return w && w->complemented && check_split(g, *w);
    }
    case Kind::gsp: {
      const auto* w = std::get_if<SplitWitness>(&witness);
      return w && check_split(g, *w);
    }
  }
  return false;
}

bool check_obstruction(const Graph& g, const OddHole& hole) {
  const std::size_t len = hole.cycle.size();
  if (len < 5 || len % 2 == 0) return false;
  VertexMask set = 0;
  for (Vertex v : hole.cycle) {
    if (v >= g.order() || (set & vertex_bit(v)) != 0) return false;
    set |= vertex_bit(v);
  }
  const Graph host = hole.antihole ? complement(g) : g;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (host.adjacent(hole.cycle[i], hole.cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace covernum
