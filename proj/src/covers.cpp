#include "covernum/covers.hpp"

#include <map>
#include <string>

#include "covernum/error.hpp"
#include "covernum/generators.hpp"

namespace covernum {

namespace {

// Parts of a digit cover: part i keeps the edges whose endpoints differ in
// digit i. `digit(v, i)` must be a proper colouring of part i by construction.
template <class Digit>
std::vector<EdgeSet> digit_parts(const EdgeIndexPtr& host, std::size_t t, Digit&& digit) {
  std::vector<std::vector<EdgeId>> ids(t);
  for (EdgeId id = 0; id < host->size(); ++id) {
    const auto [u, v] = host->edge(id);
    for (std::size_t i = 0; i < t; ++i) {
      if (digit(u, i) != digit(v, i)) ids[i].push_back(id);
    }
  }
  std::vector<EdgeSet> parts;
  parts.reserve(t);
  for (auto& list : ids) parts.push_back(EdgeSet::from_ids(host, list));
  return parts;
}

template <class Digit>
Coloring digit_coloring(const Graph& g, std::size_t coordinate, Digit&& digit) {
  std::vector<std::uint32_t> colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colors[v] = static_cast<std::uint32_t>(digit(v, coordinate));
  return compress(std::move(colors));
}

std::uint64_t base_k_digit(std::uint64_t value, std::uint64_t k, std::size_t i) {
  for (std::size_t j = 0; j < i && value != 0; ++j) value /= k;
  return value % k;
}

CoverCertificate harary_cover(const Graph& g, std::uint64_t k, ClassSpec cls) {
  const auto chromatic = chromatic_number(g);
  const std::size_t t = chromatic.chi <= 1 ? 0 : ceil_log(k, chromatic.chi);
  const auto host = EdgeIndex::of(g);
  auto digit = [&](Vertex v, std::size_t i) { return base_k_digit(chromatic.coloring.colors[v], k, i); };

  CoverCertificate cert{std::move(cls), digit_parts(host, t, digit), {}, t};
  for (std::size_t i = 0; i < t; ++i) {
    if (cert.cls.kind() == ClassSpec::Kind::bipartite) {
      VertexMask side = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (digit(v, i) == 1) side |= vertex_bit(v);
      }
      cert.witnesses.emplace_back(Bipartition{side});
    } else {
      const auto clique = clique_number(spanning_subgraph(g, cert.parts[i])).witness;
      cert.witnesses.emplace_back(ChromaticWitness{digit_coloring(g, i, digit), clique, k});
    }
  }
  return cert;
}

}  // namespace

std::size_t formula_biparticity(std::size_t chi) { return chi <= 1 ? 0 : ceil_log(2, chi); }

std::size_t formula_chibound(std::size_t chi, std::size_t omega, const FSpec& f) {
  if (omega > chi || (omega == 0) != (chi == 0)) {
    throw InvalidArgument("inconsistent pair chi=" + std::to_string(chi) + ", omega=" + std::to_string(omega));
  }
  if (chi <= 1) return 0;
  const std::uint64_t base = f(omega);
  if (base < 2) {
    throw InvalidArgument("f(omega) = " + std::to_string(base) + " < 2 cannot bound chi = " + std::to_string(chi));
  }
  return ceil_log(base, chi);
}

CoverCertificate bipartite_cover(const Graph& g) { return harary_cover(g, 2, ClassSpec::bipartite()); }

CoverCertificate chi_le_k_cover(const Graph& g, std::uint64_t k) {
  if (k < 2) throw InvalidArgument("chi_le_k_cover needs k >= 2");
  return harary_cover(g, k, ClassSpec::chi_le(k));
}

ColorFunctionTable color_function_table(const Graph& g, const FSpec& f) {
  ColorFunctionTable table;
  const auto chromatic = chromatic_number(g);
  const auto clique = clique_number(g);
  table.omega = clique.witness;
  table.t = formula_chibound(chromatic.chi, clique.size, f);
  table.base = chromatic.chi <= 1 ? 1 : f(clique.size);

  std::vector<std::vector<std::uint64_t>> by_color(chromatic.chi);
  std::vector<bool> assigned(chromatic.chi, false);

  // Clique vertices in increasing id take the constant functions 0, 1, 2, ...
  std::uint64_t constants = 0;
  for_each_vertex(clique.witness.vertices, [&](Vertex v) {
    const auto c = chromatic.coloring.colors[v];
    by_color[c].assign(table.t, constants++);
    assigned[c] = true;
  });

  // Remaining colours take the smallest unused digit strings in lexicographic order.
  std::uint64_t next = 0;
  auto digits_of = [&](std::uint64_t r) {
    std::vector<std::uint64_t> d(table.t);
    for (std::size_t i = table.t; i-- > 0;) {
      d[i] = r % table.base;
      r /= table.base;
    }
    return d;
  };
  auto is_taken_constant = [&](const std::vector<std::uint64_t>& d) {
    if (d.empty()) return false;
    for (auto x : d) {
      if (x != d.front()) return false;
    }
    return d.front() < constants;
  };
  for (std::size_t c = 0; c < chromatic.chi; ++c) {
    if (assigned[c]) continue;
    for (;;) {
      auto d = digits_of(next++);
      if (is_taken_constant(d)) continue;
      by_color[c] = std::move(d);
      break;
    }
  }
  // At most chi strings are consumed, and f(omega)^t >= chi.
  std::uint64_t capacity = 1;
  for (std::size_t i = 0; i < table.t && capacity < next; ++i) {
    capacity = capacity > next / table.base ? next : capacity * table.base;
  }
  if (table.t > 0 && next > capacity) throw InvalidArgument("colour relabelling ran out of functions");
  table.coloring = chromatic.coloring;
  table.functions = std::move(by_color);
  return table;
}

CoverCertificate chibound_cover(const Graph& g, const FSpec& f) {
  if (f.form() == FSpec::Form::constant) {
    if (f.parameter() < 2 && g.size() > 0) throw InvalidArgument("constant f below 2 cannot cover a graph with edges");
    if (g.size() == 0) return CoverCertificate{ClassSpec::chi_le_f(f), {}, {}, 0};
    return harary_cover(g, f.parameter(), ClassSpec::chi_le_f(f));
  }
  if (!f.majorizes_identity()) throw InvalidArgument("chibound_cover needs f to majorize the identity");

  const ColorFunctionTable table = color_function_table(g, f);
  const auto host = EdgeIndex::of(g);
  auto digit = [&](Vertex v, std::size_t i) { return table.digit(v, i); };
  CoverCertificate cert{ClassSpec::chi_le_f(f), digit_parts(host, table.t, digit), {}, table.t};
  for (std::size_t i = 0; i < table.t; ++i) {
    cert.witnesses.emplace_back(ChromaticWitness{digit_coloring(g, i, digit), table.omega, table.base});
  }
  return cert;
}

Coloring product_coloring(const Graph& g, const std::vector<std::pair<EdgeSet, Coloring>>& parts) {
  const auto host = EdgeIndex::of(g);
  EdgeSet covered = EdgeSet::none(host);
  for (const auto& [edges, coloring] : parts) {
    const Graph part = spanning_subgraph(g, edges);
    if (!is_proper(part, coloring)) throw InvalidArgument("part colouring is not proper on its edge set");
    covered = covered | edges;
  }
  if (!(covered == EdgeSet::all(host))) throw InvalidArgument("parts do not cover every edge");

  std::map<std::vector<std::uint32_t>, std::uint32_t> tuple_ids;
  std::vector<std::uint32_t> colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::uint32_t> tuple;
    tuple.reserve(parts.size());
    for (const auto& part : parts) tuple.push_back(part.second.colors[v]);
    auto [it, inserted] = tuple_ids.try_emplace(std::move(tuple), static_cast<std::uint32_t>(tuple_ids.size()));
    colors[v] = it->second;
  }
  return Coloring{std::move(colors), tuple_ids.size()};
}

CoverCertificate hypercube_direction_cover(std::size_t d) {
  if (d < 1 || d > kMaxHypercubeDimension) {
    throw CapacityError("hypercube dimension must be in 1..6, got " + std::to_string(d));
  }
  const Graph q = hypercube(d);
  const auto host = EdgeIndex::of(q);
  CoverCertificate cert{ClassSpec::unipolar(), {}, {}, d};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Edge> matching;
    for (Vertex v = 0; v < q.order(); ++v) {
      const Vertex w = v ^ (Vertex{1} << i);
      if (v < w) matching.push_back({v, w});
    }
    cert.parts.push_back(EdgeSet::from_edges(host, matching));
    const Graph part = spanning_subgraph(q, cert.parts.back());
    cert.witnesses.emplace_back(SplitWitness{false, 0, components(part, part.vertices())});
  }
  return cert;
}

std::uint64_t unipolar_subgraph_bound(std::size_t d) {
  if (d < 1 || d > 64) throw InvalidArgument("dimension must be in 1..64");
  return (std::uint64_t{1} << (d - 1)) + 2 * (d - 1);
}

std::uint64_t hypercube_lower_bound(std::size_t d) {
  if (d < 1 || d > 64) throw InvalidArgument("dimension must be in 1..64");
  __extension__ typedef unsigned __int128 u128;
  const u128 edges = static_cast<u128>(d) << (d - 1);
  const u128 per_part = unipolar_subgraph_bound(d);
  return static_cast<std::uint64_t>((edges + per_part - 1) / per_part);
}

bool check_certificate(const Graph& g, const CoverCertificate& cert) {
  const auto host = EdgeIndex::of(g);
  EdgeSet covered = EdgeSet::none(host);
  for (const EdgeSet& part : cert.parts) {
    if (!(part.host().graph() == g)) throw HostMismatch("certificate part is not hosted by this graph");
    covered = covered | part;
  }
  if (!(covered == EdgeSet::all(host))) return false;
  if (!cert.witnesses.empty() && cert.witnesses.size() != cert.parts.size()) return false;
  for (std::size_t i = 0; i < cert.parts.size(); ++i) {
    const Graph sub = spanning_subgraph(g, cert.parts[i]);
    const auto witness = in_class(sub, cert.cls);
    if (!witness || !check_witness(sub, cert.cls, *witness)) return false;
    if (!cert.witnesses.empty() && !check_witness(sub, cert.cls, cert.witnesses[i])) return false;
  }
  return true;
}

}  // namespace covernum
