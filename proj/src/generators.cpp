#include "covernum/generators.hpp"

#include <charconv>

#include "covernum/error.hpp"

namespace covernum {

namespace {

void require_capacity(std::size_t n, std::string_view what) {
  if (n > kMaxVertices) {
    throw CapacityError(std::string(what) + " needs " + std::to_string(n) + " vertices; at most 64 supported");
  }
}

std::vector<std::size_t> parse_numbers(std::string_view text, std::string_view family) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = text.find(',');
    const auto word = text.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (word.empty() || ec != std::errc{} || ptr != word.data() + word.size()) {
      throw InvalidArgument("bad parameter list in family '" + std::string(family) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph complete(std::size_t n) {
  require_capacity(n, "complete graph");
  Graph::Rows rows{};
  for (Vertex v = 0; v < n; ++v) rows[v] = first_vertices(n) & ~vertex_bit(v);
  return Graph::from_rows(n, rows);
}

Graph cycle(std::size_t n) {
  require_capacity(n, "cycle");
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  std::size_t n = 0;
  for (auto p : parts) n += p;
  require_capacity(n, "complete multipartite graph");
  Graph::Rows rows{};
  std::size_t start = 0;
  for (auto p : parts) {
    const VertexMask block = first_vertices(start + p) & ~first_vertices(start);
    for_each_vertex(block, [&](Vertex v) { rows[v] = first_vertices(n) & ~block; });
    start += p;
  }
  return Graph::from_rows(n, rows);
}

Graph hypercube(std::size_t d) {
  if (d < 1) throw InvalidArgument("hypercube dimension must be at least 1");
  if (d > 6) throw CapacityError("hypercube dimension must be in 1..6, got " + std::to_string(d));
  const std::size_t n = std::size_t{1} << d;
  Graph::Rows rows{};
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) rows[v] |= vertex_bit(v ^ (Vertex{1} << i));
  }
  return Graph::from_rows(n, rows);
}

Graph mycielski_step(const Graph& g) {
  const std::size_t n = g.order();
  require_capacity(2 * n + 1, "Mycielski step");
  std::vector<Edge> edges = g.edges();
  const auto apex = static_cast<Vertex>(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    const auto shadow = static_cast<Vertex>(n + v);
    for_each_vertex(g.neighbors(v), [&](Vertex w) { edges.push_back({shadow, w}); });
    edges.push_back({shadow, apex});
  }
  return Graph::from_edges(2 * n + 1, edges);
}

Graph triangle_free_chromatic(std::size_t chi) {
  if (chi < 2) throw InvalidArgument("triangle_free_chromatic needs chi >= 2");
  if (chi > 6) throw CapacityError("triangle_free_chromatic(" + std::to_string(chi) + ") exceeds 64 vertices");
  Graph g = complete(2);
  for (std::size_t c = 2; c < chi; ++c) g = mycielski_step(g);
  return g;
}

Graph kKl(std::size_t k, std::size_t l) {
  require_capacity(k * l, "kKl");
  const Graph clique = complete(l);
  const std::vector<Graph> copies(k, clique);
  return disjoint_union(copies);
}

FarGraph far_graph(std::size_t k, std::size_t l) {
  if (k < 1 || k > l) throw InvalidArgument("far_graph needs 1 <= k <= l");
  if (l > 6 || (std::size_t{1} << l) > 6) {
    throw CapacityError("far_graph(" + std::to_string(k) + "," + std::to_string(l) + ") exceeds 64 vertices");
  }
  const Graph z = triangle_free_chromatic(std::size_t{1} << l);
  const Graph clique = complete(std::size_t{1} << l);
  const Graph r = triangle_free_chromatic(std::size_t{1} << k);
  const std::vector<Graph> parts{z, clique, r};
  FarGraph out{disjoint_union(parts), z.order(), z.order() + clique.order()};
  return out;
}

Graph generate(std::string_view family) {
  const auto colon = family.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("family '" + std::string(family) + "' needs parameters");
  const auto name = family.substr(0, colon);
  const auto args = parse_numbers(family.substr(colon + 1), family);
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw InvalidArgument("family '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "complete") return expect(1), complete(args[0]);
  if (name == "cycle") return expect(1), cycle(args[0]);
  if (name == "multipartite") return complete_multipartite(args);
  if (name == "hypercube") return expect(1), hypercube(args[0]);
  if (name == "mycielski") return expect(1), triangle_free_chromatic(args[0]);
  if (name == "kkl") return expect(2), kKl(args[0], args[1]);
  if (name == "far") return expect(2), far_graph(args[0], args[1]).graph;
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace covernum
