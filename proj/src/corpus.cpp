#include "covernum/corpus.hpp"

#include <cstdlib>
#include <string>

#include "covernum/error.hpp"

namespace covernum {

std::uint64_t labeled_graph_count(std::size_t n) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs >= 64) throw CapacityError("too many labeled graphs to enumerate");
  return std::uint64_t{1} << pairs;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() >> 63) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 0; n <= options.exhaustive_max_n; ++n) {
    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      out.push_back({"n" + std::to_string(n) + "#" + std::to_string(code), graph_from_code(n, code)});
    }
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t n : options.sample_sizes) {
    for (std::size_t i = 0; i < options.samples; ++i) {
      out.push_back({"rand-n" + std::to_string(n) + "-" + std::to_string(i), random_graph(n, rng)});
    }
  }
  return out;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("COVERNUM_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<std::size_t>(value);
  }
  return 1;
}

}  // namespace covernum
