#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covernum/graph.hpp"

namespace covernum {

/// Vertex colouring with dense colour ids 0..count-1, every id used.
struct Coloring {
  std::vector<std::uint32_t> colors;
  std::size_t count = 0;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct CliqueWitness {
  VertexMask vertices = 0;
  std::size_t size = 0;
};

struct CliqueResult {
  std::size_t size = 0;
  CliqueWitness witness;
};

struct ChromaticResult {
  std::size_t chi = 0;
  Coloring coloring;
};

/// Maximum clique by colour-bounded branch and bound; the witness is the
/// lexicographically smallest maximum clique.
CliqueResult clique_number(const Graph& g);

std::optional<Coloring> is_k_colorable(const Graph& g, std::size_t k);

/// Deepens k upward from the clique number; the first feasible k is chi.
ChromaticResult chromatic_number(const Graph& g);

/// Least t >= 0 with base^t >= value, in integer arithmetic.
std::size_t ceil_log(std::uint64_t base, std::uint64_t value);

/// True when no edge of g joins two vertices of the same colour and every
/// vertex has a colour below coloring.count.
bool is_proper(const Graph& g, const Coloring& coloring);

/// Renumbers colours by first appearance in vertex order.
Coloring compress(std::vector<std::uint32_t> colors);

}  // namespace covernum
