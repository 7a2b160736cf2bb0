#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "covernum/classes.hpp"
#include "covernum/edge_set.hpp"
#include "covernum/recognizers.hpp"

namespace covernum {

struct CoverCertificate {
  ClassSpec cls = ClassSpec::bipartite();
  std::vector<EdgeSet> parts;
  std::vector<ClassWitness> witnesses;  // one per part
  std::size_t claimed_formula = 0;
};

/// Relabelling of an optimal colouring into functions {0..t-1} -> {0..base-1}.
/// Colours used on the maximum clique become distinct constant functions.
struct ColorFunctionTable {
  std::size_t t = 0;
  std::uint64_t base = 0;
  Coloring coloring;                                  // the optimal colouring relabelled
  CliqueWitness omega;                                // the maximum clique
  std::vector<std::vector<std::uint64_t>> functions;  // per colour id, t digits

  std::uint64_t digit(Vertex v, std::size_t coordinate) const {
    return functions[coloring.colors[v]][coordinate];
  }
};

std::size_t formula_biparticity(std::size_t chi);
/// 0 for chi <= 1, else ceil(log chi / log f(omega)) in integer arithmetic.
std::size_t formula_chibound(std::size_t chi, std::size_t omega, const FSpec& f);

CoverCertificate bipartite_cover(const Graph& g);
CoverCertificate chi_le_k_cover(const Graph& g, std::uint64_t k);
ColorFunctionTable color_function_table(const Graph& g, const FSpec& f);
/// Constant f is routed to the base-k digit construction.
CoverCertificate chibound_cover(const Graph& g, const FSpec& f);

/// Tuple colouring from per-part colourings, compressed by first appearance.
Coloring product_coloring(const Graph& g, const std::vector<std::pair<EdgeSet, Coloring>>& parts);

inline constexpr std::size_t kMaxHypercubeDimension = 6;

/// Part i holds the edges along coordinate i of Q_d.
CoverCertificate hypercube_direction_cover(std::size_t d);
std::uint64_t unipolar_subgraph_bound(std::size_t d);
std::uint64_t hypercube_lower_bound(std::size_t d);

/// Re-derives membership for every part and also checks any stored witnesses.
bool check_certificate(const Graph& g, const CoverCertificate& cert);

}  // namespace covernum
