#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "covernum/classes.hpp"
#include "covernum/graph.hpp"
#include "covernum/invariants.hpp"

namespace covernum {

/// Vertices in `side` form one colour class, the rest the other.
struct Bipartition {
  VertexMask side = 0;
};

/// A colouring with at most `bound` colours plus a clique. For the chi-eq-omega
/// class the colour count equals the clique size, which certifies chi = omega.
struct ChromaticWitness {
  Coloring coloring;
  CliqueWitness clique;
  std::uint64_t bound = 0;
};

/// Unipolar split (clique part, cluster parts). When `complemented` is set the
/// split is of the complement, i.e. the graph is co-unipolar: `clique` is an
/// independent set and `clusters` are the parts of a complete multipartite graph.
struct SplitWitness {
  bool complemented = false;
  VertexMask clique = 0;
  std::vector<VertexMask> clusters;
};

/// Membership evidence for the perfect class: chi = omega on the graph itself
/// together with the number of odd vertex subsets ruled out as holes/antiholes.
struct PerfectWitness {
  ChromaticWitness chromatic;
  std::size_t subsets_checked = 0;
};

using ClassWitness = std::variant<Bipartition, ChromaticWitness, SplitWitness, PerfectWitness>;

/// Induced odd cycle of length >= 5, in cyclic order, in the graph (hole) or in
/// its complement (antihole).
struct OddHole {
  bool antihole = false;
  std::vector<Vertex> cycle;
};

struct ChiOmegaVerdict {
  bool member = false;
  std::size_t chi = 0;
  std::size_t omega = 0;
  std::uint64_t bound = 0;
  Coloring coloring;
  CliqueWitness clique;
};

struct PerfectVerdict {
  bool perfect = false;
  std::optional<OddHole> obstruction;
  std::size_t subsets_checked = 0;
};

inline constexpr std::size_t kPerfectVertexBudget = 26;

std::optional<Bipartition> is_bipartite(const Graph& g);
bool is_cluster(const Graph& g);
bool is_cluster(const Graph& g, VertexMask within);
std::optional<SplitWitness> is_unipolar(const Graph& g);
std::optional<SplitWitness> is_co_unipolar(const Graph& g);
/// Tries unipolar first, then co-unipolar.
std::optional<SplitWitness> is_gsp(const Graph& g);
ChiOmegaVerdict is_chi_eq_omega(const Graph& g);
ChiOmegaVerdict is_chi_le_f(const Graph& g, const FSpec& f);
/// Odd holes and antiholes by subset enumeration; throws BudgetExceeded for n > 26.
PerfectVerdict is_perfect(const Graph& g);

std::optional<ClassWitness> in_class(const Graph& g, const ClassSpec& spec);
/// Same verdict as in_class without building a witness.
bool is_member(const Graph& g, const ClassSpec& spec);

bool check_witness(const Graph& g, const ClassSpec& spec, const ClassWitness& witness);
bool check_obstruction(const Graph& g, const OddHole& hole);

/// Connected components of g restricted to `within`, ordered by lowest vertex.
std::vector<VertexMask> components(const Graph& g, VertexMask within);

}  // namespace covernum
