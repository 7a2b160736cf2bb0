#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "covernum/covers.hpp"

namespace covernum {

struct SolveBudget {
  std::size_t max_edges = 22;  // subset enumeration is 2^max_edges membership tests
  std::size_t max_k = 64;      // covers with more parts are not searched
  std::chrono::milliseconds time_hint{0};
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::size_t family_size = 0;
  std::uint64_t membership_tests = 0;
};

struct SolveResult {
  std::size_t value = 0;
  CoverCertificate witness;
  SolveStats stats;
};

/// Every member edge set with no proper superset that is also a member.
/// Sorted by the integer value of the edge-id mask.
std::vector<EdgeSet> maximal_class_subgraphs(const Graph& g, const ClassSpec& spec, const SolveBudget& budget = {});

/// Minimum cover by the class. The witness is the lexicographically least
/// optimal choice of family-maximal parts.
SolveResult exact_cover_number(const Graph& g, const ClassSpec& spec, const SolveBudget& budget = {});

/// An optimal certificate if the cover number is at most k.
std::optional<CoverCertificate> decide_cover(const Graph& g, const ClassSpec& spec, std::size_t k,
                                             const SolveBudget& budget = {});

/// Largest member edge set. Falls back to a structural search for the unipolar
/// class when the edge count exceeds the enumeration budget.
std::size_t max_class_subgraph_size(const Graph& g, const ClassSpec& spec, const SolveBudget& budget = {});

/// Structural search for the largest unipolar spanning subgraph: a clique part,
/// all its edges to the rest, and a best clique partition of the remainder.
std::size_t max_unipolar_subgraph_size(const Graph& g);

}  // namespace covernum
