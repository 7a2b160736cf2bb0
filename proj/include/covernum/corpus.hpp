#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "covernum/graph.hpp"

namespace covernum {

/// Bit i of `code` selects the i-th vertex pair in lexicographic order.
Graph graph_from_code(std::size_t n, std::uint64_t code);
std::uint64_t labeled_graph_count(std::size_t n);

/// Each pair u < v, in lexicographic order, is an edge with probability 1/2.
Graph random_graph(std::size_t n, std::mt19937_64& rng);

struct CorpusEntry {
  std::string id;
  Graph graph;
};

struct CorpusOptions {
  std::size_t exhaustive_max_n = 5;  // every labeled graph on 0..max vertices
  std::vector<std::size_t> sample_sizes{6, 7};
  std::size_t samples = 200;  // per sample size
  std::uint64_t seed = 1;
};

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options);

/// Worker count from COVERNUM_THREADS, default 1.
std::size_t worker_count();

/// Evaluates fn(i) for i in [0, count) on `workers` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn,
                            std::size_t workers = worker_count()) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1 || count <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace covernum
