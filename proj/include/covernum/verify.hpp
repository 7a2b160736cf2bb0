#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covernum/corpus.hpp"
#include "covernum/serialize.hpp"

namespace covernum {

struct VerifyInstance {
  std::string id;
  std::string graph6;
  Json expected;
  Json computed;
  bool pass = true;
  bool asserted = true;  // false: the value is recorded, not checked
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerifyInstance> instances;
  bool pass = true;
  double runtime_seconds = 0;
};

struct VerifyOptions {
  CorpusOptions corpus;
  std::size_t workers = worker_count();
  SolveBudget budget;
};

/// hhm, chibound, chain, far3, hypercube, arithmetic, inclusion
const std::vector<std::string>& suite_names();
/// Throws InvalidArgument for an unknown suite.
VerifyReport run_suite(std::string_view name, const VerifyOptions& options = {});

Json to_json(const VerifyReport& report);

}  // namespace covernum
