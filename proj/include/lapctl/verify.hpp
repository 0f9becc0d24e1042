#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lapctl/graph.hpp"

namespace lapctl::verify {

// Spectra count as simple when every adjacent eigenvalue gap exceeds this.
inline constexpr double kSimpleGap = 1e-6;

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Case = std::function<CaseResult()>;

enum class Schedule { Parallel, Serial };

// Runs every case; results keep case order whatever the completion order.
// An exception escaping a case is reported as a failed case.
std::vector<CaseResult> run_cases(const std::vector<Case>& cases,
                                  Schedule schedule = Schedule::Parallel);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// P_k, AR(k), K_k for 2 <= k <= 5.
std::vector<NamedGraph> composite_sweep_family();

struct MajorizationOptions {
  std::size_t random = 100;
  std::size_t maxk = 10;
  std::uint64_t seed = 20240501;
};

std::vector<Case> composite_cases();
std::vector<Case> cj_cases(std::size_t max_path = 20);
std::vector<Case> chain_cases();
std::vector<Case> chain_entry_cases();
std::vector<Case> append_path_cases();
std::vector<Case> majorization_cases(const MajorizationOptions& opt = {});
std::vector<Case> example_cases();

const std::vector<std::string_view>& suite_names();
// Throws InvalidArgument for an unknown suite.
std::vector<Case> suite_cases(std::string_view suite,
                              const MajorizationOptions& opt = {});

}  // namespace lapctl::verify
