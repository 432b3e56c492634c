#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "alliance/graph.hpp"
#include "alliance/kernel.hpp"

namespace alliance::colorcoding {

enum class Color : std::uint8_t { red, green };

struct Coloring {
  std::vector<Color> color;  // one entry per vertex
};

struct TrialPolicy {
  std::uint64_t seed = 0;
  std::uint64_t max_trials = 1;
};

// exact decimal value of 2^(k^2+k), the failure-guarantee repetition count
std::string theoretical_trials(int k);
int theoretical_trials_log2(int k);

// Coloring of trial `trial` under `seed`; depends on (seed, trial) only, so
// trials can be replayed or distributed in any order.
Coloring trial_coloring(int n, std::uint64_t seed, std::uint64_t trial);

// Green connected component of size exactly k that is a locally minimal
// defensive alliance (ordinary kind); lexicographically smallest such
// component if several qualify.
std::optional<VertexSet> check_coloring(const Graph& g, const Coloring& coloring,
                                        int k);

struct SolveResult {
  std::optional<VertexSet> witness;
  std::uint64_t trials_used = 0;  // trials up to and including the hit
  std::uint64_t trials_budget = 0;
  std::string theoretical;
};

// Runs min(policy.max_trials, 2^(k^2+k)) independent colorings and returns
// the hit with the smallest trial index. Absence is a value, not an error.
SolveResult solve(const Graph& g, int k, const TrialPolicy& policy,
                  int threads = 1);

}  // namespace alliance::colorcoding
