#pragma once

#include <optional>

#include "alliance/graph.hpp"
#include "alliance/kernel.hpp"

namespace alliance::oracle {

inline constexpr int kWitnessCap = 64;

struct OracleResult {
  int best_size = 0;  // 0 when no locally minimal alliance exists
  std::vector<VertexSet> witnesses;  // lexicographically smallest first, capped
};

// Exhaustive search over all 2^n subsets; n <= 24. Every witness is
// re-validated against the kernel checker before being returned.
OracleResult max_lm_alliance(const Graph& g, AllianceKind kind, bool connected);

// Some witness of size exactly k, or nullopt; n <= 24.
std::optional<VertexSet> exists_exact(const Graph& g, int k, AllianceKind kind,
                                      bool connected);

struct MatchingResult {
  int size = 0;
  std::vector<std::pair<int, int>> edges;
};

// Maximal matching of minimum cardinality by edge-subset enumeration; m <= 24.
MatchingResult min_maximal_matching(const Graph& g);

struct OrientationResult {
  long long r_star = 0;
  // head[i]: the endpoint edge i points to (the other endpoint pays weight[i])
  std::vector<int> head;
};

// Orientation minimizing the maximum weighted outdegree; m <= 20.
OrientationResult min_max_outdegree(const WeightedGraph& wg);

}  // namespace alliance::oracle
