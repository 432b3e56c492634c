#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <utility>

#include "alliance/graph.hpp"
#include "alliance/kernel.hpp"

namespace alliance::treedp {

// States of a vertex in the rooted DP. Naming: m/o = marginally protected /
// overprotected, p/pbar = parent in / out of the solution, g/b = has / lacks
// a marginally protected child in the solution. zero = not in the solution.
// The two "pbar + bad" combinations are unrepresentable on purpose: such a
// vertex would have no marginally protected neighbour at all.
enum class TreeState {
  zero = 0,
  m_p_g,
  m_p_b,
  m_pbar_g,
  o_p_g,
  o_p_b,
  o_pbar_g,
};
inline constexpr int kStateCount = 7;

using Value = long long;
inline constexpr Value kNegInf = std::numeric_limits<Value>::min() / 4;

struct TreeDpTable {
  int root = 0;
  // storage is in breadth-first rank order so children sit consecutively;
  // rank_of maps vertex ids to ranks, children of rank r are the ranks
  // first_child[r] .. first_child[r]+child_count[r)
  std::vector<int> order, rank_of, first_child, child_count;
  std::vector<std::array<Value, kStateCount>> value;

  Value at(int v, TreeState s) const {
    return value[static_cast<std::size_t>(rank_of[v])][static_cast<int>(s)];
  }
};

struct TreeDpResult {
  int size = 0;
  VertexSet witness;
};

// Both entry points verify the input is a tree (connected, m = n-1).
TreeDpTable compute_table(const Graph& tree, int root = 0);

// Maximum connected locally minimal strong defensive alliance. The witness is
// re-validated against the kernel checker before being returned.
TreeDpResult solve_tree(const Graph& tree, int root = 0);
TreeDpResult solve_tree(const Graph& tree, const TreeDpTable& table);

}  // namespace alliance::treedp
