#pragma once

#include <cstdint>

#include "alliance/graph.hpp"
#include "alliance/kernel.hpp"

namespace alliance::twdp {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;      // sorted vertex lists
  std::vector<std::pair<int, int>> edges;  // tree edges between bag indices

  int width() const;
};

// min-fill heuristic; exhaustive (exact-width) search when n <= 10
TreeDecomposition decompose(const Graph& g);
bool valid_decomposition(const Graph& g, const TreeDecomposition& td);

enum class NodeKind { leaf, introduce, forget, join };

struct NiceNode {
  NodeKind kind = NodeKind::leaf;
  std::vector<int> bag;  // sorted
  int vertex = -1;       // introduced / forgotten vertex
  int child1 = -1, child2 = -1;
};

struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;  // empty bag

  int width() const;
};

NiceDecomposition make_nice(const TreeDecomposition& td);
bool valid_nice(const Graph& g, const NiceDecomposition& nd);

// One table entry: a partial solution signature at a node. Vectors are
// indexed by bag position; z by subset masks over bag positions. Entries
// outside the bag subset A are zero so that records compare canonically.
struct TwRecord {
  std::uint32_t in_bag = 0;  // A as a mask over bag positions
  std::uint32_t good = 0;    // y: good members of A
  std::int32_t a = 0;        // |A_t|
  std::int32_t alpha = 0;    // protected vertices of A_t
  std::int32_t beta = 0;     // good vertices of A_t
  std::vector<std::int32_t> x;  // d_{A_t}(v) per bag position in A
  std::vector<std::int32_t> z;  // common bad forgotten neighbours per subset

  bool operator==(const TwRecord&) const = default;
};

struct TwRecordHash {
  std::size_t operator()(const TwRecord& r) const;
};

struct NodeTable {
  std::vector<TwRecord> records;
};

struct DpResult {
  int size = 0;
  VertexSet witness;
  int width_used = 0;
  std::size_t records_peak = 0;
};

// Maximum locally minimal defensive alliance (ordinary kind, connectivity not
// required). The beta = a root condition encodes "everyone has a marginal
// neighbour", which no single vertex can satisfy, so size-1 solutions are
// covered by a degree-based pre-pass.
DpResult dp_solve(const Graph& g, const NiceDecomposition& nd);
DpResult dp_solve(const Graph& g);

// full per-node tables, for cross-checking the table semantics against
// direct enumeration on small graphs
std::vector<NodeTable> dp_tables(const Graph& g, const NiceDecomposition& nd);

}  // namespace alliance::twdp
