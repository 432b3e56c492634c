#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alliance {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_no, const std::string& msg);
};

// thrown when a size guard trips; guards fail loudly instead of truncating
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subset of 0..n-1 with O(1) membership. Immutable by convention once built.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, const std::vector<int>& ids);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(int v) const {
    return words_[static_cast<std::size_t>(v) >> 6] >> (v & 63) & 1;
  }
  void insert(int v);
  void erase(int v);
  std::vector<int> members() const;  // ascending
  std::uint64_t low_mask() const;    // bits 0..63; universe must be <= 64

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  int universe_ = 0;
  int size_ = 0;
};

// Simple undirected graph; adjacency sorted, no self-loops or parallel edges.
class Graph {
 public:
  Graph() = default;
  // validates and throws std::invalid_argument on self-loop/duplicate/range
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  long long m() const { return static_cast<long long>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;  // input order, endpoints as given
};

struct WeightedGraph {
  Graph base;
  std::vector<long long> weight;  // aligned with base.edges(), all >= 1

  long long total_weight() const;
};

struct ParsedInput {
  Graph graph;
  std::optional<std::vector<long long>> weights;

  bool weighted() const { return weights.has_value(); }
  WeightedGraph weighted_graph() const;
};

// Format: first line "n m", then m lines "u v" (1-based) with an optional
// integer weight as third token. Weights must appear on all lines or none.
ParsedInput parse_input(std::istream& in);
ParsedInput parse_input(const std::string& text);
Graph parse_graph(const std::string& text);
WeightedGraph parse_weighted_graph(const std::string& text);

std::string serialize(const Graph& g);
std::string serialize(const WeightedGraph& wg);

// (d_S(v), d_{S^c}(v)); v need not belong to s
std::pair<int, int> degrees_within(const Graph& g, const VertexSet& s, int v);

// Blocks of g (or of g[restrict_to]) as sorted vertex lists, ordered by
// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const VertexSet& restrict_to);

bool is_connected_induced(const Graph& g, const VertexSet& s);

}  // namespace alliance
