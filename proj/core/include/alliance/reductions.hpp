#pragma once

#include <cstdint>
#include <string>

#include "alliance/graph.hpp"
#include "alliance/kernel.hpp"

namespace alliance::reductions {

enum class Variant { plain, exact, with_forbidden, with_forbidden_necessary };

struct AnnotatedInstance {
  Graph graph;
  long long k = 0;
  VertexSet necessary;
  VertexSet forbidden;
  Variant variant = Variant::plain;
  bool connected = false;  // solutions must induce a connected subgraph
};

// locally minimal (ordinary) + annotation containment + the variant's size
// relation (= k for exact, >= k otherwise)
bool check_annotated(const AnnotatedInstance& inst, const VertexSet& s);

// ---- minimum maximal matching -> locally minimal alliance --------------

struct MmmLayout {
  int n = 0, m = 0;
  int b_base = 0;      // one vertex per source edge
  int vsq_base = 0;    // one hub per source vertex
  int esq_base = 0;    // two hubs per source edge
  int cycle_base = 0;  // hub cycles, laid out hub by hub
  int cycle_len = 0;   // 6(n+m)
  int hub_count = 0;   // n + 2m

  int hub_id(int hub) const {
    return hub < n ? vsq_base + hub : esq_base + (hub - n);
  }
  int cycle_start(int hub) const { return cycle_base + hub * cycle_len; }
};

struct MmmInstance {
  Graph graph;
  long long k_prime = 0;
  MmmLayout layout;
};

// Builds the alliance instance whose locally minimal alliances of size
// k' = 4(n+m)(n+2m) + (n+m-k) mirror maximal matchings of size <= k.
// The source must be cubic unless require_cubic is false (size-bookkeeping
// tests use small non-cubic sources).
MmmInstance reduce_mmm_to_lmda(const Graph& g, long long k,
                               bool require_cubic = true);

// D = A ∪ (B \ M) ∪ two of every three consecutive cycle vertices
VertexSet mmm_witness(const Graph& source,
                      const std::vector<std::pair<int, int>>& matching,
                      const MmmInstance& inst);

// ---- minimum maximum outdegree -> LMDA with necessary/forbidden --------

struct ComplementaryPair {
  int first = -1, second = -1;  // the two paired vertices
  int tri = -1, sq = -1, tri2 = -1;
};

struct MmoLayout {
  int n = 0, m = 0;
  long long r = 0, omega = 0;
  std::vector<int> vsq;                      // per source vertex
  std::vector<int> h_base, hsq_base;         // 2r vertices each
  std::vector<int> uv_base, uvsq_base;       // per source edge, w(e) each
  std::vector<int> vu_base, vusq_base;
  std::vector<ComplementaryPair> pairs;
};

struct MmoInstance {
  AnnotatedInstance annotated;  // with_forbidden_necessary, not connected
  long long closed_form_k = 0;  // n(r+1) + omega + 2|C|
  MmoLayout layout;
};

// k is the size every orientation witness has: n(r+1) + 2*omega + 2|C|.
// That exceeds the closed form above by exactly omega; both are reported.
MmoInstance reduce_mmo_to_lmda_fn(const WeightedGraph& wg, long long r);

// head[e]: endpoint that source edge e points to. Requires a feasible
// orientation (weighted outdegree <= r everywhere).
VertexSet mmo_witness(const WeightedGraph& wg, long long r,
                      const std::vector<int>& head, const MmoInstance& inst);

// ---- chain steps ---------------------------------------------------------

struct ConnectedFnResult {
  AnnotatedInstance annotated;  // with_forbidden_necessary, connected
  int n_source = 0;
  int hub = -1;        // necessary vertex adjacent to all source vertices
  int taboo = -1;      // forbidden vertex adjacent to all source vertices
  int ring_base = 0;   // 4n necessary ring vertices
  int pendant_base = 0;

  VertexSet transform_witness(const VertexSet& s) const;
};
ConnectedFnResult fn_to_connected_fn(const AnnotatedInstance& inst);

struct FnToFResult {
  AnnotatedInstance annotated;  // with_forbidden; necessary compiled away
  int n_source = 0;
  std::vector<int> source_necessary;
  std::vector<int> u1, u2;        // per source necessary vertex
  std::vector<int> ring_base;     // 4n ring vertices each
  std::vector<int> pendant_base;  // 16n forbidden pendants each

  VertexSet transform_witness(const VertexSet& s) const;
};
FnToFResult fn_to_f(const AnnotatedInstance& inst);

struct FToExactResult {
  AnnotatedInstance annotated;  // exact; forbidden compiled away
  int n_source = 0;

  VertexSet transform_witness(const VertexSet& s) const;
};
// Adds 2n pendant vertices to every forbidden vertex; requires k <= n.
// Throws guard_error when the output is too large to materialize.
FToExactResult f_to_exact(const AnnotatedInstance& inst);

// materialization cap for pendant inflation (vertices)
inline constexpr long long kMaterializeCap = 20'000'000;

}  // namespace alliance::reductions
