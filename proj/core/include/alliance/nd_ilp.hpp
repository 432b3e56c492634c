#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "alliance/graph.hpp"
#include "alliance/kernel.hpp"

namespace alliance::ndilp {

enum class ClassKind { clique, independent };

// per-class guesses for |C ∩ S| and the protection status of its members
enum class ClassOption : std::uint8_t {
  empty = 0,       // |C ∩ S| = 0
  one_marginal,    // |C ∩ S| = 1, marginally protected
  one_over,        // |C ∩ S| = 1, overprotected
  many_marginal,   // |C ∩ S| > 1, marginally protected
  many_over,       // |C ∩ S| > 1, overprotected
};
inline constexpr int kOptionCount = 5;

enum class ClassLabel { none, c1, cgt1, ind, op };

struct TypePartition {
  std::vector<std::vector<int>> classes;  // sorted members, ordered by minimum
  std::vector<ClassKind> kind;            // singletons are marked clique
  std::vector<std::vector<int>> type_adj; // type graph adjacency, sorted

  int k() const { return static_cast<int>(classes.size()); }
  bool adjacent(int i, int j) const;
};

// Minimum partition under "same type": u ~ v iff N(u)\{v} = N(v)\{u}.
// Verifies class uniformity and the complete/empty bipartite structure.
TypePartition compute_type_partition(const Graph& g);

struct OptionAssignment {
  std::vector<ClassOption> option;  // one per class
};

ClassLabel label_of(ClassKind kind, ClassOption opt);

// The labelling rules on the induced type graph: every class labelled op, c1
// or ind needs a neighbour labelled c1, c>1 or ind. c>1 classes certify
// themselves through their own marginal members.
bool validate_labels(const TypePartition& p, const OptionAssignment& a);

struct IlpVariable {
  int class_id;
  long long lo, hi;  // domain lo..hi (lo > hi means empty)
};

struct IlpConstraint {
  std::vector<std::pair<int, long long>> terms;  // (variable, coefficient)
  long long constant = 0;
  bool strict_positive = false;          // sum + constant > 0
  std::array<long long, 2> allowed{0, 0};  // otherwise: sum + constant ∈ allowed
};

struct IlpModel {
  std::vector<IlpVariable> vars;
  std::vector<IlpConstraint> constraints;
};

// Transcription of the per-label constraint rows over the type graph.
// Requires validate_labels(p, a).
IlpModel build_ilp(const TypePartition& p, const OptionAssignment& a);

// Exhaustive search over the (finite) domain product with interval and
// parity pruning; maximizes the variable sum. nullopt when infeasible.
std::optional<std::pair<long long, std::vector<long long>>> solve_ilp(
    const IlpModel& model);

struct NdResult {
  int nd = 0;
  int size = 0;
  VertexSet witness;
  std::uint64_t assignments_tried = 0;
};

// Maximum locally minimal defensive alliance (ordinary kind) via the 5^k
// option enumeration. Guard: nd(G) <= 12. Size-1 solutions sit outside the
// option machinery (a lone class can never satisfy the labelling rules), so
// they are handled by a degree-based pre-pass.
NdResult max_lmda_nd(const Graph& g);

}  // namespace alliance::ndilp
