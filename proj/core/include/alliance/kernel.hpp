#pragma once

#include "alliance/graph.hpp"

namespace alliance {

enum class AllianceKind { ordinary, strong };

enum class Protection { unprotected, marginal, overprotected };

struct ProtectionRecord {
  int vertex;
  int slack;
  Protection status;
};

// slack of v relative to s: ordinary d_S(v)+1-d_{S^c}(v), strong d_S(v)-d_{S^c}(v)
int slack_of(const Graph& g, const VertexSet& s, AllianceKind kind, int v);

// v must be a member of s. A vertex with slack in {0,1} but no neighbour in s
// is overprotected: it survives every (vacuous) single-neighbour removal and
// can never certify anyone's local minimality.
ProtectionRecord classify(const Graph& g, const VertexSet& s, AllianceKind kind,
                          int v);

// nonempty and every member has slack >= 0
bool is_alliance(const Graph& g, const VertexSet& s, AllianceKind kind);

bool is_connected_alliance(const Graph& g, const VertexSet& s, AllianceKind kind);

// Direct definition: s is an alliance and s\{v} is not an alliance for any
// member v. The empty remainder of a singleton counts as "not an alliance".
// The connected variant additionally requires s itself to induce a connected
// subgraph; the removal test stays the plain alliance test, so every member
// still needs a marginally protected neighbour. (Testing removals against
// connected alliances instead would exempt cut vertices of the induced
// subgraph from needing a certificate and is NOT what the solvers compute;
// see tests/data/tree9_broom.txt for the 9-vertex tree separating the two.)
bool is_locally_minimal(const Graph& g, const VertexSet& s, AllianceKind kind,
                        bool connected_variant);

// Marginal-neighbour characterization; requires is_alliance(g,s,kind).
// Agrees with is_locally_minimal(..., false) on every alliance.
bool is_locally_minimal_via_marginals(const Graph& g, const VertexSet& s,
                                      AllianceKind kind);

// No nonempty proper subset is an alliance. Guard: |s| <= 20.
bool is_globally_minimal(const Graph& g, const VertexSet& s, AllianceKind kind);

}  // namespace alliance
