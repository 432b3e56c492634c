#include "alliance/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace alliance::oracle {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;
  return adj;
}

bool alliance_mask(const std::vector<std::uint32_t>& adj,
                   const std::vector<int>& deg, int bonus, std::uint32_t s) {
  if (s == 0) return false;
  for (std::uint32_t rem = s; rem; rem &= rem - 1) {
    int v = std::countr_zero(rem);
    int in_s = std::popcount(adj[v] & s);
    if (in_s - (deg[v] - in_s) + bonus < 0) return false;
  }
  return true;
}

bool connected_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  if (s == 0) return false;
  std::uint32_t reached = s & (~s + 1);  // lowest bit
  for (;;) {
    std::uint32_t frontier = 0;
    for (std::uint32_t rem = reached; rem; rem &= rem - 1)
      frontier |= adj[std::countr_zero(rem)];
    std::uint32_t next = reached | (frontier & s);
    if (next == reached) break;
    reached = next;
  }
  return reached == s;
}

// direct definition: every single-vertex removal destroys the alliance
// property, with the empty remainder counting as destroyed; the connected
// flag additionally requires s itself to induce a connected subgraph
bool locally_minimal_mask(const std::vector<std::uint32_t>& adj,
                          const std::vector<int>& deg, int bonus,
                          bool connected, std::uint32_t s) {
  if (!alliance_mask(adj, deg, bonus, s)) return false;
  if (connected && !connected_mask(adj, s)) return false;
  for (std::uint32_t rem = s; rem; rem &= rem - 1) {
    std::uint32_t rest = s & ~(rem & (~rem + 1));
    if (rest == 0) continue;
    if (alliance_mask(adj, deg, bonus, rest)) return false;
  }
  return true;
}

// lexicographic order on the ascending member sequences; all compared sets
// have equal size here, so prefix cases do not matter
bool lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

int kind_bonus(AllianceKind kind) {
  return kind == AllianceKind::ordinary ? 1 : 0;
}

void self_check(const Graph& g, AllianceKind kind, bool connected,
                std::uint32_t mask) {
  VertexSet s = VertexSet::from_mask(g.n(), mask);
  if (!is_locally_minimal(g, s, kind, connected))
    throw std::logic_error("oracle witness failed the kernel checker");
}

}  // namespace

OracleResult max_lm_alliance(const Graph& g, AllianceKind kind, bool connected) {
  if (g.n() > 24) throw guard_error("oracle: n > 24");
  auto adj = adjacency_masks(g);
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  int bonus = kind_bonus(kind);

  int best = 0;
  std::set<std::uint32_t, bool (*)(std::uint32_t, std::uint32_t)> best_masks(lex_less);
  std::uint32_t limit = g.n() == 0 ? 0 : (1u << g.n()) - 1;
  for (std::uint32_t s = 1; s <= limit && limit; ++s) {
    int size = std::popcount(s);
    if (size < best) continue;
    if (!locally_minimal_mask(adj, deg, bonus, connected, s)) continue;
    if (size > best) {
      best = size;
      best_masks.clear();
    }
    best_masks.insert(s);
    if (best_masks.size() > static_cast<std::size_t>(kWitnessCap))
      best_masks.erase(std::prev(best_masks.end()));
  }

  OracleResult out;
  out.best_size = best;
  for (std::uint32_t mask : best_masks) {
    self_check(g, kind, connected, mask);
    out.witnesses.push_back(VertexSet::from_mask(g.n(), mask));
  }
  return out;
}

std::optional<VertexSet> exists_exact(const Graph& g, int k, AllianceKind kind,
                                      bool connected) {
  if (g.n() > 24) throw guard_error("oracle: n > 24");
  if (k <= 0 || k > g.n()) return std::nullopt;
  auto adj = adjacency_masks(g);
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  int bonus = kind_bonus(kind);

  std::uint32_t limit = (1u << g.n()) - 1;
  for (std::uint32_t s = 1; s <= limit; ++s) {
    if (std::popcount(s) != k) continue;
    if (locally_minimal_mask(adj, deg, bonus, connected, s)) {
      self_check(g, kind, connected, s);
      return VertexSet::from_mask(g.n(), s);
    }
  }
  return std::nullopt;
}

MatchingResult min_maximal_matching(const Graph& g) {
  if (g.m() > 24) throw guard_error("oracle: m > 24");
  const auto& edges = g.edges();
  int m = static_cast<int>(edges.size());

  // compact endpoint ids so the incidence masks fit 64 bits regardless of n
  std::vector<int> compact(static_cast<std::size_t>(g.n()), -1);
  int touched = 0;
  auto compact_id = [&](int v) {
    if (compact[v] < 0) compact[v] = touched++;
    return compact[v];
  };
  std::vector<std::pair<int, int>> cedges(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e)
    cedges[e] = {compact_id(edges[e].first), compact_id(edges[e].second)};

  int best = m + 1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    std::uint64_t used = 0;
    bool matching = true;
    for (std::uint32_t rem = mask; rem; rem &= rem - 1) {
      auto [u, v] = cedges[std::countr_zero(rem)];
      std::uint64_t pair_bits = (1ULL << u) | (1ULL << v);
      if (used & pair_bits) {
        matching = false;
        break;
      }
      used |= pair_bits;
    }
    if (!matching) continue;
    bool maximal = true;
    for (int e = 0; e < m && maximal; ++e) {
      auto [u, v] = cedges[e];
      if (!((used >> u | used >> v) & 1)) maximal = false;
    }
    if (!maximal) continue;
    best = size;
    best_mask = mask;
  }
  if (best > m) throw std::logic_error("no maximal matching found");

  MatchingResult out;
  out.size = best;
  for (std::uint32_t rem = best_mask; rem; rem &= rem - 1)
    out.edges.push_back(edges[std::countr_zero(rem)]);
  return out;
}

OrientationResult min_max_outdegree(const WeightedGraph& wg) {
  const Graph& g = wg.base;
  if (g.m() > 20) throw guard_error("oracle: m > 20");
  const auto& edges = g.edges();
  int m = static_cast<int>(edges.size());

  long long best = -1;
  std::uint32_t best_mask = 0;
  std::vector<long long> out_w(static_cast<std::size_t>(g.n()));
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::fill(out_w.begin(), out_w.end(), 0LL);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      int tail = (mask >> e & 1) ? v : u;
      out_w[tail] += wg.weight[e];
    }
    long long worst = 0;
    for (int v = 0; v < g.n(); ++v) worst = std::max(worst, out_w[v]);
    if (best < 0 || worst < best) {
      best = worst;
      best_mask = mask;
    }
  }

  OrientationResult out;
  out.r_star = best < 0 ? 0 : best;
  out.head.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e)
    out.head[e] = (best_mask >> e & 1) ? edges[e].first : edges[e].second;
  return out;
}

}  // namespace alliance::oracle
