#include "alliance/kernel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace alliance {

int slack_of(const Graph& g, const VertexSet& s, AllianceKind kind, int v) {
  auto [in_s, out_s] = degrees_within(g, s, v);
  int slack = in_s - out_s;
  if (kind == AllianceKind::ordinary) slack += 1;
  return slack;
}

ProtectionRecord classify(const Graph& g, const VertexSet& s, AllianceKind kind,
                          int v) {
  if (!s.contains(v))
    throw std::invalid_argument("classify: vertex not in the candidate set");
  auto [in_s, out_s] = degrees_within(g, s, v);
  int slack = in_s - out_s + (kind == AllianceKind::ordinary ? 1 : 0);
  Protection status;
  if (slack < 0)
    status = Protection::unprotected;
  else if (slack <= 1 && in_s >= 1)
    status = Protection::marginal;
  else
    status = Protection::overprotected;
  return ProtectionRecord{v, slack, status};
}

bool is_alliance(const Graph& g, const VertexSet& s, AllianceKind kind) {
  if (s.empty()) return false;
  for (int v : s.members())
    if (slack_of(g, s, kind, v) < 0) return false;
  return true;
}

bool is_connected_alliance(const Graph& g, const VertexSet& s, AllianceKind kind) {
  return is_alliance(g, s, kind) && is_connected_induced(g, s);
}

bool is_locally_minimal(const Graph& g, const VertexSet& s, AllianceKind kind,
                        bool connected_variant) {
  bool base = connected_variant ? is_connected_alliance(g, s, kind)
                                : is_alliance(g, s, kind);
  if (!base) return false;

  std::vector<int> members = s.members();
  VertexSet rest = s;
  for (int v : members) {
    rest.erase(v);
    if (!rest.empty()) {
      // only neighbours of v can lose protection; everyone else keeps the
      // slack they already proved nonnegative above
      bool still_alliance = true;
      for (int u : g.neighbors(v)) {
        if (!rest.contains(u)) continue;
        if (slack_of(g, rest, kind, u) < 0) {
          still_alliance = false;
          break;
        }
      }
      if (still_alliance) {
        rest.insert(v);
        return false;
      }
    }
    rest.insert(v);
  }
  return true;
}

bool is_locally_minimal_via_marginals(const Graph& g, const VertexSet& s,
                                      AllianceKind kind) {
  if (!is_alliance(g, s, kind))
    throw std::invalid_argument("is_locally_minimal_via_marginals: not an alliance");
  if (s.size() == 1) return true;
  std::vector<std::int8_t> marginal(static_cast<std::size_t>(g.n()), -1);
  auto is_marginal = [&](int u) {
    if (marginal[u] < 0)
      marginal[u] = classify(g, s, kind, u).status == Protection::marginal;
    return marginal[u] == 1;
  };
  for (int v : s.members()) {
    bool certified = false;
    for (int u : g.neighbors(v)) {
      if (s.contains(u) && is_marginal(u)) {
        certified = true;
        break;
      }
    }
    if (!certified) return false;
  }
  return true;
}

bool is_globally_minimal(const Graph& g, const VertexSet& s, AllianceKind kind) {
  if (s.size() > 20)
    throw guard_error("is_globally_minimal: set larger than 20 vertices");
  if (!is_alliance(g, s, kind)) return false;
  std::vector<int> members = s.members();
  int k = static_cast<int>(members.size());

  // neighbour masks within s; degree outside s is fixed per member
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(k), 0);
  std::vector<int> base_out(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    for (int u : g.neighbors(members[i])) {
      auto it = std::lower_bound(members.begin(), members.end(), u);
      if (it != members.end() && *it == u)
        nbr[i] |= 1u << (it - members.begin());
      else
        ++base_out[i];
    }
  }
  int bonus = kind == AllianceKind::ordinary ? 1 : 0;
  std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    bool alliance = true;
    for (std::uint32_t rem = mask; rem && alliance; rem &= rem - 1) {
      int i = std::countr_zero(rem);
      int in_s = std::popcount(nbr[i] & mask);
      int out_s = base_out[i] + std::popcount(nbr[i] & ~mask & full);
      if (in_s - out_s + bonus < 0) alliance = false;
    }
    if (alliance) return false;
  }
  return true;
}

}  // namespace alliance
