#include "alliance/tree_dp.hpp"

#include <algorithm>

namespace alliance::treedp {

namespace {

Value sat_add(Value a, Value b) {
  if (a <= kNegInf || b <= kNegInf) return kNegInf;
  return a + b;
}

constexpr int kZero = static_cast<int>(TreeState::zero);
constexpr int kMpg = static_cast<int>(TreeState::m_p_g);
constexpr int kMpb = static_cast<int>(TreeState::m_p_b);
constexpr int kMpbarg = static_cast<int>(TreeState::m_pbar_g);
constexpr int kOpg = static_cast<int>(TreeState::o_p_g);
constexpr int kOpb = static_cast<int>(TreeState::o_p_b);
constexpr int kOpbarg = static_cast<int>(TreeState::o_pbar_g);

// ceil((d+1)/2) for d >= 0
int half_up(int d) { return (d + 2) / 2; }

// one child ordering: key descending, vertex id ascending on ties; owns
// reusable buffers so vertex processing does not churn the allocator
struct Ordering {
  std::vector<int> pos;          // sorted order -> index into children array
  std::vector<Value> prefix;     // prefix[t] = saturated sum of first t keys
  std::vector<Value> opt_suffix; // opt_suffix[t] = sum of max(0, key_j), j >= t
  std::vector<int> rank;         // children index -> position in sorted order
  std::vector<Value> key;

  void build(const std::vector<int>& children, const std::vector<Value>& keys) {
    int d = static_cast<int>(children.size());
    key = keys;
    pos.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) pos[i] = i;
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
      if (keys[a] != keys[b]) return keys[a] > keys[b];
      return children[a] < children[b];
    });
    rank.resize(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) rank[pos[t]] = t;
    prefix.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int t = 0; t < d; ++t)
      prefix[t + 1] = sat_add(prefix[t], keys[pos[t]]);
    opt_suffix.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int t = d - 1; t >= 0; --t)
      opt_suffix[t] = opt_suffix[t + 1] + std::max<Value>(0, keys[pos[t]]);
  }
};

// sum of the `need` largest keys among all children except `skip`
Value top_sum_excluding(const Ordering& ord, int skip, int need) {
  int d = static_cast<int>(ord.rank.size());
  if (need < 0 || need > d - 1) return kNegInf;
  if (ord.rank[skip] < need)
    return sat_add(ord.prefix[need + 1], -ord.key[skip]);
  return ord.prefix[need];
}

// optional part after the mandatory block of size `need`, excluding `skip`
Value opt_sum_excluding(const Ordering& ord, int skip, int need) {
  if (ord.rank[skip] < need) return ord.opt_suffix[need + 1];
  return ord.opt_suffix[need] - std::max<Value>(0, ord.key[skip]);
}

using Picks = std::array<std::vector<std::pair<int, TreeState>>, kStateCount>;

// Computes the seven state values of one vertex from its children's rows.
// When `picks` is given, also records the (child rank, child state) choices
// realizing each value; witness rebuilding re-runs this on demand instead of
// storing backpointers for every vertex.
struct DpContext {
  const TreeDpTable& table;
  std::vector<Value> m1, m2, m3, m4, m5;
  Ordering ord2, ord3, ord4, ord5;
  std::vector<int> ch;

  void process(int rank, std::array<Value, kStateCount>& val, Picks* picks) {
    val.fill(kNegInf);
    if (picks)
      for (auto& p : *picks) p.clear();
    int fc = table.first_child[rank];
    int d = table.child_count[rank];
    ch.assign(table.order.begin() + fc, table.order.begin() + fc + d);
    bool at_root = rank == 0;

    if (d == 0) {
      // leaf: only "outside" and "marginal via parent, bad" are realizable
      val[kZero] = 0;
      if (!at_root) val[kMpb] = 1;
      return;
    }

    auto a = [&](int c, int s) { return table.value[fc + c][s]; };

    // Case 1: v outside; a connected solution avoiding v lives in one subtree
    {
      Value best = kNegInf;
      int best_c = -1, best_s = kZero;
      for (int c = 0; c < d; ++c) {
        for (int s : {kZero, kMpbarg, kOpbarg}) {
          if (a(c, s) > best) {
            best = a(c, s);
            best_c = c;
            best_s = s;
          }
        }
      }
      val[kZero] = best;
      if (picks && (best_s != kZero || best > 0))
        (*picks)[kZero].push_back({fc + best_c, static_cast<TreeState>(best_s)});
    }

    m1.assign(static_cast<std::size_t>(d), kNegInf);  // marginal child, parent in S
    m2.assign(static_cast<std::size_t>(d), kNegInf);  // any in-solution state
    m3.assign(static_cast<std::size_t>(d), kNegInf);  // good child states
    m4.assign(static_cast<std::size_t>(d), kNegInf);  // overprotected good
    m5.assign(static_cast<std::size_t>(d), kNegInf);  // overprotected either
    for (int c = 0; c < d; ++c) {
      m1[c] = std::max(a(c, kMpg), a(c, kMpb));
      m2[c] = std::max({a(c, kMpg), a(c, kMpb), a(c, kOpg), a(c, kOpb)});
      m3[c] = std::max(a(c, kMpg), a(c, kOpg));
      m4[c] = a(c, kOpg);
      m5[c] = std::max(a(c, kOpg), a(c, kOpb));
    }
    ord2.build(ch, m2);
    ord3.build(ch, m3);
    ord4.build(ch, m4);
    ord5.build(ch, m5);

    // picks the states realizing a child's key, deterministically
    auto pick_m1 = [&](int c) {
      return a(c, kMpg) >= a(c, kMpb) ? TreeState::m_p_g : TreeState::m_p_b;
    };
    auto pick_m2 = [&](int c) {
      Value k = m2[c];
      if (a(c, kMpg) == k) return TreeState::m_p_g;
      if (a(c, kMpb) == k) return TreeState::m_p_b;
      if (a(c, kOpg) == k) return TreeState::o_p_g;
      return TreeState::o_p_b;
    };
    auto pick_m3 = [&](int c) {
      return a(c, kMpg) >= a(c, kOpg) ? TreeState::m_p_g : TreeState::o_p_g;
    };
    auto pick_m5 = [&](int c) {
      return a(c, kOpg) >= a(c, kOpb) ? TreeState::o_p_g : TreeState::o_p_b;
    };

    // marginal states need exactly ceil(deg/2) solution neighbours, so with
    // the parent counted (p states) `need` children are mandatory and with
    // the parent outside (pbar states, root) one more is
    auto marginal_case = [&](int state, int need) {
      if (need < 0 || need > d - 1) return;  // unsatisfiable
      Value best = kNegInf;
      int best_c = -1;
      for (int c = 0; c < d; ++c) {
        if (m1[c] <= kNegInf) continue;
        Value total = sat_add(m1[c], top_sum_excluding(ord2, c, need));
        if (total > best) {
          best = total;
          best_c = c;
        }
      }
      if (best <= kNegInf) return;
      val[state] = best + 1;
      if (!picks) return;
      auto& out = (*picks)[state];
      out.push_back({fc + best_c, pick_m1(best_c)});
      int taken = 0;
      for (int t = 0; t < d && taken < need; ++t) {
        int c = ord2.pos[t];
        if (c == best_c) continue;
        out.push_back({fc + c, pick_m2(c)});
        ++taken;
      }
    };
    // overprotected good: a marginal child plus at least `need` more good
    // children, all further good children optional
    auto over_good_case = [&](int state, int need) {
      if (need < 0 || need > d - 1) return;
      Value best = kNegInf;
      int best_c = -1;
      for (int c = 0; c < d; ++c) {
        if (a(c, kMpg) <= kNegInf) continue;
        Value total = sat_add(a(c, kMpg), top_sum_excluding(ord3, c, need));
        total = sat_add(total, opt_sum_excluding(ord3, c, need));
        if (total > best) {
          best = total;
          best_c = c;
        }
      }
      if (best <= kNegInf) return;
      val[state] = best + 1;
      if (!picks) return;
      auto& out = (*picks)[state];
      out.push_back({fc + best_c, TreeState::m_p_g});
      int taken = 0;
      for (int t = 0; t < d; ++t) {
        int c = ord3.pos[t];
        if (c == best_c) continue;
        if (taken < need) {
          out.push_back({fc + c, pick_m3(c)});
          ++taken;
        } else if (m3[c] > 0) {
          out.push_back({fc + c, pick_m3(c)});
        }
      }
    };

    if (!at_root) {
      marginal_case(kMpg, half_up(d) - 2);   // Case 2
      marginal_case(kMpbarg, half_up(d) - 1);
      over_good_case(kOpg, half_up(d) - 1);  // Case 3
      over_good_case(kOpbarg, half_up(d));

      // Case 4: overprotected and bad, every solution child overprotected good
      {
        int need = half_up(d);
        if (need <= d) {
          Value total = ord4.prefix[need];
          total = sat_add(total, ord4.opt_suffix[need]);
          if (total > kNegInf) {
            val[kOpb] = total + 1;
            if (picks)
              for (int t = 0; t < d; ++t) {
                int c = ord4.pos[t];
                if (t < need || m4[c] > 0)
                  (*picks)[kOpb].push_back({fc + c, TreeState::o_p_g});
              }
          }
        }
      }
      // Case 5: marginal and bad, children in the solution all overprotected
      {
        int need = half_up(d) - 1;
        if (need <= d) {
          Value total = ord5.prefix[need];
          if (total > kNegInf) {
            val[kMpb] = total + 1;
            if (picks)
              for (int t = 0; t < need; ++t)
                (*picks)[kMpb].push_back({fc + ord5.pos[t], pick_m5(ord5.pos[t])});
          }
        }
      }
    } else {
      // the root has degree d, not d+1: same recurrences with d replaced by d-1
      marginal_case(kMpbarg, half_up(d - 1) - 1);
      over_good_case(kOpbarg, half_up(d - 1));
    }
  }
};

}  // namespace

TreeDpTable compute_table(const Graph& tree, int root) {
  int n = tree.n();
  if (n == 0) throw std::invalid_argument("empty graph is not a tree");
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  if (tree.m() != n - 1 || connected_components(tree).size() != 1)
    throw std::invalid_argument("input is not a tree");

  TreeDpTable table;
  table.root = root;

  // breadth-first relabelling: a vertex's children occupy consecutive ranks,
  // so the bottom-up pass reads child rows sequentially
  table.order.reserve(static_cast<std::size_t>(n));
  table.first_child.assign(static_cast<std::size_t>(n), 0);
  table.child_count.assign(static_cast<std::size_t>(n), 0);
  table.rank_of.assign(static_cast<std::size_t>(n), 0);
  {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    table.order.push_back(root);
    seen[root] = 1;
    for (int head = 0; head < n; ++head) {
      int v = table.order[head];
      table.first_child[head] = static_cast<int>(table.order.size());
      for (int u : tree.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = 1;
        table.order.push_back(u);
      }
      table.child_count[head] =
          static_cast<int>(table.order.size()) - table.first_child[head];
    }
    for (int rank = 0; rank < n; ++rank) table.rank_of[table.order[rank]] = rank;
  }

  table.value.resize(static_cast<std::size_t>(n));
  DpContext ctx{table, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  for (int rank = n - 1; rank >= 0; --rank)
    ctx.process(rank, table.value[rank], nullptr);
  return table;
}

namespace {

void rebuild(const TreeDpTable& table, TreeState root_state, VertexSet& out) {
  // replay the per-vertex selections along the chosen solution only
  DpContext ctx{table, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  Picks picks;
  std::array<Value, kStateCount> row;
  std::vector<std::pair<int, TreeState>> stack{{0, root_state}};
  while (!stack.empty()) {
    auto [rank, s] = stack.back();
    stack.pop_back();
    if (s != TreeState::zero) out.insert(table.order[rank]);
    ctx.process(rank, row, &picks);
    if (row[static_cast<int>(s)] != table.value[rank][static_cast<int>(s)])
      throw std::logic_error("tree DP replay diverged from the table");
    for (auto pick : picks[static_cast<int>(s)]) stack.push_back(pick);
  }
}

}  // namespace

TreeDpResult solve_tree(const Graph& tree, const TreeDpTable& table) {
  if (tree.n() == 1) {
    // the DP states cannot express a solution root without children; a lone
    // vertex is a strong alliance and removing it leaves the empty set
    return TreeDpResult{1, VertexSet::of(1, {0})};
  }
  int root = table.root;
  TreeState best_state = TreeState::m_pbar_g;
  Value best = table.at(root, TreeState::m_pbar_g);
  if (table.at(root, TreeState::o_pbar_g) > best) {
    best = table.at(root, TreeState::o_pbar_g);
    best_state = TreeState::o_pbar_g;
  }
  if (table.at(root, TreeState::zero) > best) {
    best = table.at(root, TreeState::zero);
    best_state = TreeState::zero;
  }
  TreeDpResult res;
  res.witness = VertexSet(tree.n());
  if (best <= 0) {
    res.size = 0;
    return res;
  }
  res.size = static_cast<int>(best);
  rebuild(table, best_state, res.witness);
  if (res.witness.size() != res.size ||
      !is_locally_minimal(tree, res.witness, AllianceKind::strong, true))
    throw std::logic_error("tree DP witness failed the kernel checker");
  return res;
}

TreeDpResult solve_tree(const Graph& tree, int root) {
  return solve_tree(tree, compute_table(tree, root));
}

}  // namespace alliance::treedp
