#include "alliance/tw_dp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_map>

namespace alliance::twdp {

int TreeDecomposition::width() const {
  std::size_t biggest = 0;
  for (const auto& b : bags) biggest = std::max(biggest, b.size());
  return static_cast<int>(biggest) - 1;
}

int NiceDecomposition::width() const {
  std::size_t biggest = 0;
  for (const auto& n : nodes) biggest = std::max(biggest, n.bag.size());
  return static_cast<int>(biggest) - 1;
}

namespace {

// ---- elimination orders ----------------------------------------------

// back-degree of v when S is already eliminated: neighbours of v outside S
// reachable through eliminated vertices
int back_degree(const Graph& g, std::uint32_t eliminated, int v) {
  std::uint32_t seen = 1u << v;
  std::vector<int> stack{v};
  int count = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (seen >> w & 1) continue;
      seen |= 1u << w;
      if (eliminated >> w & 1) {
        stack.push_back(w);
      } else {
        ++count;
      }
    }
  }
  return count;
}

// exact treewidth via the subset DP over elimination prefixes
std::vector<int> exact_elimination_order(const Graph& g) {
  int n = g.n();
  std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  std::vector<std::int8_t> f(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> pick(static_cast<std::size_t>(full) + 1, -1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = n + 1, best_v = -1;
    for (std::uint32_t rem = s; rem; rem &= rem - 1) {
      int v = std::countr_zero(rem);
      std::uint32_t prev = s & ~(1u << v);
      int cost = std::max<int>(f[prev], back_degree(g, prev, v));
      if (cost < best) {
        best = cost;
        best_v = v;
      }
    }
    f[s] = static_cast<std::int8_t>(best);
    pick[s] = static_cast<std::int8_t>(best_v);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = pick[s];
    s &= ~(1u << order[i]);
  }
  return order;
}

std::vector<int> min_fill_order(const Graph& g) {
  int n = g.n();
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    long long best_fill = -1;
    int best_v = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long fill = 0;
      for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
        for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
          if (!adj[*it].count(*jt)) ++fill;
      if (best_fill < 0 || fill < best_fill) {
        best_fill = fill;
        best_v = v;
      }
    }
    order.push_back(best_v);
    gone[best_v] = 1;
    for (int u : adj[best_v])
      for (int w : adj[best_v])
        if (u < w) {
          adj[u].insert(w);
          adj[w].insert(u);
        }
    for (int u : adj[best_v]) adj[u].erase(best_v);
    adj[best_v].clear();
  }
  return order;
}

TreeDecomposition from_elimination_order(const Graph& g,
                                         const std::vector<int>& order) {
  int n = g.n();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());

  TreeDecomposition td;
  std::vector<int> bag_of(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> bag{v};
    for (int u : adj[v]) bag.push_back(u);
    std::sort(bag.begin(), bag.end());
    bag_of[v] = static_cast<int>(td.bags.size());
    td.bags.push_back(std::move(bag));
    // eliminate: clique the neighbourhood, drop v
    for (int u : adj[v])
      for (int w : adj[v])
        if (u < w) {
          adj[u].insert(w);
          adj[w].insert(u);
        }
    for (int u : adj[v]) adj[u].erase(v);
  }
  // attach each bag to the bag of its earliest-later-eliminated member, or to
  // the next bag in order so the result stays a tree
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int next = -1;
    for (int u : td.bags[bag_of[v]]) {
      if (u == v) continue;
      if (next < 0 || position[u] < position[next]) next = u;
    }
    if (next >= 0)
      td.edges.push_back({bag_of[v], bag_of[next]});
    else if (i + 1 < n)
      td.edges.push_back({bag_of[v], bag_of[order[i + 1]]});
  }
  if (td.bags.empty()) td.bags.push_back({});
  return td;
}

}  // namespace

TreeDecomposition decompose(const Graph& g) {
  if (g.n() == 0) {
    TreeDecomposition td;
    td.bags.push_back({});
    return td;
  }
  std::vector<int> order =
      g.n() <= 10 ? exact_elimination_order(g) : min_fill_order(g);
  TreeDecomposition td = from_elimination_order(g, order);
  if (!valid_decomposition(g, td))
    throw std::logic_error("constructed tree decomposition is invalid");
  return td;
}

bool valid_decomposition(const Graph& g, const TreeDecomposition& td) {
  int nb = static_cast<int>(td.bags.size());
  if (nb == 0) return false;
  if (static_cast<int>(td.edges.size()) != nb - 1) return false;
  for (auto [a, b] : td.edges)
    if (a < 0 || a >= nb || b < 0 || b >= nb || a == b) return false;

  std::vector<std::vector<int>> tadj(static_cast<std::size_t>(nb));
  for (auto [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  // tree connectivity
  {
    std::vector<char> seen(static_cast<std::size_t>(nb), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : tadj[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
    }
    if (cnt != nb) return false;
  }

  auto in_bag = [&](int b, int v) {
    const auto& bag = td.bags[b];
    return std::binary_search(bag.begin(), bag.end(), v);
  };
  // every vertex somewhere, every edge in some bag, occupancy connected
  for (int v = 0; v < g.n(); ++v) {
    int home = -1;
    for (int b = 0; b < nb && home < 0; ++b)
      if (in_bag(b, v)) home = b;
    if (home < 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(nb), 0);
    std::vector<int> stack{home};
    seen[home] = 1;
    int reached = 0, total = 0;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      ++reached;
      for (int u : tadj[b])
        if (!seen[u] && in_bag(u, v)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    for (int b = 0; b < nb; ++b) total += in_bag(b, v);
    if (reached != total) return false;
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int b = 0; b < nb && !covered; ++b)
      covered = in_bag(b, u) && in_bag(b, v);
    if (!covered) return false;
  }
  return true;
}

namespace {

struct NiceBuilder {
  std::vector<NiceNode> nodes;

  int add(NiceNode node) {
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }

  // chain from an empty leaf up to `bag`
  int build_leaf_chain(const std::vector<int>& bag) {
    int cur = add(NiceNode{NodeKind::leaf, {}, -1, -1, -1});
    std::vector<int> partial;
    for (int v : bag) {
      partial.insert(std::lower_bound(partial.begin(), partial.end(), v), v);
      cur = add(NiceNode{NodeKind::introduce, partial, v, cur, -1});
    }
    return cur;
  }

  // transform a finished subtree whose top bag is `from` into bag `to`
  int morph(int cur, std::vector<int> from, const std::vector<int>& to) {
    for (int v : std::vector<int>(from)) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      from.erase(std::find(from.begin(), from.end(), v));
      cur = add(NiceNode{NodeKind::forget, from, v, cur, -1});
    }
    for (int v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      from.insert(std::lower_bound(from.begin(), from.end(), v), v);
      cur = add(NiceNode{NodeKind::introduce, from, v, cur, -1});
    }
    return cur;
  }
};

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& td) {
  int nb = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> tadj(static_cast<std::size_t>(nb));
  for (auto [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }

  NiceBuilder builder;
  // iterative DFS from bag 0; children processed before their parent
  std::vector<int> parent(static_cast<std::size_t>(nb), -1);
  std::vector<int> dfs_order;
  {
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      dfs_order.push_back(b);
      for (int c : tadj[b])
        if (parent[c] < 0) {
          parent[c] = b;
          stack.push_back(c);
        }
    }
  }
  std::vector<int> done(static_cast<std::size_t>(nb), -1);
  for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
    int b = *it;
    std::vector<int> child_tops;
    for (int c : tadj[b])
      if (parent[c] == b && c != b) child_tops.push_back(done[c]);

    int cur;
    if (child_tops.empty()) {
      cur = builder.build_leaf_chain(td.bags[b]);
    } else {
      // bring every child chain to this bag, then join pairwise
      for (int& top : child_tops)
        top = builder.morph(top, builder.nodes[top].bag, td.bags[b]);
      cur = child_tops[0];
      for (std::size_t i = 1; i < child_tops.size(); ++i)
        cur = builder.add(
            NiceNode{NodeKind::join, td.bags[b], -1, cur, child_tops[i]});
    }
    done[b] = cur;
  }
  // forget everything above the top bag; root bag is empty
  int root = builder.morph(done[0], td.bags[0], {});

  NiceDecomposition nd;
  nd.nodes = std::move(builder.nodes);
  nd.root = root;
  return nd;
}

bool valid_nice(const Graph& g, const NiceDecomposition& nd) {
  if (nd.nodes.empty() || nd.root < 0) return false;
  if (!nd.nodes[nd.root].bag.empty()) return false;

  TreeDecomposition td;
  for (const auto& node : nd.nodes) td.bags.push_back(node.bag);
  for (int i = 0; i < static_cast<int>(nd.nodes.size()); ++i) {
    const auto& node = nd.nodes[i];
    auto bag_plus = [&](const std::vector<int>& bag, int v) {
      std::vector<int> out = bag;
      out.insert(std::lower_bound(out.begin(), out.end(), v), v);
      return out;
    };
    switch (node.kind) {
      case NodeKind::leaf:
        if (!node.bag.empty() || node.child1 >= 0 || node.child2 >= 0)
          return false;
        break;
      case NodeKind::introduce: {
        if (node.child1 < 0 || node.child2 >= 0) return false;
        const auto& cb = nd.nodes[node.child1].bag;
        if (bag_plus(cb, node.vertex) != node.bag) return false;
        td.edges.push_back({i, node.child1});
        break;
      }
      case NodeKind::forget: {
        if (node.child1 < 0 || node.child2 >= 0) return false;
        const auto& cb = nd.nodes[node.child1].bag;
        if (bag_plus(node.bag, node.vertex) != cb) return false;
        td.edges.push_back({i, node.child1});
        break;
      }
      case NodeKind::join: {
        if (node.child1 < 0 || node.child2 < 0) return false;
        if (nd.nodes[node.child1].bag != node.bag ||
            nd.nodes[node.child2].bag != node.bag)
          return false;
        td.edges.push_back({i, node.child1});
        td.edges.push_back({i, node.child2});
        break;
      }
    }
  }
  return valid_decomposition(g, td);
}

// ---- the table DP ------------------------------------------------------

std::size_t TwRecordHash::operator()(const TwRecord& r) const {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(r.in_bag);
  mix(r.good);
  mix(static_cast<std::size_t>(r.a));
  mix(static_cast<std::size_t>(r.alpha));
  mix(static_cast<std::size_t>(r.beta));
  for (auto v : r.x) mix(static_cast<std::size_t>(v));
  for (auto v : r.z) mix(static_cast<std::size_t>(v));
  return h;
}

namespace {

struct Provenance {
  enum Kind : std::uint8_t { leaf, copy, intro_in, forget_in, join } kind = leaf;
  std::int32_t child1 = -1;
  std::int32_t child2 = -1;
};

struct Table {
  std::vector<TwRecord> records;
  std::vector<Provenance> prov;
  std::unordered_map<TwRecord, int, TwRecordHash> index;

  void insert(TwRecord rec, Provenance p) {
    auto [it, fresh] = index.try_emplace(rec, static_cast<int>(records.size()));
    if (fresh) {
      records.push_back(std::move(rec));
      prov.push_back(p);  // first writer wins
    }
  }
};

bool protected_at(int d_in, int deg) { return 2 * d_in >= deg - 1; }

bool marginal_at(int d_in, int deg) {
  return d_in >= 1 && (2 * d_in == deg - 1 || 2 * d_in == deg);
}

// insert a zero bit at position pi
std::uint32_t widen_mask(std::uint32_t m, int pi) {
  std::uint32_t lo = (1u << pi) - 1;
  return (m & lo) | ((m & ~lo) << 1);
}
// drop the bit at position pi
std::uint32_t narrow_mask(std::uint32_t m, int pi) {
  std::uint32_t lo = (1u << pi) - 1;
  return (m & lo) | ((m >> 1) & ~lo);
}

struct Engine {
  const Graph& g;
  const NiceDecomposition& nd;
  std::vector<Table> tables;
  std::size_t peak = 0;

  explicit Engine(const Graph& graph, const NiceDecomposition& nice)
      : g(graph), nd(nice) {}

  // adjacency masks of a node's bag members against that same bag
  std::vector<std::uint32_t> bag_adjacency(const std::vector<int>& bag) const {
    int b = static_cast<int>(bag.size());
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(b), 0);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j)
        if (i != j && g.adjacent(bag[i], bag[j])) nbr[i] |= 1u << j;
    return nbr;
  }

  void run() {
    int count = static_cast<int>(nd.nodes.size());
    tables.assign(static_cast<std::size_t>(count), {});
    // children have smaller indices by construction of make_nice, but the
    // decomposition may come from outside; process in dependency order
    std::vector<int> order = post_order();
    for (int t : order) {
      const NiceNode& node = nd.nodes[t];
      switch (node.kind) {
        case NodeKind::leaf:
          do_leaf(t);
          break;
        case NodeKind::introduce:
          do_introduce(t);
          break;
        case NodeKind::forget:
          do_forget(t);
          break;
        case NodeKind::join:
          do_join(t);
          break;
      }
      peak = std::max(peak, tables[t].records.size());
      // children tables stay alive for witness reconstruction
    }
  }

  std::vector<int> post_order() const {
    std::vector<int> order;
    std::vector<std::pair<int, bool>> stack{{nd.root, false}};
    while (!stack.empty()) {
      auto [t, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        order.push_back(t);
        continue;
      }
      stack.push_back({t, true});
      const NiceNode& node = nd.nodes[t];
      if (node.child1 >= 0) stack.push_back({node.child1, false});
      if (node.child2 >= 0) stack.push_back({node.child2, false});
    }
    return order;
  }

  void do_leaf(int t) {
    TwRecord rec;
    rec.z.assign(1, 0);
    tables[t].insert(std::move(rec), Provenance{Provenance::leaf, -1, -1});
  }

  void do_introduce(int t) {
    const NiceNode& node = nd.nodes[t];
    const auto& bag = node.bag;
    int b = static_cast<int>(bag.size());
    int pi = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), node.vertex) -
                              bag.begin());
    int deg_i = g.degree(node.vertex);
    auto nbr = bag_adjacency(bag);
    const Table& child = tables[node.child1];
    std::uint32_t subsets = 1u << b;

    for (int ci = 0; ci < static_cast<int>(child.records.size()); ++ci) {
      const TwRecord& r = child.records[ci];

      // v_i stays outside: same signature over the widened bag
      {
        TwRecord out;
        out.in_bag = widen_mask(r.in_bag, pi);
        out.good = widen_mask(r.good, pi);
        out.a = r.a;
        out.alpha = r.alpha;
        out.beta = r.beta;
        out.x.assign(static_cast<std::size_t>(b), 0);
        for (int j = 0; j < b; ++j)
          if (j != pi && (out.in_bag >> j & 1))
            out.x[j] = r.x[j > pi ? j - 1 : j];
        out.z.assign(subsets, 0);
        for (std::uint32_t s = 1; s < subsets; ++s)
          if ((s & out.in_bag) == s && !(s >> pi & 1))
            out.z[s] = r.z[narrow_mask(s, pi)];
        tables[t].insert(std::move(out), Provenance{Provenance::copy, ci, -1});
      }

      // v_i joins the solution: it has no forgotten neighbours yet, so it
      // enters bad with an empty z row
      {
        TwRecord out;
        out.in_bag = widen_mask(r.in_bag, pi) | (1u << pi);
        out.good = widen_mask(r.good, pi);
        out.a = r.a + 1;
        out.beta = r.beta;
        out.x.assign(static_cast<std::size_t>(b), 0);
        int d_new = std::popcount(nbr[pi] & out.in_bag);
        int delta = protected_at(d_new, deg_i) ? 1 : 0;
        for (int j = 0; j < b; ++j) {
          if (j == pi || !(out.in_bag >> j & 1)) continue;
          int old = r.x[j > pi ? j - 1 : j];
          int now = old + (nbr[pi] >> j & 1);
          out.x[j] = now;
          int deg_j = g.degree(bag[j]);
          if (!protected_at(old, deg_j) && protected_at(now, deg_j)) ++delta;
        }
        out.x[pi] = d_new;
        out.alpha = r.alpha + delta;
        out.z.assign(subsets, 0);
        for (std::uint32_t s = 1; s < subsets; ++s)
          if ((s & out.in_bag) == s && !(s >> pi & 1))
            out.z[s] = r.z[narrow_mask(s, pi)];
        tables[t].insert(std::move(out), Provenance{Provenance::intro_in, ci, -1});
      }
    }
  }

  void do_forget(int t) {
    const NiceNode& node = nd.nodes[t];
    const auto& child_bag = nd.nodes[node.child1].bag;
    int cb = static_cast<int>(child_bag.size());
    int pi = static_cast<int>(std::lower_bound(child_bag.begin(), child_bag.end(),
                                               node.vertex) -
                              child_bag.begin());
    int deg_i = g.degree(node.vertex);
    auto child_nbr = bag_adjacency(child_bag);
    const Table& child = tables[node.child1];
    int b = cb - 1;
    std::uint32_t subsets = 1u << b;

    for (int ci = 0; ci < static_cast<int>(child.records.size()); ++ci) {
      const TwRecord& r = child.records[ci];
      if (!(r.in_bag >> pi & 1)) {
        // v_i was not in the solution: drop the position
        TwRecord out;
        out.in_bag = narrow_mask(r.in_bag, pi);
        out.good = narrow_mask(r.good, pi);
        out.a = r.a;
        out.alpha = r.alpha;
        out.beta = r.beta;
        out.x.assign(static_cast<std::size_t>(b), 0);
        for (int j = 0; j < b; ++j)
          if (out.in_bag >> j & 1) out.x[j] = r.x[j >= pi ? j + 1 : j];
        out.z.assign(subsets, 0);
        for (std::uint32_t s = 1; s < subsets; ++s)
          if ((s & out.in_bag) == s) out.z[s] = r.z[widen_mask(s, pi)];
        tables[t].insert(std::move(out), Provenance{Provenance::copy, ci, -1});
        continue;
      }

      // v_i leaves the bag with its solution degree final
      bool marginal = marginal_at(r.x[pi], deg_i);
      bool was_good = r.good >> pi & 1;
      std::uint32_t na_child = child_nbr[pi] & r.in_bag & ~(1u << pi);

      TwRecord out;
      out.in_bag = narrow_mask(r.in_bag, pi);
      out.a = r.a;
      out.alpha = r.alpha;
      out.x.assign(static_cast<std::size_t>(b), 0);
      for (int j = 0; j < b; ++j)
        if (out.in_bag >> j & 1) out.x[j] = r.x[j >= pi ? j + 1 : j];
      out.z.assign(subsets, 0);

      if (!marginal) {
        // cases 1 and 2: nobody gains a marginal neighbour; if v_i is bad it
        // joins the pool of bad forgotten vertices
        out.good = narrow_mask(r.good, pi);
        out.beta = r.beta;
        for (std::uint32_t s = 1; s < subsets; ++s) {
          if ((s & out.in_bag) != s) continue;
          std::uint32_t sc = widen_mask(s, pi);
          out.z[s] = r.z[sc];
          if (!was_good && (sc & ~na_child) == 0) out.z[s] += 1;
        }
      } else {
        // cases 3 and 4: v_i certifies its solution neighbours; bad forgotten
        // neighbours of v_i turn good and leave every z count they were in
        std::uint32_t na_parent = narrow_mask(na_child, pi);
        out.good = narrow_mask(r.good, pi) | na_parent;
        out.beta = r.beta + r.z[1u << pi] +
                   std::popcount(out.good & ~narrow_mask(r.good, pi));
        for (std::uint32_t s = 1; s < subsets; ++s) {
          if ((s & out.in_bag) != s) continue;
          std::uint32_t sc = widen_mask(s, pi);
          out.z[s] = r.z[sc] - r.z[sc | (1u << pi)];
          if (!was_good && (sc & ~na_child) == 0) out.z[s] += 1;
        }
      }
      tables[t].insert(std::move(out), Provenance{Provenance::forget_in, ci, -1});
    }
  }

  void do_join(int t) {
    const NiceNode& node = nd.nodes[t];
    const auto& bag = node.bag;
    int b = static_cast<int>(bag.size());
    auto nbr = bag_adjacency(bag);
    std::vector<int> deg(static_cast<std::size_t>(b));
    for (int j = 0; j < b; ++j) deg[j] = g.degree(bag[j]);
    const Table& left = tables[node.child1];
    const Table& right = tables[node.child2];
    std::uint32_t subsets = 1u << b;

    // bucket the right child's records by shared bag subset
    std::unordered_map<std::uint32_t, std::vector<int>> by_subset;
    for (int rj = 0; rj < static_cast<int>(right.records.size()); ++rj)
      by_subset[right.records[rj].in_bag].push_back(rj);

    for (int li = 0; li < static_cast<int>(left.records.size()); ++li) {
      const TwRecord& r1 = left.records[li];
      auto bucket = by_subset.find(r1.in_bag);
      if (bucket == by_subset.end()) continue;
      for (int rj : bucket->second) {
        const TwRecord& r2 = right.records[rj];
        TwRecord out;
        out.in_bag = r1.in_bag;
        out.good = r1.good | r2.good;
        out.a = r1.a + r2.a - std::popcount(r1.in_bag);
        out.beta = r1.beta + r2.beta - std::popcount(r1.good & r2.good);
        out.x.assign(static_cast<std::size_t>(b), 0);
        int alpha = r1.alpha + r2.alpha;
        for (int j = 0; j < b; ++j) {
          if (!(out.in_bag >> j & 1)) continue;
          int shared = std::popcount(nbr[j] & out.in_bag);
          out.x[j] = r1.x[j] + r2.x[j] - shared;
          bool p1 = protected_at(r1.x[j], deg[j]);
          bool p2 = protected_at(r2.x[j], deg[j]);
          if (p1 && p2) --alpha;                                    // counted twice
          if (!p1 && !p2 && protected_at(out.x[j], deg[j])) ++alpha;  // crossed now
        }
        out.alpha = alpha;
        out.z.assign(subsets, 0);
        for (std::uint32_t s = 1; s < subsets; ++s)
          if ((s & out.in_bag) == s) out.z[s] = r1.z[s] + r2.z[s];
        tables[t].insert(std::move(out), Provenance{Provenance::join, li, rj});
      }
    }
  }

  VertexSet rebuild(int root_record) const {
    VertexSet out(g.n());
    std::vector<std::pair<int, int>> stack{{nd.root, root_record}};
    while (!stack.empty()) {
      auto [t, idx] = stack.back();
      stack.pop_back();
      const Provenance& p = tables[t].prov[idx];
      const NiceNode& node = nd.nodes[t];
      switch (p.kind) {
        case Provenance::leaf:
          break;
        case Provenance::copy:
        case Provenance::forget_in:
          stack.push_back({node.child1, p.child1});
          break;
        case Provenance::intro_in:
          out.insert(node.vertex);
          stack.push_back({node.child1, p.child1});
          break;
        case Provenance::join:
          stack.push_back({node.child1, p.child1});
          stack.push_back({node.child2, p.child2});
          break;
      }
    }
    return out;
  }
};

}  // namespace

std::vector<NodeTable> dp_tables(const Graph& g, const NiceDecomposition& nd) {
  if (!valid_nice(g, nd))
    throw std::invalid_argument("invalid nice tree decomposition");
  Engine engine(g, nd);
  engine.run();
  std::vector<NodeTable> out;
  out.reserve(engine.tables.size());
  for (auto& table : engine.tables) out.push_back(NodeTable{table.records});
  return out;
}

DpResult dp_solve(const Graph& g, const NiceDecomposition& nd) {
  if (!valid_nice(g, nd))
    throw std::invalid_argument("invalid nice tree decomposition");
  if (nd.width() > 8)
    throw guard_error("tw-dp: table width above 8 is not practical");

  Engine engine(g, nd);
  engine.run();

  DpResult result;
  result.width_used = nd.width();
  result.records_peak = engine.peak;
  result.witness = VertexSet(g.n());

  const Table& root = engine.tables[nd.root];
  int best = -1, best_idx = -1;
  for (int i = 0; i < static_cast<int>(root.records.size()); ++i) {
    const TwRecord& r = root.records[i];
    if (r.a == r.alpha && r.a == r.beta && r.a > best) {
      best = r.a;
      best_idx = i;
    }
  }
  if (best > 0) {
    result.size = best;
    result.witness = engine.rebuild(best_idx);
  }

  // the root condition beta = a requires a marginal neighbour for everyone,
  // which no singleton can provide; {v} is an alliance iff deg(v) <= 1
  if (result.size < 1) {
    for (int v = 0; v < g.n(); ++v) {
      if (g.degree(v) <= 1) {
        result.size = 1;
        result.witness = VertexSet(g.n());
        result.witness.insert(v);
        break;
      }
    }
  }

  if (result.size > 0 &&
      (result.witness.size() != result.size ||
       !is_locally_minimal(g, result.witness, AllianceKind::ordinary, false)))
    throw std::logic_error("tw-dp witness failed the kernel checker");
  return result;
}

DpResult dp_solve(const Graph& g) {
  return dp_solve(g, make_nice(decompose(g)));
}

}  // namespace alliance::twdp
