#include "alliance/reductions.hpp"

#include <algorithm>
#include <map>

namespace alliance::reductions {

bool check_annotated(const AnnotatedInstance& inst, const VertexSet& s) {
  if (inst.variant == Variant::exact) {
    if (static_cast<long long>(s.size()) != inst.k) return false;
  } else {
    if (static_cast<long long>(s.size()) < inst.k) return false;
  }
  for (int v : inst.necessary.members())
    if (!s.contains(v)) return false;
  for (int v : s.members())
    if (inst.forbidden.contains(v)) return false;
  return is_locally_minimal(inst.graph, s, AllianceKind::ordinary, inst.connected);
}

// ---- minimum maximal matching -------------------------------------------

MmmInstance reduce_mmm_to_lmda(const Graph& g, long long k, bool require_cubic) {
  int n = g.n();
  int m = static_cast<int>(g.m());
  if (require_cubic)
    for (int v = 0; v < n; ++v)
      if (g.degree(v) != 3)
        throw std::invalid_argument("reduce_mmm_to_lmda: source is not cubic");

  MmmInstance inst;
  MmmLayout& lay = inst.layout;
  lay.n = n;
  lay.m = m;
  lay.b_base = n;
  lay.vsq_base = n + m;
  lay.esq_base = n + m + n;
  lay.cycle_base = n + m + n + 2 * m;
  lay.cycle_len = 6 * (n + m);
  lay.hub_count = n + 2 * m;

  long long total =
      static_cast<long long>(lay.cycle_base) +
      static_cast<long long>(lay.hub_count) * lay.cycle_len;

  std::vector<std::pair<int, int>> edges;
  // incidence between source vertices and edge vertices
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    edges.push_back({u, lay.b_base + e});
    edges.push_back({v, lay.b_base + e});
  }
  // hubs hang off their owners
  for (int v = 0; v < n; ++v) edges.push_back({v, lay.vsq_base + v});
  for (int e = 0; e < m; ++e) {
    edges.push_back({lay.b_base + e, lay.esq_base + 2 * e});
    edges.push_back({lay.b_base + e, lay.esq_base + 2 * e + 1});
  }
  // a cycle per hub, every cycle vertex also adjacent to the hub
  for (int hub = 0; hub < lay.hub_count; ++hub) {
    int start = lay.cycle_start(hub);
    int owner = lay.hub_id(hub);
    for (int i = 0; i < lay.cycle_len; ++i) {
      edges.push_back({start + i, start + (i + 1) % lay.cycle_len});
      edges.push_back({owner, start + i});
    }
  }

  inst.graph = Graph::from_edges(static_cast<int>(total), std::move(edges));
  inst.k_prime = 4LL * (n + m) * (n + 2LL * m) + (n + m - k);
  return inst;
}

VertexSet mmm_witness(const Graph& source,
                      const std::vector<std::pair<int, int>>& matching,
                      const MmmInstance& inst) {
  const MmmLayout& lay = inst.layout;
  // index the matching by source edge position and verify maximality
  std::map<std::pair<int, int>, int> edge_index;
  for (int e = 0; e < lay.m; ++e) {
    auto [u, v] = source.edges()[e];
    edge_index[std::minmax(u, v)] = e;
  }
  std::vector<char> in_matching(static_cast<std::size_t>(lay.m), 0);
  std::vector<char> covered(static_cast<std::size_t>(lay.n), 0);
  for (auto [u, v] : matching) {
    auto it = edge_index.find(std::minmax(u, v));
    if (it == edge_index.end())
      throw std::invalid_argument("mmm_witness: matching edge not in the graph");
    if (covered[u] || covered[v])
      throw std::invalid_argument("mmm_witness: edges share an endpoint");
    covered[u] = covered[v] = 1;
    in_matching[it->second] = 1;
  }
  for (auto [u, v] : source.edges())
    if (!covered[u] && !covered[v])
      throw std::invalid_argument("mmm_witness: matching is not maximal");

  VertexSet d(inst.graph.n());
  for (int v = 0; v < lay.n; ++v) d.insert(v);
  for (int e = 0; e < lay.m; ++e)
    if (!in_matching[e]) d.insert(lay.b_base + e);
  for (int hub = 0; hub < lay.hub_count; ++hub) {
    int start = lay.cycle_start(hub);
    for (int i = 0; i < lay.cycle_len; ++i)
      if ((i + 1) % 3 != 0) d.insert(start + i);  // keep x_1,x_2, skip x_3, ...
  }
  return d;
}

// ---- minimum maximum outdegree ------------------------------------------

MmoInstance reduce_mmo_to_lmda_fn(const WeightedGraph& wg, long long r) {
  const Graph& g = wg.base;
  int n = g.n();
  int m = static_cast<int>(g.m());
  for (long long w : wg.weight)
    if (w < 1) throw std::invalid_argument("weights must be >= 1");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");

  MmoInstance inst;
  MmoLayout& lay = inst.layout;
  lay.n = n;
  lay.m = m;
  lay.r = r;
  lay.omega = wg.total_weight();

  long long next = n;
  auto take = [&next](long long count) {
    int base = static_cast<int>(next);
    next += count;
    return base;
  };

  lay.vsq.resize(static_cast<std::size_t>(n));
  lay.h_base.resize(static_cast<std::size_t>(n));
  lay.hsq_base.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    lay.vsq[v] = take(1);
    lay.h_base[v] = take(2 * r);
    lay.hsq_base[v] = take(2 * r);
  }
  lay.uv_base.resize(static_cast<std::size_t>(m));
  lay.uvsq_base.resize(static_cast<std::size_t>(m));
  lay.vu_base.resize(static_cast<std::size_t>(m));
  lay.vusq_base.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    long long w = wg.weight[e];
    lay.uv_base[e] = take(w);
    lay.uvsq_base[e] = take(w);
    lay.vu_base[e] = take(w);
    lay.vusq_base[e] = take(w);
  }
  // complementary pairs: (u_i, v_i) for i <= w and (u_{i+1}, v_i) for i < w
  for (int e = 0; e < m; ++e) {
    long long w = wg.weight[e];
    for (long long i = 0; i < w; ++i) {
      ComplementaryPair c;
      c.first = lay.uv_base[e] + static_cast<int>(i);
      c.second = lay.vu_base[e] + static_cast<int>(i);
      lay.pairs.push_back(c);
      if (i + 1 < w) {
        ComplementaryPair c2;
        c2.first = lay.uv_base[e] + static_cast<int>(i + 1);
        c2.second = lay.vu_base[e] + static_cast<int>(i);
        lay.pairs.push_back(c2);
      }
    }
  }
  for (auto& c : lay.pairs) {
    c.tri = take(1);
    c.sq = take(1);
    c.tri2 = take(1);
  }

  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    edges.push_back({v, lay.vsq[v]});
    for (long long i = 0; i < 2 * r; ++i) {
      edges.push_back({v, lay.h_base[v] + static_cast<int>(i)});
      edges.push_back({lay.h_base[v] + static_cast<int>(i),
                       lay.hsq_base[v] + static_cast<int>(i)});
    }
  }
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    long long w = wg.weight[e];
    for (long long i = 0; i < w; ++i) {
      edges.push_back({u, lay.uv_base[e] + static_cast<int>(i)});
      edges.push_back({u, lay.uvsq_base[e] + static_cast<int>(i)});
      edges.push_back({lay.vu_base[e] + static_cast<int>(i), v});
      edges.push_back({lay.vusq_base[e] + static_cast<int>(i), v});
    }
  }
  for (const auto& c : lay.pairs) {
    edges.push_back({c.tri, c.sq});
    edges.push_back({c.tri, c.tri2});
    edges.push_back({c.tri2, c.sq});
    edges.push_back({c.first, c.tri});
    edges.push_back({c.tri, c.second});
  }

  AnnotatedInstance& annotated = inst.annotated;
  annotated.graph = Graph::from_edges(static_cast<int>(next), std::move(edges));
  annotated.variant = Variant::with_forbidden_necessary;
  annotated.connected = false;
  annotated.necessary = VertexSet(annotated.graph.n());
  annotated.forbidden = VertexSet(annotated.graph.n());
  for (int v = 0; v < n; ++v) {
    annotated.necessary.insert(v);
    annotated.forbidden.insert(lay.vsq[v]);
    for (long long i = 0; i < 2 * r; ++i)
      annotated.forbidden.insert(lay.hsq_base[v] + static_cast<int>(i));
  }
  for (int e = 0; e < m; ++e) {
    long long w = wg.weight[e];
    for (long long i = 0; i < w; ++i) {
      annotated.forbidden.insert(lay.uvsq_base[e] + static_cast<int>(i));
      annotated.forbidden.insert(lay.vusq_base[e] + static_cast<int>(i));
    }
  }
  for (const auto& c : lay.pairs) {
    annotated.necessary.insert(c.tri);
    annotated.necessary.insert(c.tri2);
    annotated.forbidden.insert(c.sq);
  }

  long long pair_count = static_cast<long long>(lay.pairs.size());
  // every orientation witness has this size, so it serves as k; the printed
  // closed form undercounts it by omega and ships alongside
  annotated.k = n * (r + 1) + 2 * lay.omega + 2 * pair_count;
  inst.closed_form_k = n * (r + 1) + lay.omega + 2 * pair_count;
  return inst;
}

VertexSet mmo_witness(const WeightedGraph& wg, long long r,
                      const std::vector<int>& head, const MmoInstance& inst) {
  const Graph& g = wg.base;
  int n = g.n();
  int m = static_cast<int>(g.m());
  if (static_cast<int>(head.size()) != m)
    throw std::invalid_argument("mmo_witness: orientation size mismatch");
  std::vector<long long> out_w(static_cast<std::size_t>(n), 0);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    if (head[e] != u && head[e] != v)
      throw std::invalid_argument("mmo_witness: head is not an endpoint");
    out_w[head[e] == v ? u : v] += wg.weight[e];
  }
  for (int v = 0; v < n; ++v)
    if (out_w[v] > r)
      throw std::invalid_argument("mmo_witness: orientation is infeasible");

  const MmoLayout& lay = inst.layout;
  VertexSet s(inst.annotated.graph.n());
  for (int v : inst.annotated.necessary.members()) s.insert(v);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    // edge oriented u -> v contributes the V_vu block (attached to v)
    int base = head[e] == v ? lay.vu_base[e] : lay.uv_base[e];
    for (long long i = 0; i < wg.weight[e]; ++i)
      s.insert(base + static_cast<int>(i));
  }
  for (int v = 0; v < n; ++v)
    for (long long i = 0; i < r + out_w[v]; ++i)
      s.insert(lay.h_base[v] + static_cast<int>(i));
  return s;
}

// ---- FN -> connected FN ---------------------------------------------------

ConnectedFnResult fn_to_connected_fn(const AnnotatedInstance& inst) {
  if (inst.variant != Variant::with_forbidden_necessary)
    throw std::invalid_argument("fn_to_connected_fn expects an FN instance");
  int n = inst.graph.n();

  ConnectedFnResult res;
  res.n_source = n;
  res.hub = n;
  res.taboo = n + 1;
  res.ring_base = n + 2;
  res.pendant_base = n + 2 + 4 * n;
  int total = n + 2 + 4 * n + 16 * n;

  std::vector<std::pair<int, int>> edges = inst.graph.edges();
  for (int v = 0; v < n; ++v) {
    edges.push_back({v, res.hub});
    edges.push_back({v, res.taboo});
  }
  for (int i = 0; i < 4 * n; ++i) {
    int hi = res.ring_base + i;
    edges.push_back({res.hub, hi});
    edges.push_back({hi, res.ring_base + (i + 1) % (4 * n)});
    for (int j = 0; j < 4; ++j) edges.push_back({hi, res.pendant_base + 4 * i + j});
  }

  AnnotatedInstance& out = res.annotated;
  out.graph = Graph::from_edges(total, std::move(edges));
  out.variant = Variant::with_forbidden_necessary;
  out.connected = true;
  out.k = inst.k + 4LL * n + 1;
  out.necessary = VertexSet(total);
  out.forbidden = VertexSet(total);
  for (int v : inst.necessary.members()) out.necessary.insert(v);
  for (int v : inst.forbidden.members()) out.forbidden.insert(v);
  out.necessary.insert(res.hub);
  out.forbidden.insert(res.taboo);
  for (int i = 0; i < 4 * n; ++i) {
    out.necessary.insert(res.ring_base + i);
    for (int j = 0; j < 4; ++j) out.forbidden.insert(res.pendant_base + 4 * i + j);
  }
  return res;
}

VertexSet ConnectedFnResult::transform_witness(const VertexSet& s) const {
  VertexSet out(annotated.graph.n());
  for (int v : s.members()) out.insert(v);
  out.insert(hub);
  for (int i = 0; i < 4 * n_source; ++i) out.insert(ring_base + i);
  return out;
}

// ---- FN -> F ---------------------------------------------------------------

FnToFResult fn_to_f(const AnnotatedInstance& inst) {
  if (inst.variant != Variant::with_forbidden_necessary)
    throw std::invalid_argument("fn_to_f expects an FN instance");
  int n = inst.graph.n();

  FnToFResult res;
  res.n_source = n;
  res.source_necessary = inst.necessary.members();
  long long block = 2 + 4LL * n + 16LL * n;
  long long total = n + block * static_cast<long long>(res.source_necessary.size());
  if (total > kMaterializeCap)
    throw guard_error("fn_to_f: output would have " + std::to_string(total) +
                      " vertices");
  for (std::size_t idx = 0; idx < res.source_necessary.size(); ++idx) {
    long long base = n + block * static_cast<long long>(idx);
    res.u1.push_back(static_cast<int>(base));
    res.u2.push_back(static_cast<int>(base + 1));
    res.ring_base.push_back(static_cast<int>(base + 2));
    res.pendant_base.push_back(static_cast<int>(base + 2 + 4LL * n));
  }

  std::vector<std::pair<int, int>> edges = inst.graph.edges();
  for (std::size_t idx = 0; idx < res.source_necessary.size(); ++idx) {
    int u = res.source_necessary[idx];
    edges.push_back({res.u1[idx], u});
    edges.push_back({res.u2[idx], u});
    int ring = res.ring_base[idx];
    for (int i = 0; i < 4 * n; ++i) {
      edges.push_back({res.u1[idx], ring + i});
      edges.push_back({ring + i, ring + (i + 1) % (4 * n)});
      for (int j = 0; j < 4; ++j)
        edges.push_back({ring + i, res.pendant_base[idx] + 4 * i + j});
    }
  }

  AnnotatedInstance& out = res.annotated;
  out.graph = Graph::from_edges(static_cast<int>(total), std::move(edges));
  out.variant = Variant::with_forbidden;
  out.connected = inst.connected;
  out.k = inst.k + (4LL * n + 1) * static_cast<long long>(res.source_necessary.size());
  out.necessary = VertexSet(static_cast<int>(total));
  out.forbidden = VertexSet(static_cast<int>(total));
  for (int v : inst.forbidden.members()) out.forbidden.insert(v);
  for (std::size_t idx = 0; idx < res.source_necessary.size(); ++idx) {
    out.forbidden.insert(res.u2[idx]);
    for (int i = 0; i < 16 * n; ++i)
      out.forbidden.insert(res.pendant_base[idx] + i);
  }
  return res;
}

VertexSet FnToFResult::transform_witness(const VertexSet& s) const {
  VertexSet out(annotated.graph.n());
  for (int v : s.members()) out.insert(v);
  for (std::size_t idx = 0; idx < source_necessary.size(); ++idx) {
    out.insert(u1[idx]);
    for (int i = 0; i < 4 * n_source; ++i) out.insert(ring_base[idx] + i);
  }
  return out;
}

// ---- F -> exact --------------------------------------------------------------

FToExactResult f_to_exact(const AnnotatedInstance& inst) {
  if (inst.variant != Variant::with_forbidden)
    throw std::invalid_argument("f_to_exact expects an F instance");
  int n = inst.graph.n();
  if (inst.k > n)
    throw std::invalid_argument("f_to_exact requires k <= n");

  long long total =
      n + 2LL * n * static_cast<long long>(inst.forbidden.size());
  if (total > kMaterializeCap)
    throw guard_error("f_to_exact: output would have " + std::to_string(total) +
                      " vertices");

  std::vector<std::pair<int, int>> edges = inst.graph.edges();
  long long next = n;
  for (int u : inst.forbidden.members())
    for (int i = 0; i < 2 * n; ++i)
      edges.push_back({u, static_cast<int>(next++)});

  FToExactResult res;
  res.n_source = n;
  AnnotatedInstance& out = res.annotated;
  out.graph = Graph::from_edges(static_cast<int>(total), std::move(edges));
  out.variant = Variant::exact;
  out.connected = inst.connected;
  out.k = inst.k;
  out.necessary = VertexSet(static_cast<int>(total));
  out.forbidden = VertexSet(static_cast<int>(total));
  return res;
}

VertexSet FToExactResult::transform_witness(const VertexSet& s) const {
  VertexSet out(annotated.graph.n());
  for (int v : s.members()) out.insert(v);
  return out;
}

}  // namespace alliance::reductions
