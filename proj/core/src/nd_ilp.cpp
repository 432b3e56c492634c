#include "alliance/nd_ilp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace alliance::ndilp {

bool TypePartition::adjacent(int i, int j) const {
  const auto& a = type_adj[i];
  return std::binary_search(a.begin(), a.end(), j);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TypePartition compute_type_partition(const Graph& g) {
  int n = g.n();
  UnionFind uf(n);

  // same open neighbourhood (non-adjacent twins) or same closed neighbourhood
  // (adjacent twins); the same-type relation is the union of both
  std::map<std::vector<int>, int> by_open, by_closed;
  for (int v = 0; v < n; ++v) {
    std::vector<int> open = g.neighbors(v);
    auto [it_o, new_o] = by_open.try_emplace(open, v);
    if (!new_o) uf.unite(v, it_o->second);
    std::vector<int> closed = open;
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    auto [it_c, new_c] = by_closed.try_emplace(closed, v);
    if (!new_c) uf.unite(v, it_c->second);
  }

  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);

  TypePartition p;
  for (auto& [root, members] : groups) p.classes.push_back(members);
  std::sort(p.classes.begin(), p.classes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });

  int k = p.k();
  p.kind.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto& c = p.classes[i];
    if (c.size() == 1) {
      p.kind[i] = ClassKind::clique;  // canonical choice for singletons
      continue;
    }
    bool clique = g.adjacent(c[0], c[1]);
    p.kind[i] = clique ? ClassKind::clique : ClassKind::independent;
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t y = x + 1; y < c.size(); ++y)
        if (g.adjacent(c[x], c[y]) != clique)
          throw std::logic_error("type class is neither clique nor independent");
  }

  p.type_adj.assign(static_cast<std::size_t>(k), {});
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool adj = g.adjacent(p.classes[i][0], p.classes[j][0]);
      for (int u : p.classes[i])
        for (int v : p.classes[j])
          if (g.adjacent(u, v) != adj)
            throw std::logic_error("type classes are not completely joined or separated");
      if (adj) {
        p.type_adj[i].push_back(j);
        p.type_adj[j].push_back(i);
      }
    }
  }
  return p;
}

ClassLabel label_of(ClassKind kind, ClassOption opt) {
  switch (opt) {
    case ClassOption::empty:
      return ClassLabel::none;
    case ClassOption::one_marginal:
      return kind == ClassKind::clique ? ClassLabel::c1 : ClassLabel::ind;
    case ClassOption::many_marginal:
      return kind == ClassKind::clique ? ClassLabel::cgt1 : ClassLabel::ind;
    case ClassOption::one_over:
    case ClassOption::many_over:
      return ClassLabel::op;
  }
  return ClassLabel::none;
}

bool validate_labels(const TypePartition& p, const OptionAssignment& a) {
  int k = p.k();
  std::vector<ClassLabel> label(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) label[i] = label_of(p.kind[i], a.option[i]);

  auto marginal_label = [](ClassLabel l) {
    return l == ClassLabel::c1 || l == ClassLabel::cgt1 || l == ClassLabel::ind;
  };
  for (int i = 0; i < k; ++i) {
    if (label[i] != ClassLabel::op && label[i] != ClassLabel::c1 &&
        label[i] != ClassLabel::ind)
      continue;
    bool ok = false;
    for (int j : p.type_adj[i])
      if (marginal_label(label[j])) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

IlpModel build_ilp(const TypePartition& p, const OptionAssignment& a) {
  if (!validate_labels(p, a))
    throw std::invalid_argument("build_ilp: labelling rules violated");
  int k = p.k();
  IlpModel model;
  std::vector<int> var_of(static_cast<std::size_t>(k), -1);
  for (int i = 0; i < k; ++i) {
    ClassOption opt = a.option[i];
    if (opt == ClassOption::empty) continue;
    long long size = static_cast<long long>(p.classes[i].size());
    bool many = opt == ClassOption::many_marginal || opt == ClassOption::many_over;
    var_of[i] = static_cast<int>(model.vars.size());
    model.vars.push_back(IlpVariable{i, many ? 2 : 1, many ? size : 1});
  }

  for (int j = 0; j < k; ++j) {
    ClassLabel label = label_of(p.kind[j], a.option[j]);
    if (label == ClassLabel::none) continue;
    bool closed = p.kind[j] == ClassKind::clique;

    IlpConstraint row;
    long long degree_sum = 0;
    auto add_class = [&](int i) {
      degree_sum += static_cast<long long>(p.classes[i].size());
      if (var_of[i] >= 0) row.terms.push_back({var_of[i], 2});
    };
    for (int i : p.type_adj[j]) add_class(i);
    if (closed) add_class(j);

    if (label == ClassLabel::op) {
      row.constant = (closed ? 0 : 1) - degree_sum;
      row.strict_positive = true;
    } else if (label == ClassLabel::ind) {
      row.constant = -degree_sum;
      row.allowed = {-1, 0};
    } else {  // c1 or c>1
      row.constant = -degree_sum;
      row.allowed = {0, 1};
    }
    model.constraints.push_back(std::move(row));
  }
  return model;
}

std::optional<std::pair<long long, std::vector<long long>>> solve_ilp(
    const IlpModel& model) {
  int nvars = static_cast<int>(model.vars.size());
  for (const auto& v : model.vars)
    if (v.lo > v.hi) return std::nullopt;

  // every coefficient is even, so a row's value is fixed mod 2 by its
  // constant; disjunctive rows with no branch of matching parity are dead
  for (const auto& c : model.constraints) {
    if (c.strict_positive) continue;
    bool feasible = false;
    for (long long target : c.allowed)
      if ((target - c.constant) % 2 == 0) feasible = true;
    if (!feasible) return std::nullopt;
  }

  // per-variable remaining min/max contributions for interval pruning
  int ncons = static_cast<int>(model.constraints.size());
  std::vector<std::vector<long long>> coef(
      static_cast<std::size_t>(ncons),
      std::vector<long long>(static_cast<std::size_t>(nvars), 0));
  for (int ci = 0; ci < ncons; ++ci)
    for (auto [var, c] : model.constraints[ci].terms) coef[ci][var] += c;

  std::vector<long long> value(static_cast<std::size_t>(nvars), 0);
  std::optional<std::pair<long long, std::vector<long long>>> best;

  auto feasible_interval = [&](int next_var, int ci, long long fixed) {
    long long lo = fixed, hi = fixed;
    for (int v = next_var; v < nvars; ++v) {
      lo += coef[ci][v] * model.vars[v].lo;
      hi += coef[ci][v] * model.vars[v].hi;
    }
    const auto& c = model.constraints[ci];
    if (c.strict_positive) return hi > 0;
    for (long long target : c.allowed)
      if (lo <= target && target <= hi) return true;
    return false;
  };

  std::vector<long long> fixed(static_cast<std::size_t>(ncons), 0);
  auto dfs = [&](auto&& self, int var, long long sum) -> void {
    for (int ci = 0; ci < ncons; ++ci)
      if (!feasible_interval(var, ci, fixed[ci] + model.constraints[ci].constant))
        return;
    if (var == nvars) {
      if (!best || sum > best->first) best = {sum, value};
      return;
    }
    // bound: even taking every remaining domain maximum cannot beat best
    if (best) {
      long long reachable = sum;
      for (int v = var; v < nvars; ++v) reachable += model.vars[v].hi;
      if (reachable <= best->first) return;
    }
    for (long long x = model.vars[var].hi; x >= model.vars[var].lo; --x) {
      value[var] = x;
      for (int ci = 0; ci < ncons; ++ci) fixed[ci] += coef[ci][var] * x;
      self(self, var + 1, sum + x);
      for (int ci = 0; ci < ncons; ++ci) fixed[ci] -= coef[ci][var] * x;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

NdResult max_lmda_nd(const Graph& g) {
  TypePartition p = compute_type_partition(g);
  int k = p.k();
  if (k > 12) throw guard_error("max_lmda_nd: neighbourhood diversity > 12");

  NdResult result;
  result.nd = k;
  result.witness = VertexSet(g.n());

  // singletons: {v} is a locally minimal alliance exactly when deg(v) <= 1
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) <= 1) {
      result.size = 1;
      result.witness.insert(v);
      break;
    }
  }

  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= kOptionCount;

  OptionAssignment assign;
  assign.option.assign(static_cast<std::size_t>(k), ClassOption::empty);
  std::optional<std::vector<long long>> best_x;
  std::optional<OptionAssignment> best_assign;
  long long best_size = 0;

  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rem = code;
    bool plausible = true;
    for (int i = 0; i < k; ++i) {
      auto opt = static_cast<ClassOption>(rem % kOptionCount);
      rem /= kOptionCount;
      assign.option[i] = opt;
      if ((opt == ClassOption::many_marginal || opt == ClassOption::many_over) &&
          p.classes[i].size() < 2)
        plausible = false;
    }
    if (!plausible) continue;
    if (!validate_labels(p, assign)) continue;
    auto solved = solve_ilp(build_ilp(p, assign));
    if (!solved) continue;
    if (solved->first > best_size) {
      best_size = solved->first;
      best_x = solved->second;
      best_assign = assign;
    }
  }
  result.assignments_tried = total;

  if (best_x && best_size > result.size) {
    result.size = static_cast<int>(best_size);
    result.witness = VertexSet(g.n());
    IlpModel model = build_ilp(p, *best_assign);
    for (std::size_t vi = 0; vi < model.vars.size(); ++vi) {
      const auto& members = p.classes[model.vars[vi].class_id];
      for (long long t = 0; t < (*best_x)[vi]; ++t)
        result.witness.insert(members[static_cast<std::size_t>(t)]);
    }
  }

  if (result.size > 0 &&
      !is_locally_minimal(g, result.witness, AllianceKind::ordinary, false))
    throw std::logic_error("nd-ilp witness failed the kernel checker");
  return result;
}

}  // namespace alliance::ndilp
