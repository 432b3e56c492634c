#include "alliance/color_coding.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "alliance/rng.hpp"

namespace alliance::colorcoding {

int theoretical_trials_log2(int k) { return k * k + k; }

std::string theoretical_trials(int k) {
  // exact bignum doubling in base 10^9
  int exponent = theoretical_trials_log2(k);
  std::vector<std::uint32_t> limbs{1};
  for (int i = 0; i < exponent; ++i) {
    std::uint32_t carry = 0;
    for (auto& limb : limbs) {
      std::uint64_t doubled = 2ULL * limb + carry;
      limb = static_cast<std::uint32_t>(doubled % 1000000000ULL);
      carry = static_cast<std::uint32_t>(doubled / 1000000000ULL);
    }
    if (carry) limbs.push_back(carry);
  }
  std::string out = std::to_string(limbs.back());
  for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

Coloring trial_coloring(int n, std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 rng = stream_for(seed, trial);
  Coloring c;
  c.color.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    c.color[v] = rng.coin() ? Color::green : Color::red;
  return c;
}

std::optional<VertexSet> check_coloring(const Graph& g, const Coloring& coloring,
                                        int k) {
  int n = g.n();
  if (static_cast<int>(coloring.color.size()) != n)
    throw std::invalid_argument("coloring size mismatch");

  VertexSet green(n);
  for (int v = 0; v < n; ++v)
    if (coloring.color[v] == Color::green) green.insert(v);

  std::optional<std::vector<int>> best;
  for (const auto& component : connected_components(g, green)) {
    if (static_cast<int>(component.size()) != k) continue;
    VertexSet s = VertexSet::of(n, component);
    if (!is_alliance(g, s, AllianceKind::ordinary)) continue;
    if (!is_locally_minimal(g, s, AllianceKind::ordinary, false)) continue;
    if (!best || component < *best) best = component;
  }
  if (!best) return std::nullopt;
  return VertexSet::of(n, *best);
}

SolveResult solve(const Graph& g, int k, const TrialPolicy& policy, int threads) {
  if (k < 1) throw std::invalid_argument("color coding requires k >= 1");
  if (policy.max_trials < 1) throw std::invalid_argument("max_trials must be >= 1");

  SolveResult result;
  result.theoretical = theoretical_trials(k);
  std::uint64_t budget = policy.max_trials;
  int log2 = theoretical_trials_log2(k);
  if (log2 < 64) budget = std::min(budget, std::uint64_t{1} << log2);
  result.trials_budget = budget;

  threads = std::max(1, threads);
  std::atomic<std::uint64_t> best_trial{~std::uint64_t{0}};

  auto worker = [&](int tid) {
    for (std::uint64_t i = tid; i < budget;
         i += static_cast<std::uint64_t>(threads)) {
      if (i >= best_trial.load(std::memory_order_relaxed)) break;
      Coloring coloring = trial_coloring(g.n(), policy.seed, i);
      if (!check_coloring(g, coloring, k)) continue;
      // record the smallest hitting trial index; larger ones are discarded
      std::uint64_t cur = best_trial.load();
      while (i < cur && !best_trial.compare_exchange_weak(cur, i)) {
      }
      break;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }

  std::uint64_t hit = best_trial.load();
  if (hit == ~std::uint64_t{0}) {
    result.trials_used = budget;
    return result;
  }
  // the witness for the winning index; recompute to stay order-independent
  Coloring coloring = trial_coloring(g.n(), policy.seed, hit);
  result.witness = check_coloring(g, coloring, k);
  result.trials_used = hit + 1;
  if (!result.witness || result.witness->size() != k ||
      !is_connected_induced(g, *result.witness) ||
      !is_locally_minimal(g, *result.witness, AllianceKind::ordinary, false))
    throw std::logic_error("color coding witness failed the kernel checker");
  return result;
}

}  // namespace alliance::colorcoding
