#include <doctest.h>

#include <bit>

#include "alliance/color_coding.hpp"
#include "alliance/oracle.hpp"
#include "testutil.hpp"

using namespace alliance;
namespace cc = alliance::colorcoding;

namespace {

cc::Coloring make_coloring(std::initializer_list<int> greens, int n) {
  cc::Coloring c;
  c.color.assign(static_cast<std::size_t>(n), cc::Color::red);
  for (int v : greens) c.color[v] = cc::Color::green;
  return c;
}

// independent route: enumerate candidate subsets instead of components
bool coloring_hits_by_subsets(const Graph& g, const cc::Coloring& coloring, int k) {
  int n = g.n();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    VertexSet s = VertexSet::from_mask(n, mask);
    bool mono = true;
    for (int v : s.members())
      if (coloring.color[v] != cc::Color::green) mono = false;
    if (!mono) continue;
    bool boundary_red = true;
    for (int v : s.members())
      for (int u : g.neighbors(v))
        if (!s.contains(u) && coloring.color[u] != cc::Color::red)
          boundary_red = false;
    if (!boundary_red) continue;
    if (!is_connected_induced(g, s)) continue;
    if (is_locally_minimal(g, s, AllianceKind::ordinary, false)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("check_coloring on the triangle") {
  Graph k3 = testutil::clique(3);
  auto hit = cc::check_coloring(k3, make_coloring({0, 1}, 3), 2);
  REQUIRE(hit.has_value());
  CHECK(hit->members() == std::vector<int>{0, 1});

  CHECK_FALSE(cc::check_coloring(k3, make_coloring({0, 1, 2}, 3), 3));
  CHECK_FALSE(cc::check_coloring(k3, make_coloring({}, 3), 2));
}

TEST_CASE("solve finds small witnesses and misses impossible ones") {
  Graph k3 = testutil::clique(3);
  cc::TrialPolicy policy{12345, 10000};
  auto found = cc::solve(k3, 2, policy);
  REQUIRE(found.witness.has_value());
  CHECK(found.witness->size() == 2);
  CHECK(found.trials_used <= found.trials_budget);

  CHECK_FALSE(cc::solve(k3, 3, policy).witness.has_value());
  CHECK_FALSE(cc::solve(k3, 4, policy).witness.has_value());
}

TEST_CASE("per-trial success probability by exact enumeration") {
  Graph k3 = testutil::clique(3);
  int hits_components = 0, hits_subsets = 0;
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    cc::Coloring coloring;
    for (int v = 0; v < 3; ++v)
      coloring.color.push_back(bits >> v & 1 ? cc::Color::green : cc::Color::red);
    if (cc::check_coloring(k3, coloring, 2)) ++hits_components;
    if (coloring_hits_by_subsets(k3, coloring, 2)) ++hits_subsets;
  }
  CHECK(hits_components == 3);  // exactly the three green pairs
  CHECK(hits_components == hits_subsets);
}

TEST_CASE("component route and subset route agree on every small coloring") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    Graph g = testutil::random_graph(n, 50, rng);
    for (int k = 1; k <= n; ++k)
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        cc::Coloring coloring;
        for (int v = 0; v < n; ++v)
          coloring.color.push_back(bits >> v & 1 ? cc::Color::green
                                                 : cc::Color::red);
        CHECK(cc::check_coloring(g, coloring, k).has_value() ==
              coloring_hits_by_subsets(g, coloring, k));
      }
  }
}

TEST_CASE("per-trial success rate meets the guarantee on yes-instances") {
  SplitMix64 rng(67);
  int yes_seen = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));  // n <= 4
    Graph g = testutil::random_graph(n, 55, rng);
    for (int k = 1; k <= n; ++k) {
      if (!oracle::exists_exact(g, k, AllianceKind::ordinary, true)) continue;
      ++yes_seen;
      std::uint64_t hits = 0;
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        cc::Coloring coloring;
        for (int v = 0; v < n; ++v)
          coloring.color.push_back(bits >> v & 1 ? cc::Color::green
                                                 : cc::Color::red);
        if (cc::check_coloring(g, coloring, k)) ++hits;
      }
      // hits / 2^n >= 2^-(k^2+k)
      int log_bound = cc::theoretical_trials_log2(k);
      REQUIRE(log_bound < 60);
      CHECK(hits * (std::uint64_t{1} << log_bound) >= (std::uint64_t{1} << n));
    }
  }
  CHECK(yes_seen > 20);
}

TEST_CASE("reproducibility and thread-count independence") {
  Graph g = testutil::load_graph("tree26.txt");
  cc::TrialPolicy policy{987, 4000};
  auto a = cc::solve(g, 2, policy, 1);
  auto b = cc::solve(g, 2, policy, 1);
  auto c = cc::solve(g, 2, policy, 2);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->members() == b.witness->members());
  CHECK(a.trials_used == b.trials_used);
  CHECK(a.witness->members() == c.witness->members());
  CHECK(a.trials_used == c.trials_used);

  cc::TrialPolicy other{988, 4000};
  auto d = cc::solve(g, 2, other, 1);
  REQUIRE(d.witness.has_value());  // may be a different pair, still valid
}

TEST_CASE("trial colorings depend on (seed, index) only") {
  auto a = cc::trial_coloring(10, 42, 7);
  auto b = cc::trial_coloring(10, 42, 7);
  CHECK(a.color == b.color);
  auto c = cc::trial_coloring(10, 42, 8);
  CHECK(a.color != c.color);
}

TEST_CASE("theoretical repetition counts") {
  CHECK(cc::theoretical_trials(1) == "4");
  CHECK(cc::theoretical_trials(2) == "64");
  CHECK(cc::theoretical_trials(3) == "4096");
  CHECK(cc::theoretical_trials(4) == "1048576");
  CHECK(cc::theoretical_trials(8) == "4722366482869645213696");  // 2^72
}

TEST_CASE("budget honours the theoretical count when it is smaller") {
  Graph p2 = testutil::path(2);
  cc::TrialPolicy policy{5, 1000000};
  auto res = cc::solve(p2, 1, policy);
  CHECK(res.trials_budget == 4);  // 2^(1+1)
  cc::TrialPolicy tight{5, 3};
  CHECK(cc::solve(p2, 1, tight).trials_budget == 3);
}

TEST_CASE("invalid parameters") {
  Graph p2 = testutil::path(2);
  CHECK_THROWS_AS(cc::solve(p2, 0, cc::TrialPolicy{1, 10}), std::invalid_argument);
  CHECK_THROWS_AS(cc::solve(p2, 1, cc::TrialPolicy{1, 0}), std::invalid_argument);
}
