#include <doctest.h>

#include "alliance/kernel.hpp"
#include "alliance/oracle.hpp"
#include "testutil.hpp"

using namespace alliance;

namespace {

VertexSet s1_of(const Graph& t26) {
  (void)t26;
  return VertexSet::of(26, {6, 1, 8, 2, 10, 3, 12, 4, 14, 5});
}

}  // namespace

TEST_CASE("classify on the 26-vertex tree") {
  Graph t26 = testutil::load_graph("tree26.txt");
  VertexSet s1 = s1_of(t26);

  auto rec1 = classify(t26, s1, AllianceKind::ordinary, 1);
  CHECK(rec1.slack == 0);
  CHECK(rec1.status == Protection::marginal);

  auto rec6 = classify(t26, s1, AllianceKind::ordinary, 6);
  CHECK(rec6.slack == 1);
  CHECK(rec6.status == Protection::marginal);

  CHECK_THROWS_AS(classify(t26, s1, AllianceKind::ordinary, 0),
                  std::invalid_argument);
}

TEST_CASE("an isolated member with zero slack headroom is overprotected") {
  Graph g = Graph::from_edges(3, {{1, 2}});
  auto rec = classify(g, VertexSet::of(3, {0}), AllianceKind::ordinary, 0);
  CHECK(rec.slack == 1);
  CHECK(rec.status == Protection::overprotected);
}

TEST_CASE("is_alliance") {
  Graph t26 = testutil::load_graph("tree26.txt");
  CHECK_FALSE(is_alliance(t26, VertexSet(26), AllianceKind::ordinary));
  CHECK(is_alliance(t26, s1_of(t26), AllianceKind::ordinary));

  Graph p4 = testutil::path(4);
  CHECK(is_alliance(p4, VertexSet::of(4, {0}), AllianceKind::ordinary));
  CHECK_FALSE(is_alliance(p4, VertexSet::of(4, {1}), AllianceKind::ordinary));
}

TEST_CASE("is_connected_alliance") {
  Graph t26 = testutil::load_graph("tree26.txt");
  CHECK_FALSE(is_connected_alliance(t26, s1_of(t26), AllianceKind::ordinary));
  CHECK(is_connected_alliance(t26, VertexSet::of(26, {0, 1, 2}),
                              AllianceKind::ordinary));
  Graph p4 = testutil::path(4);
  CHECK(is_connected_alliance(p4, VertexSet::of(4, {0}), AllianceKind::ordinary));
}

TEST_CASE("is_locally_minimal direct") {
  Graph t26 = testutil::load_graph("tree26.txt");
  CHECK(is_locally_minimal(t26, s1_of(t26), AllianceKind::ordinary, false));

  Graph p4 = testutil::path(4);
  CHECK_FALSE(is_locally_minimal(p4, VertexSet::of(4, {0, 1}),
                                 AllianceKind::ordinary, false));
  CHECK(is_locally_minimal(p4, VertexSet::of(4, {1, 2}), AllianceKind::ordinary,
                           false));
}

TEST_CASE("marginal-neighbour characterization") {
  Graph t26 = testutil::load_graph("tree26.txt");
  CHECK(is_locally_minimal_via_marginals(t26, s1_of(t26), AllianceKind::ordinary));

  Graph star = testutil::star(3);
  CHECK_FALSE(is_locally_minimal_via_marginals(star, VertexSet::of(4, {0, 1}),
                                               AllianceKind::ordinary));

  Graph lone = Graph::from_edges(1, {});
  CHECK(is_locally_minimal_via_marginals(lone, VertexSet::of(1, {0}),
                                         AllianceKind::ordinary));

  Graph p4 = testutil::path(4);
  CHECK_THROWS_AS(
      is_locally_minimal_via_marginals(p4, VertexSet::of(4, {1}),
                                       AllianceKind::ordinary),
      std::invalid_argument);
}

TEST_CASE("is_globally_minimal") {
  Graph t26 = testutil::load_graph("tree26.txt");
  CHECK(is_globally_minimal(t26, VertexSet::of(26, {0, 1, 2}),
                            AllianceKind::ordinary));
  CHECK_FALSE(is_globally_minimal(t26, s1_of(t26), AllianceKind::ordinary));

  Graph lone = Graph::from_edges(1, {});
  CHECK(is_globally_minimal(lone, VertexSet::of(1, {0}), AllianceKind::ordinary));

  Graph big = testutil::clique(22);
  VertexSet all(22);
  for (int v = 0; v < 22; ++v) all.insert(v);
  CHECK_THROWS_AS(is_globally_minimal(big, all, AllianceKind::ordinary),
                  guard_error);
}

TEST_CASE("characterization equivalence on random graphs") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.below(7));
    Graph g = testutil::random_graph(n, 45, rng);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      for (AllianceKind kind : {AllianceKind::ordinary, AllianceKind::strong}) {
        if (!is_alliance(g, s, kind)) continue;
        CHECK(is_locally_minimal(g, s, kind, false) ==
              is_locally_minimal_via_marginals(g, s, kind));
      }
    }
  }
}

TEST_CASE("slack parity is fixed and removal moves it by two") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(7));
    Graph g = testutil::random_graph(n, 50, rng);
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (rng.coin()) s.insert(v);
    for (AllianceKind kind : {AllianceKind::ordinary, AllianceKind::strong}) {
      for (int v = 0; v < n; ++v) {
        int parity = (g.degree(v) + (kind == AllianceKind::ordinary ? 1 : 0)) % 2;
        CHECK(((slack_of(g, s, kind, v) % 2) + 2) % 2 == parity);
        for (int u : g.neighbors(v)) {
          VertexSet moved = s;
          if (moved.contains(u))
            moved.erase(u);
          else
            moved.insert(u);
          int diff = slack_of(g, moved, kind, v) - slack_of(g, s, kind, v);
          CHECK(std::abs(diff) == 2);
        }
      }
    }
  }
}

TEST_CASE("alliances are not hereditary upward") {
  // some alliance has a superset that is no alliance; guards against pruning
  // by supersets anywhere else in the code base
  bool found = false;
  SplitMix64 rng(23);
  for (int trial = 0; trial < 200 && !found; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    Graph g = testutil::random_graph(n, 50, rng);
    for (std::uint32_t mask = 1; mask < (1u << n) && !found; ++mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      if (!is_alliance(g, s, AllianceKind::ordinary)) continue;
      for (int v = 0; v < n && !found; ++v) {
        if (s.contains(v)) continue;
        VertexSet bigger = s;
        bigger.insert(v);
        if (!is_alliance(g, bigger, AllianceKind::ordinary)) found = true;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("connected variant adds exactly the connectivity requirement") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(6));
    Graph g = testutil::random_graph(n, 45, rng);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      bool plain_lm = is_locally_minimal(g, s, AllianceKind::ordinary, false);
      bool conn_lm = is_locally_minimal(g, s, AllianceKind::ordinary, true);
      CHECK(conn_lm == (plain_lm && is_connected_induced(g, s)));
    }
  }

  // centre with three pendants bridging two satellites: removing the centre
  // leaves an alliance (although a disconnected one), so the set is not
  // locally minimal under either flag
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
  VertexSet s = VertexSet::of(6, {0, 1, 2});
  VertexSet split = VertexSet::of(6, {0, 2});
  CHECK(is_alliance(g, split, AllianceKind::ordinary));
  CHECK_FALSE(is_locally_minimal(g, s, AllianceKind::ordinary, false));
  CHECK_FALSE(is_locally_minimal(g, s, AllianceKind::ordinary, true));
}

TEST_CASE("double broom: cut vertices get no certificate exemption") {
  // spine 0-1-2-3-4 with two extra leaves at each end; {0..4,5,7} is a
  // connected alliance whose every removal either unprotects a neighbour or
  // merely disconnects the rest, but 2 has no marginally protected
  // neighbour, so it is not locally minimal and the solvers must not find it
  Graph g = testutil::load_graph("tree9_broom.txt");
  VertexSet s = VertexSet::of(9, {0, 1, 2, 3, 4, 5, 7});
  CHECK(is_connected_alliance(g, s, AllianceKind::strong));
  VertexSet rest = s;
  rest.erase(2);
  CHECK(is_alliance(g, rest, AllianceKind::strong));
  CHECK_FALSE(is_connected_induced(g, rest));
  CHECK_FALSE(is_locally_minimal(g, s, AllianceKind::strong, true));
  CHECK(oracle::max_lm_alliance(g, AllianceKind::strong, true).best_size == 3);
}
