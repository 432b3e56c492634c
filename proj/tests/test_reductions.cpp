#include <doctest.h>

#include "alliance/oracle.hpp"
#include "alliance/reductions.hpp"
#include "testutil.hpp"

using namespace alliance;
namespace red = alliance::reductions;

TEST_CASE("matching reduction on the 4-clique") {
  Graph k4 = testutil::clique(4);
  auto inst = red::reduce_mmm_to_lmda(k4, 2);
  CHECK(inst.k_prime == 648);
  CHECK(inst.graph.n() == 986);
  CHECK(inst.layout.cycle_len == 60);
  CHECK(inst.layout.hub_count == 16);

  auto matching = oracle::min_maximal_matching(k4);
  REQUIRE(matching.size == 2);
  VertexSet d = red::mmm_witness(k4, matching.edges, inst);
  CHECK(d.size() == 648);
  CHECK(is_locally_minimal(inst.graph, d, AllianceKind::ordinary, false));

  // hubs never enter the witness
  for (int hub = 0; hub < inst.layout.hub_count; ++hub)
    CHECK_FALSE(d.contains(inst.layout.hub_id(hub)));
}

TEST_CASE("matching reduction size bookkeeping on a relaxed source") {
  Graph p4 = testutil::path(4);
  auto inst = red::reduce_mmm_to_lmda(p4, 1, /*require_cubic=*/false);
  long long n = 4, m = 3;
  CHECK(inst.graph.n() == n + m + (n + 2 * m) + (n + 2 * m) * 6 * (n + m));
  auto matching = oracle::min_maximal_matching(p4);
  VertexSet d = red::mmm_witness(p4, matching.edges, inst);
  CHECK(d.size() == 4 * (n + m) * (n + 2 * m) + n + m - matching.size);
}

TEST_CASE("matching reduction guards") {
  CHECK_THROWS_AS(red::reduce_mmm_to_lmda(testutil::path(4), 1),
                  std::invalid_argument);
  Graph k4 = testutil::clique(4);
  auto inst = red::reduce_mmm_to_lmda(k4, 2);
  // a non-maximal matching is rejected
  CHECK_THROWS_AS(red::mmm_witness(k4, {{0, 1}}, inst), std::invalid_argument);
  // overlapping pairs are rejected
  CHECK_THROWS_AS(red::mmm_witness(k4, {{0, 1}, {1, 2}}, inst),
                  std::invalid_argument);
}

TEST_CASE("outdegree reduction on a single weighted edge") {
  WeightedGraph wg = testutil::load_weighted("edge_w1.txt");
  auto inst = red::reduce_mmo_to_lmda_fn(wg, 1);
  CHECK(inst.annotated.graph.n() == 19);  // n(4r+2) + 4w + 3|C|
  CHECK(inst.layout.pairs.size() == 1);
  CHECK(inst.annotated.k == 8);
  CHECK(inst.closed_form_k == 7);
  CHECK(inst.annotated.k - inst.closed_form_k == inst.layout.omega);

  auto orientation = oracle::min_max_outdegree(wg);
  REQUIRE(orientation.r_star == 1);
  VertexSet s = red::mmo_witness(wg, 1, orientation.head, inst);
  CHECK(static_cast<long long>(s.size()) == inst.annotated.k);
  CHECK(red::check_annotated(inst.annotated, s));

  // the witness content, spelled out: both endpoints, both triangle anchors,
  // the head-side coupler, and r + out-weight helpers per endpoint
  const auto& lay = inst.layout;
  int u = 0, v = 1;
  bool u_to_v = orientation.head[0] == v;
  std::vector<int> expect{u, v, lay.pairs[0].tri, lay.pairs[0].tri2,
                          u_to_v ? lay.vu_base[0] : lay.uv_base[0]};
  int tail = u_to_v ? u : v, head = u_to_v ? v : u;
  expect.push_back(lay.h_base[tail]);
  expect.push_back(lay.h_base[tail] + 1);
  expect.push_back(lay.h_base[head]);
  std::sort(expect.begin(), expect.end());
  CHECK(s.members() == expect);

  CHECK_THROWS_AS(red::mmo_witness(wg, 0, orientation.head, inst),
                  std::invalid_argument);
}

TEST_CASE("outdegree reduction on the weighted triangle") {
  WeightedGraph wg = testutil::load_weighted("triangle_w1.txt");
  auto inst = red::reduce_mmo_to_lmda_fn(wg, 1);
  CHECK(inst.layout.pairs.size() == 3);
  CHECK(inst.layout.omega == 3);
  CHECK(inst.annotated.graph.n() == 39);

  auto orientation = oracle::min_max_outdegree(wg);
  VertexSet s = red::mmo_witness(wg, 1, orientation.head, inst);
  CHECK(red::check_annotated(inst.annotated, s));
}

TEST_CASE("outdegree reduction with weights above one") {
  Graph base = testutil::path(3);
  WeightedGraph wg{base, {2, 3}};
  auto inst = red::reduce_mmo_to_lmda_fn(wg, 3);
  // per edge: 2w - 1 complementary pairs
  CHECK(inst.layout.pairs.size() == 3 + 5);
  CHECK(inst.annotated.graph.n() ==
        3 * (4 * 3 + 2) + 4 * 5 + 3 * static_cast<int>(inst.layout.pairs.size()));

  auto orientation = oracle::min_max_outdegree(wg);
  REQUIRE(orientation.r_star <= 3);
  VertexSet s = red::mmo_witness(wg, 3, orientation.head, inst);
  CHECK(red::check_annotated(inst.annotated, s));
}

TEST_CASE("connecting gadget") {
  WeightedGraph wg = testutil::load_weighted("edge_w1.txt");
  auto fn = red::reduce_mmo_to_lmda_fn(wg, 1);
  int n = fn.annotated.graph.n();

  auto conn = red::fn_to_connected_fn(fn.annotated);
  CHECK(conn.annotated.graph.n() == n + 2 + 4 * n + 16 * n);
  CHECK(conn.annotated.k == fn.annotated.k + 4 * n + 1);
  CHECK(conn.annotated.connected);
  CHECK(conn.annotated.graph.degree(conn.hub) == n + 4 * n);
  CHECK(conn.annotated.graph.degree(conn.taboo) == n);

  auto orientation = oracle::min_max_outdegree(wg);
  VertexSet s = red::mmo_witness(wg, 1, orientation.head, fn);
  VertexSet s2 = conn.transform_witness(s);
  CHECK(red::check_annotated(conn.annotated, s2));
}

TEST_CASE("connecting gadget arithmetic on a generic small instance") {
  // four vertices, no edges, one necessary vertex, k = 7
  red::AnnotatedInstance inst;
  inst.graph = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  inst.k = 7;
  inst.variant = red::Variant::with_forbidden_necessary;
  inst.necessary = VertexSet::of(4, {0});
  inst.forbidden = VertexSet(4);
  auto conn = red::fn_to_connected_fn(inst);
  CHECK(conn.annotated.k == 24);  // k + 4n + 1
}

TEST_CASE("necessary-vertex removal gadget") {
  WeightedGraph wg = testutil::load_weighted("edge_w1.txt");
  auto fn = red::reduce_mmo_to_lmda_fn(wg, 1);
  int n = fn.annotated.graph.n();
  long long necessary_count = fn.annotated.necessary.size();

  auto f = red::fn_to_f(fn.annotated);
  CHECK(f.annotated.necessary.empty());
  CHECK(f.annotated.k == fn.annotated.k + (4LL * n + 1) * necessary_count);
  CHECK(f.annotated.graph.n() ==
        n + (2 + 20 * n) * static_cast<int>(necessary_count));
  // u^2 is forbidden and pendant on u
  for (std::size_t i = 0; i < f.source_necessary.size(); ++i) {
    CHECK(f.annotated.forbidden.contains(f.u2[i]));
    CHECK(f.annotated.graph.degree(f.u2[i]) == 1);
    CHECK(f.annotated.graph.adjacent(f.u2[i], f.source_necessary[i]));
  }

  auto orientation = oracle::min_max_outdegree(wg);
  VertexSet s = red::mmo_witness(wg, 1, orientation.head, fn);
  VertexSet s2 = f.transform_witness(s);
  CHECK(red::check_annotated(f.annotated, s2));
}

TEST_CASE("forbidden-vertex removal gadget") {
  // path with a forbidden pendant on the second vertex; {1,2} is the witness
  red::AnnotatedInstance inst;
  inst.graph = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  inst.k = 2;
  inst.variant = red::Variant::with_forbidden;
  inst.connected = true;
  inst.necessary = VertexSet(5);
  inst.forbidden = VertexSet::of(5, {4});

  VertexSet witness = VertexSet::of(5, {1, 2});
  CHECK(red::check_annotated(inst, witness));

  auto exact = red::f_to_exact(inst);
  CHECK(exact.annotated.graph.n() == 5 + 2 * 5);  // 2n pendants, one hub
  CHECK(exact.annotated.k == 2);
  CHECK(exact.annotated.variant == red::Variant::exact);
  CHECK(red::check_annotated(exact.annotated, exact.transform_witness(witness)));

  // without forbidden vertices the graph is unchanged
  red::AnnotatedInstance clean = inst;
  clean.forbidden = VertexSet(5);
  CHECK(red::f_to_exact(clean).annotated.graph.n() == 5);

  // the size argument needs k <= n
  red::AnnotatedInstance big = inst;
  big.k = 6;
  CHECK_THROWS_AS(red::f_to_exact(big), std::invalid_argument);
}

TEST_CASE("pendant inflation refuses to materialize absurd outputs") {
  red::AnnotatedInstance inst;
  inst.graph = Graph::from_edges(4000, {});
  inst.k = 1;
  inst.variant = red::Variant::with_forbidden;
  inst.necessary = VertexSet(4000);
  inst.forbidden = VertexSet(4000);
  for (int v = 0; v < 3000; ++v) inst.forbidden.insert(v);
  CHECK_THROWS_AS(red::f_to_exact(inst), guard_error);
}

TEST_CASE("annotation checks") {
  WeightedGraph wg = testutil::load_weighted("edge_w1.txt");
  auto fn = red::reduce_mmo_to_lmda_fn(wg, 1);
  auto orientation = oracle::min_max_outdegree(wg);
  VertexSet s = red::mmo_witness(wg, 1, orientation.head, fn);

  VertexSet missing = s;
  missing.erase(0);  // drop a necessary vertex
  CHECK_FALSE(red::check_annotated(fn.annotated, missing));

  VertexSet tainted = s;
  tainted.insert(fn.layout.vsq[0]);  // touch a forbidden vertex
  CHECK_FALSE(red::check_annotated(fn.annotated, tainted));
}

TEST_CASE("full chain at unit scale") {
  // the chain composed on the single-edge instance, checked stage by stage;
  // the necessary-removal stage runs on the uncollapsed FN instance so the
  // whole walk stays tiny
  WeightedGraph wg = testutil::load_weighted("edge_w1.txt");
  auto fn = red::reduce_mmo_to_lmda_fn(wg, 1);
  auto orientation = oracle::min_max_outdegree(wg);
  VertexSet s1 = red::mmo_witness(wg, 1, orientation.head, fn);
  REQUIRE(red::check_annotated(fn.annotated, s1));

  auto f = red::fn_to_f(fn.annotated);
  VertexSet s2 = f.transform_witness(s1);
  REQUIRE(red::check_annotated(f.annotated, s2));
  REQUIRE(f.annotated.k <= f.annotated.graph.n());

  auto exact = red::f_to_exact(f.annotated);
  VertexSet s3 = exact.transform_witness(s2);
  CHECK(red::check_annotated(exact.annotated, s3));
}
