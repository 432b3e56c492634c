#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "alliance/oracle.hpp"
#include "alliance/reductions.hpp"
#include "cli_lib.hpp"
#include "testutil.hpp"

using json = nlohmann::json;
namespace cli = alliance::cli;

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return Run{code, out.str(), err.str()};
}

json normalized(const std::string& report_text) {
  json doc = json::parse(report_text);
  doc["parameters"]["file"] = "<file>";
  doc["wall_time_ms"] = 0;
  return doc;
}

std::string fx(const std::string& name) { return testutil::fixture_path(name); }

}  // namespace

TEST_CASE("exit codes: result, absence, input error") {
  CHECK(run({"check", fx("tree26.txt"), "--set", "7,2,9,3,11,4,13,5,15,6",
             "--locally-minimal"})
            .exit_code == 0);
  CHECK(run({"check", fx("tree26.txt"), "--set", "1,2", "--locally-minimal"})
            .exit_code == 1);
  CHECK(run({"oracle", fx("k3.txt"), "--exact", "--k", "3"}).exit_code == 1);
  CHECK(run({"oracle", fx("k3.txt"), "--exact", "--k", "2"}).exit_code == 0);
  CHECK(run({"check", fx("tree26.txt"), "--set", "0,2"}).exit_code == 2);
  CHECK(run({"check", fx("missing_file.txt"), "--set", "1"}).exit_code == 2);
  CHECK(run({"tree-dp", fx("k3.txt")}).exit_code == 2);  // not a tree
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"oracle", fx("p4.txt"), "--bogus-flag"}).exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs except wall time") {
  std::vector<std::string> args{"color-coding", fx("tree26.txt"), "--k", "2",
                                "--max-trials", "500"};
  Run a = run(args);
  Run b = run(args);
  CHECK(a.exit_code == b.exit_code);
  json da = json::parse(a.out), db = json::parse(b.out);
  da["wall_time_ms"] = 0;
  db["wall_time_ms"] = 0;
  CHECK(da.dump() == db.dump());
}

TEST_CASE("reports match the golden schema files") {
  auto compare = [](std::vector<std::string> args, const std::string& golden) {
    Run r = run(std::move(args));
    json expect = json::parse(testutil::slurp(fx("golden/" + golden)));
    CHECK(normalized(r.out).dump(2) == expect.dump(2));
  };
  compare({"check", fx("tree26.txt"), "--set", "7,2,9,3,11,4,13,5,15,6",
           "--locally-minimal"},
          "check_tree26_s1.json");
  compare({"oracle", fx("p4.txt"), "--kind", "ordinary"}, "oracle_p4.json");
  compare({"tree-dp", fx("tree6.txt")}, "tree_dp_tree6.json");
  compare({"color-coding", fx("k3.txt"), "--k", "2", "--max-trials", "100"},
          "color_coding_k3.json");
  compare({"nd-ilp", fx("k4.txt")}, "nd_ilp_k4.json");
  compare({"tw-dp", fx("p4.txt")}, "tw_dp_p4.json");
}

TEST_CASE("thread count does not change the color-coding report") {
  std::vector<std::string> one{"color-coding", fx("tree26.txt"), "--k", "2",
                               "--max-trials", "500", "--threads", "1"};
  std::vector<std::string> two{"color-coding", fx("tree26.txt"), "--k", "2",
                               "--max-trials", "500", "--threads", "2"};
  json a = json::parse(run(one).out);
  json b = json::parse(run(two).out);
  CHECK(a["result"].dump() == b["result"].dump());
}

TEST_CASE("reduce writes a graph and sidecar that round-trip") {
  auto dir = std::filesystem::temp_directory_path() / "alliance_cli_test";
  std::filesystem::create_directories(dir);
  std::string prefix = (dir / "stage1").string();

  Run r = run({"reduce", "mmo", fx("edge_w1.txt"), "--r", "1", "--out", prefix});
  REQUIRE(r.exit_code == 0);
  json report = json::parse(r.out);
  CHECK(report["result"]["n"] == 19);
  CHECK(report["result"]["k"] == 8);
  CHECK(report["result"]["sidecar"]["closed_form_k"] == 7);

  // the emitted pair feeds the next stage
  Run r2 = run({"reduce", "fn2cfn", prefix + ".graph", "--sidecar",
                prefix + ".json", "--out", (dir / "stage2").string()});
  REQUIRE(r2.exit_code == 0);
  json report2 = json::parse(r2.out);
  CHECK(report2["result"]["n"] == 401);
  CHECK(report2["result"]["k"] == 85);

  // and the annotated checker accepts a transformed witness end to end
  alliance::WeightedGraph wg = testutil::load_weighted("edge_w1.txt");
  auto fn = alliance::reductions::reduce_mmo_to_lmda_fn(wg, 1);
  auto orientation = alliance::oracle::min_max_outdegree(wg);
  auto s1 = alliance::reductions::mmo_witness(wg, 1, orientation.head, fn);
  auto conn = alliance::reductions::fn_to_connected_fn(fn.annotated);
  auto s2 = conn.transform_witness(s1);
  std::string csv;
  for (int v : s2.members()) csv += (csv.empty() ? "" : ",") + std::to_string(v + 1);
  Run r3 = run({"check", (dir / "stage2").string() + ".graph", "--set", csv,
                "--sidecar", (dir / "stage2").string() + ".json"});
  CHECK(r3.exit_code == 0);
  CHECK(json::parse(r3.out)["result"]["verdict"] == true);
}

TEST_CASE("embedded graph output parses back") {
  Run r = run({"reduce", "mmm", fx("k4.txt"), "--k", "2"});
  REQUIRE(r.exit_code == 0);
  json report = json::parse(r.out);
  alliance::Graph g =
      alliance::parse_graph(report["result"]["graph"].get<std::string>());
  CHECK(g.n() == 986);
}
