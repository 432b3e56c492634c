#include "cli_lib.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "alliance/color_coding.hpp"
#include "alliance/graph.hpp"
#include "alliance/kernel.hpp"
#include "alliance/nd_ilp.hpp"
#include "alliance/oracle.hpp"
#include "alliance/reductions.hpp"
#include "alliance/tree_dp.hpp"
#include "alliance/tw_dp.hpp"

namespace alliance::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultSeed = 0x414c4c59;  // fixed, not time-derived

json ids_1based(const std::vector<int>& ids) {
  json out = json::array();
  for (int v : ids) out.push_back(v + 1);
  return out;
}

json witness_json(const VertexSet& s) { return ids_1based(s.members()); }

std::vector<int> parse_id_csv(const std::string& csv, int n) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t pos = 0;
    long v = std::stol(token, &pos);
    if (pos != token.size() || v < 1 || v > n)
      throw std::invalid_argument("--set: bad vertex id '" + token + "'");
    out.push_back(static_cast<int>(v - 1));
  }
  if (out.empty()) throw std::invalid_argument("--set: empty vertex list");
  return out;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AllianceKind kind_of(const std::string& name) {
  if (name == "ordinary") return AllianceKind::ordinary;
  if (name == "strong") return AllianceKind::strong;
  throw std::invalid_argument("--kind must be ordinary or strong");
}

// ---- annotated-instance sidecars ----------------------------------------

std::string variant_name(reductions::Variant v) {
  switch (v) {
    case reductions::Variant::plain:
      return "plain";
    case reductions::Variant::exact:
      return "exact";
    case reductions::Variant::with_forbidden:
      return "f";
    case reductions::Variant::with_forbidden_necessary:
      return "fn";
  }
  return "plain";
}

reductions::Variant variant_of(const std::string& name) {
  if (name == "plain") return reductions::Variant::plain;
  if (name == "exact") return reductions::Variant::exact;
  if (name == "f") return reductions::Variant::with_forbidden;
  if (name == "fn") return reductions::Variant::with_forbidden_necessary;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

json sidecar_json(const reductions::AnnotatedInstance& inst, json layout,
                  std::optional<long long> closed_form_k) {
  json side;
  side["variant"] = variant_name(inst.variant);
  side["connected"] = inst.connected;
  side["k"] = inst.k;
  if (closed_form_k) side["closed_form_k"] = *closed_form_k;
  side["necessary"] = ids_1based(inst.necessary.members());
  side["forbidden"] = ids_1based(inst.forbidden.members());
  side["layout"] = std::move(layout);
  return side;
}

reductions::AnnotatedInstance load_annotated(const std::string& graph_path,
                                             const std::string& sidecar_path) {
  reductions::AnnotatedInstance inst;
  inst.graph = parse_graph(slurp_file(graph_path));
  json side = json::parse(slurp_file(sidecar_path));
  inst.variant = variant_of(side.at("variant").get<std::string>());
  inst.connected = side.value("connected", false);
  inst.k = side.at("k").get<long long>();
  inst.necessary = VertexSet(inst.graph.n());
  inst.forbidden = VertexSet(inst.graph.n());
  for (long long v : side.value("necessary", std::vector<long long>{}))
    inst.necessary.insert(static_cast<int>(v - 1));
  for (long long v : side.value("forbidden", std::vector<long long>{}))
    inst.forbidden.insert(static_cast<int>(v - 1));
  return inst;
}

json range_1based(int lo, int count) {
  // [first, last] ids, 1-based; empty ranges serialize as null
  if (count <= 0) return nullptr;
  return json::array({lo + 1, lo + count});
}

struct ReduceOutput {
  Graph graph;
  json sidecar;
};

// ---- report assembly ------------------------------------------------------

struct Report {
  json doc;
  Clock::time_point start = Clock::now();

  Report(const std::string& algorithm, json parameters) {
    doc["algorithm"] = algorithm;
    doc["parameters"] = std::move(parameters);
  }

  int emit(std::ostream& out, json result, json assertions, int exit_code,
           std::uint64_t seed = kDefaultSeed) {
    doc["result"] = std::move(result);
    doc["seed"] = seed;
    doc["assertions"] = std::move(assertions);
    doc["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    out << doc.dump(2) << "\n";
    return exit_code;
  }
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"locally minimal defensive alliance toolkit"};
  app.require_subcommand(1);

  // shared options, bound per subcommand
  std::string file, kind_name = "ordinary", set_csv, td_path, sidecar_path,
                    out_prefix;
  bool connected = false, exact = false, locally_minimal = false,
       globally_minimal = false, via_marginals = false;
  long long k = -1, r = -1;
  std::uint64_t seed = kDefaultSeed, max_trials = 20000;
  int threads = 1;
  int root = 1;

  auto* check = app.add_subcommand("check", "run the alliance checkers on a set");
  check->add_option("file", file)->required();
  check->add_option("--set", set_csv, "comma separated 1-based vertex ids");
  check->add_option("--kind", kind_name);
  check->add_flag("--connected", connected);
  check->add_flag("--locally-minimal", locally_minimal);
  check->add_flag("--globally-minimal", globally_minimal);
  check->add_flag("--via-marginals", via_marginals);
  check->add_option("--sidecar", sidecar_path,
                    "annotated-instance sidecar; checks the annotations too");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--k", k);
  oracle_cmd->add_option("--kind", kind_name);
  oracle_cmd->add_flag("--connected", connected);
  oracle_cmd->add_flag("--exact", exact);
  std::string objective = "alliance";
  oracle_cmd->add_option("--objective", objective,
                         "alliance | matching | outdegree");

  auto* tree_cmd = app.add_subcommand("tree-dp", "tree dynamic program");
  tree_cmd->add_option("file", file)->required();
  tree_cmd->add_option("--root", root, "1-based root vertex");

  auto* cc_cmd = app.add_subcommand("color-coding", "randomized search");
  cc_cmd->add_option("file", file)->required();
  cc_cmd->add_option("--k", k)->required();
  cc_cmd->add_option("--seed", seed);
  cc_cmd->add_option("--max-trials", max_trials);
  cc_cmd->add_option("--threads", threads);

  auto* nd_cmd = app.add_subcommand("nd-ilp", "type-class option enumeration");
  nd_cmd->add_option("file", file)->required();

  auto* tw_cmd = app.add_subcommand("tw-dp", "treewidth dynamic program");
  tw_cmd->add_option("file", file)->required();
  tw_cmd->add_option("--td", td_path, "tree decomposition file");

  auto* reduce_cmd = app.add_subcommand("reduce", "hardness instance generators");
  std::string which;
  reduce_cmd->add_option("kind", which, "mmm | mmo | fn2cfn | fn2f | f2exact")
      ->required();
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--k", k);
  reduce_cmd->add_option("--r", r);
  reduce_cmd->add_option("--sidecar", sidecar_path);
  reduce_cmd->add_option("--out", out_prefix,
                         "write <out>.graph and <out>.json instead of embedding");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (check->parsed()) {
      json params{{"file", file}, {"kind", kind_name}, {"connected", connected}};
      Report report("check", params);
      Graph g = parse_graph(slurp_file(file));
      AllianceKind kind = kind_of(kind_name);
      if (set_csv.empty()) throw std::invalid_argument("check requires --set");
      VertexSet s = VertexSet::of(g.n(), parse_id_csv(set_csv, g.n()));
      bool verdict;
      std::string mode;
      if (!sidecar_path.empty()) {
        mode = "annotated";
        auto inst = load_annotated(file, sidecar_path);
        verdict = reductions::check_annotated(inst, s);
      } else if (globally_minimal) {
        mode = "globally-minimal";
        verdict = is_globally_minimal(g, s, kind);
      } else if (via_marginals) {
        mode = "locally-minimal-via-marginals";
        verdict = is_locally_minimal_via_marginals(g, s, kind);
      } else if (locally_minimal) {
        mode = "locally-minimal";
        verdict = is_locally_minimal(g, s, kind, connected);
      } else {
        mode = connected ? "connected-alliance" : "alliance";
        verdict = connected ? is_connected_alliance(g, s, kind)
                            : is_alliance(g, s, kind);
      }
      report.doc["parameters"]["mode"] = mode;
      report.doc["parameters"]["set"] = ids_1based(s.members());
      return report.emit(out, json{{"verdict", verdict}}, json::object(),
                         verdict ? 0 : 1);
    }

    if (oracle_cmd->parsed()) {
      json params{{"file", file},
                  {"objective", objective},
                  {"kind", kind_name},
                  {"connected", connected}};
      Report report("oracle", params);
      auto parsed = parse_input(slurp_file(file));
      if (objective == "matching") {
        auto res = oracle::min_maximal_matching(parsed.graph);
        json edges = json::array();
        for (auto [u, v] : res.edges) edges.push_back({u + 1, v + 1});
        return report.emit(out, json{{"size", res.size}, {"matching", edges}},
                           json::object(), 0);
      }
      if (objective == "outdegree") {
        WeightedGraph wg = parsed.weighted()
                               ? parsed.weighted_graph()
                               : WeightedGraph{parsed.graph,
                                               std::vector<long long>(
                                                   parsed.graph.m(), 1)};
        auto res = oracle::min_max_outdegree(wg);
        json arcs = json::array();
        for (int e = 0; e < static_cast<int>(wg.base.m()); ++e) {
          auto [u, v] = wg.base.edges()[e];
          int tail = res.head[e] == v ? u : v;
          arcs.push_back({tail + 1, res.head[e] + 1});
        }
        return report.emit(out, json{{"r_star", res.r_star}, {"orientation", arcs}},
                           json::object(), 0);
      }
      if (objective != "alliance")
        throw std::invalid_argument("unknown --objective " + objective);
      AllianceKind kind = kind_of(kind_name);
      if (exact) {
        if (k < 0) throw std::invalid_argument("--exact requires --k");
        auto w = oracle::exists_exact(parsed.graph, static_cast<int>(k), kind,
                                      connected);
        json result{{"found", w.has_value()}};
        json asserts = json::object();
        if (w) {
          result["witness"] = witness_json(*w);
          asserts["witness_checked"] =
              is_locally_minimal(parsed.graph, *w, kind, connected);
        }
        report.doc["parameters"]["k"] = k;
        return report.emit(out, result, asserts, w ? 0 : 1);
      }
      auto res = oracle::max_lm_alliance(parsed.graph, kind, connected);
      json result{{"size", res.best_size}};
      json asserts = json::object();
      if (!res.witnesses.empty()) {
        result["witness"] = witness_json(res.witnesses.front());
        result["witnesses_found"] = res.witnesses.size();
        asserts["witness_checked"] = is_locally_minimal(
            parsed.graph, res.witnesses.front(), kind, connected);
      }
      return report.emit(out, result, asserts, res.best_size > 0 ? 0 : 1);
    }

    if (tree_cmd->parsed()) {
      json params{{"file", file}, {"root", root}};
      Report report("tree-dp", params);
      Graph g = parse_graph(slurp_file(file));
      if (root < 1 || root > g.n())
        throw std::invalid_argument("--root out of range");
      auto res = treedp::solve_tree(g, root - 1);
      json asserts{{"witness_checked",
                    res.size == 0 ||
                        is_locally_minimal(g, res.witness, AllianceKind::strong,
                                           true)}};
      return report.emit(
          out, json{{"size", res.size}, {"witness", witness_json(res.witness)}},
          asserts, res.size > 0 ? 0 : 1);
    }

    if (cc_cmd->parsed()) {
      json params{{"file", file},
                  {"k", k},
                  {"max_trials", max_trials},
                  {"threads", threads}};
      Report report("color-coding", params);
      Graph g = parse_graph(slurp_file(file));
      auto res = colorcoding::solve(g, static_cast<int>(k),
                                    colorcoding::TrialPolicy{seed, max_trials},
                                    threads);
      json result{{"found", res.witness.has_value()}};
      json asserts = json::object();
      if (res.witness) {
        result["witness"] = witness_json(*res.witness);
        asserts["witness_checked"] =
            is_connected_induced(g, *res.witness) &&
            is_locally_minimal(g, *res.witness, AllianceKind::ordinary, false);
      }
      result["trials_used"] = res.trials_used;
      result["theoretical_trials"] = res.theoretical;
      return report.emit(out, result, asserts, res.witness ? 0 : 1, seed);
    }

    if (nd_cmd->parsed()) {
      Report report("nd-ilp", json{{"file", file}});
      Graph g = parse_graph(slurp_file(file));
      auto res = ndilp::max_lmda_nd(g);
      json asserts{{"witness_checked",
                    res.size == 0 ||
                        is_locally_minimal(g, res.witness, AllianceKind::ordinary,
                                           false)}};
      return report.emit(out,
                         json{{"nd", res.nd},
                              {"size", res.size},
                              {"witness", witness_json(res.witness)},
                              {"assignments_tried", res.assignments_tried}},
                         asserts, res.size > 0 ? 0 : 1);
    }

    if (tw_cmd->parsed()) {
      json params{{"file", file}};
      Report report("tw-dp", params);
      Graph g = parse_graph(slurp_file(file));
      twdp::NiceDecomposition nice;
      if (!td_path.empty()) {
        // decomposition input: lines "bag <id>: v1 v2 ..." and "edge <a> <b>"
        twdp::TreeDecomposition td;
        std::istringstream in(slurp_file(td_path));
        std::string word;
        std::map<int, std::vector<int>> bags;
        std::vector<std::pair<int, int>> edges;
        while (in >> word) {
          if (word == "bag") {
            std::string id_colon;
            in >> id_colon;
            if (!id_colon.empty() && id_colon.back() == ':') id_colon.pop_back();
            int id = std::stoi(id_colon);
            std::string rest;
            std::getline(in, rest);
            std::istringstream line(rest);
            int v;
            std::vector<int> bag;
            while (line >> v) bag.push_back(v - 1);
            std::sort(bag.begin(), bag.end());
            bags[id] = bag;
          } else if (word == "edge") {
            int a, b;
            in >> a >> b;
            edges.push_back({a, b});
          } else {
            throw std::invalid_argument("--td: unexpected token '" + word + "'");
          }
        }
        std::map<int, int> index;
        for (auto& [id, bag] : bags) {
          index[id] = static_cast<int>(td.bags.size());
          td.bags.push_back(bag);
        }
        for (auto [a, b] : edges) {
          if (!index.count(a) || !index.count(b))
            throw std::invalid_argument("--td: edge references unknown bag");
          td.edges.push_back({index[a], index[b]});
        }
        if (!twdp::valid_decomposition(g, td))
          throw std::invalid_argument("--td: not a valid tree decomposition");
        report.doc["parameters"]["td"] = td_path;
        nice = twdp::make_nice(td);
      } else {
        nice = twdp::make_nice(twdp::decompose(g));
      }
      auto res = twdp::dp_solve(g, nice);
      json asserts{{"witness_checked",
                    res.size == 0 ||
                        is_locally_minimal(g, res.witness, AllianceKind::ordinary,
                                           false)}};
      return report.emit(out,
                         json{{"width_used", res.width_used},
                              {"size", res.size},
                              {"witness", witness_json(res.witness)},
                              {"records_peak", res.records_peak}},
                         asserts, res.size > 0 ? 0 : 1);
    }

    if (reduce_cmd->parsed()) {
      json params{{"kind", which}, {"file", file}};
      Report report("reduce", params);
      ReduceOutput product;

      if (which == "mmm") {
        if (k < 0) throw std::invalid_argument("reduce mmm requires --k");
        Graph g = parse_graph(slurp_file(file));
        auto inst = reductions::reduce_mmm_to_lmda(g, k);
        const auto& lay = inst.layout;
        json layout{
            {"source_vertices", range_1based(0, lay.n)},
            {"edge_vertices", range_1based(lay.b_base, lay.m)},
            {"vertex_hubs", range_1based(lay.vsq_base, lay.n)},
            {"edge_hubs", range_1based(lay.esq_base, 2 * lay.m)},
            {"cycles", range_1based(lay.cycle_base, lay.hub_count * lay.cycle_len)},
            {"cycle_len", lay.cycle_len}};
        reductions::AnnotatedInstance annotated;
        annotated.graph = inst.graph;
        annotated.k = inst.k_prime;
        annotated.necessary = VertexSet(inst.graph.n());
        annotated.forbidden = VertexSet(inst.graph.n());
        product.graph = std::move(inst.graph);
        product.sidecar = sidecar_json(annotated, layout, std::nullopt);
        params["k"] = k;
      } else if (which == "mmo") {
        if (r < 0) throw std::invalid_argument("reduce mmo requires --r");
        WeightedGraph wg = parse_weighted_graph(slurp_file(file));
        auto inst = reductions::reduce_mmo_to_lmda_fn(wg, r);
        const auto& lay = inst.layout;
        json pairs = json::array();
        for (const auto& c : lay.pairs)
          pairs.push_back({{"first", c.first + 1},
                           {"second", c.second + 1},
                           {"tri", c.tri + 1},
                           {"sq", c.sq + 1},
                           {"tri2", c.tri2 + 1}});
        json layout{{"source_vertices", range_1based(0, lay.n)},
                    {"vertex_squares", ids_1based(lay.vsq)},
                    {"helper_base", ids_1based(lay.h_base)},
                    {"helper_square_base", ids_1based(lay.hsq_base)},
                    {"uv_base", ids_1based(lay.uv_base)},
                    {"uv_square_base", ids_1based(lay.uvsq_base)},
                    {"vu_base", ids_1based(lay.vu_base)},
                    {"vu_square_base", ids_1based(lay.vusq_base)},
                    {"pairs", pairs}};
        product.graph = inst.annotated.graph;
        product.sidecar =
            sidecar_json(inst.annotated, layout, inst.closed_form_k);
        params["r"] = r;
      } else {
        std::string side = sidecar_path.empty() ? file + ".json" : sidecar_path;
        auto inst = load_annotated(file, side);
        if (which == "fn2cfn") {
          auto res = reductions::fn_to_connected_fn(inst);
          json layout{{"hub", res.hub + 1},
                      {"taboo", res.taboo + 1},
                      {"ring", range_1based(res.ring_base, 4 * res.n_source)},
                      {"pendants",
                       range_1based(res.pendant_base, 16 * res.n_source)}};
          product.graph = res.annotated.graph;
          product.sidecar = sidecar_json(res.annotated, layout, std::nullopt);
        } else if (which == "fn2f") {
          auto res = reductions::fn_to_f(inst);
          json layout{{"source_necessary", ids_1based(res.source_necessary)},
                      {"u1", ids_1based(res.u1)},
                      {"u2", ids_1based(res.u2)},
                      {"ring_base", ids_1based(res.ring_base)},
                      {"pendant_base", ids_1based(res.pendant_base)}};
          product.graph = res.annotated.graph;
          product.sidecar = sidecar_json(res.annotated, layout, std::nullopt);
        } else if (which == "f2exact") {
          auto res = reductions::f_to_exact(inst);
          json layout{{"pendants",
                       range_1based(res.n_source,
                                    res.annotated.graph.n() - res.n_source)}};
          product.graph = res.annotated.graph;
          product.sidecar = sidecar_json(res.annotated, layout, std::nullopt);
        } else {
          throw std::invalid_argument("unknown reduction '" + which + "'");
        }
      }

      report.doc["parameters"] = params;
      json result{{"n", product.graph.n()},
                  {"m", product.graph.m()},
                  {"k", product.sidecar["k"]},
                  {"sidecar", product.sidecar}};
      if (!out_prefix.empty()) {
        std::ofstream graph_out(out_prefix + ".graph");
        graph_out << serialize(product.graph);
        std::ofstream side_out(out_prefix + ".json");
        side_out << product.sidecar.dump(2) << "\n";
        result["graph_file"] = out_prefix + ".graph";
        result["sidecar_file"] = out_prefix + ".json";
      } else {
        result["graph"] = serialize(product.graph);
      }
      return report.emit(out, result, json::object(), 0);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace alliance::cli
