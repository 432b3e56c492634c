#include "alliance/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace alliance {

parse_error::parse_error(int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
      line(line_no) {}

VertexSet::VertexSet(int universe)
    : words_(static_cast<std::size_t>(universe + 63) / 64, 0), universe_(universe) {}

VertexSet VertexSet::of(int universe, const std::vector<int>& ids) {
  VertexSet s(universe);
  for (int v : ids) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask: universe > 64");
  VertexSet s(universe);
  while (mask) {
    int v = std::countr_zero(mask);
    s.insert(v);
    mask &= mask - 1;
  }
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) throw std::invalid_argument("vertex id out of range");
  std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
  std::uint64_t bit = 1ULL << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) throw std::invalid_argument("vertex id out of range");
  std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
  std::uint64_t bit = 1ULL << (v & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::low_mask() const {
  if (universe_ > 64) throw std::invalid_argument("low_mask: universe > 64");
  return words_.empty() ? 0 : words_[0];
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::invalid_argument("parallel edge");
  }
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

long long WeightedGraph::total_weight() const {
  return std::accumulate(weight.begin(), weight.end(), 0LL);
}

WeightedGraph ParsedInput::weighted_graph() const {
  if (!weights) throw std::invalid_argument("input carries no edge weights");
  return WeightedGraph{graph, *weights};
}

namespace {

// splits a line into whitespace-separated tokens
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

long long to_int(const std::string& t, int line_no, const char* what) {
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw parse_error(line_no, std::string("malformed ") + what + " '" + t + "'");
  }
  if (pos != t.size())
    throw parse_error(line_no, std::string("malformed ") + what + " '" + t + "'");
  return v;
}

}  // namespace

ParsedInput parse_input(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;  // leading blank lines
    if (toks.size() != 2) throw parse_error(line_no, "expected header 'n m'");
    n = to_int(toks[0], line_no, "vertex count");
    m = to_int(toks[1], line_no, "edge count");
    break;
  }
  if (n < 0) throw parse_error(line_no, "missing header 'n m'");
  if (m < 0) throw parse_error(line_no, "negative edge count");

  std::vector<std::pair<int, int>> edges;
  std::vector<long long> weights;
  std::unordered_set<std::uint64_t> edge_keys;
  bool any_weight = false;
  long long seen = 0;
  while (seen < m) {
    if (!std::getline(in, line))
      throw parse_error(line_no, "expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(seen));
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2 && toks.size() != 3)
      throw parse_error(line_no, "expected 'u v' or 'u v w'");
    long long u = to_int(toks[0], line_no, "vertex id");
    long long v = to_int(toks[1], line_no, "vertex id");
    if (u < 1 || u > n || v < 1 || v > n)
      throw parse_error(line_no, "vertex id out of range 1.." + std::to_string(n));
    if (u == v) throw parse_error(line_no, "self-loop");
    if (toks.size() == 3) {
      long long w = to_int(toks[2], line_no, "weight");
      if (w < 1) throw parse_error(line_no, "weight must be >= 1");
      if (!any_weight && seen > 0)
        throw parse_error(line_no, "weight on some edge lines but not all");
      any_weight = true;
      weights.push_back(w);
    } else if (any_weight) {
      throw parse_error(line_no, "weight on some edge lines but not all");
    }
    auto [lo, hi] = std::minmax(u, v);
    if (!edge_keys.insert(static_cast<std::uint64_t>(lo) * (n + 1) + hi).second)
      throw parse_error(line_no, "duplicate edge");
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    ++seen;
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!tokens_of(line).empty()) throw parse_error(line_no, "trailing content");
  }

  ParsedInput out;
  try {
    out.graph = Graph::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    // re-derive the offending line for the error message
    throw parse_error(1, e.what());
  }
  if (any_weight) out.weights = std::move(weights);
  return out;
}

ParsedInput parse_input(const std::string& text) {
  std::istringstream iss(text);
  return parse_input(iss);
}

Graph parse_graph(const std::string& text) {
  auto in = parse_input(text);
  if (in.weighted()) throw std::invalid_argument("expected unweighted graph");
  return in.graph;
}

WeightedGraph parse_weighted_graph(const std::string& text) {
  return parse_input(text).weighted_graph();
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string serialize(const WeightedGraph& wg) {
  std::ostringstream out;
  out << wg.base.n() << ' ' << wg.base.m() << '\n';
  for (std::size_t i = 0; i < wg.base.edges().size(); ++i) {
    auto [u, v] = wg.base.edges()[i];
    out << u + 1 << ' ' << v + 1 << ' ' << wg.weight[i] << '\n';
  }
  return out.str();
}

std::pair<int, int> degrees_within(const Graph& g, const VertexSet& s, int v) {
  int in_s = 0;
  for (int u : g.neighbors(v))
    if (s.contains(u)) ++in_s;
  return {in_s, g.degree(v) - in_s};
}

namespace {

std::vector<std::vector<int>> components_impl(const Graph& g,
                                              const VertexSet* restrict_to) {
  int n = g.n();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> blocks;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    if (restrict_to && !restrict_to->contains(start)) continue;
    std::vector<int> block;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (int u : g.neighbors(v)) {
        if (seen[u]) continue;
        if (restrict_to && !restrict_to->contains(u)) continue;
        seen[u] = 1;
        stack.push_back(u);
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return blocks;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
  return components_impl(g, nullptr);
}

std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const VertexSet& restrict_to) {
  return components_impl(g, &restrict_to);
}

bool is_connected_induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  int start = s.members().front();
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!seen[u] && s.contains(u)) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == s.size();
}

}  // namespace alliance
