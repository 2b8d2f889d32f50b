#include "gnpwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gnpwalk/rng.hpp"

namespace gnpwalk {

namespace {

// Pairs are linearized in lexicographic order: (0,1), (0,2), ..., (n-2,n-1).
// Maps a linear index back to (i, j) for the skip sampler.
std::pair<int, int> pair_from_index(std::int64_t t, int n) {
  // Row i starts at offset i*n - i*(i+1)/2 - i... solve by downward fixup of
  // the float estimate; exact for all t < C(n,2) at n <= 2^31.
  auto row_start = [n](std::int64_t i) { return i * (2 * static_cast<std::int64_t>(n) - i - 1) / 2; };
  double nd = static_cast<double>(n);
  auto i = static_cast<std::int64_t>(nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(t)));
  if (i < 0) i = 0;
  while (i + 1 < n && row_start(i + 1) <= t) ++i;
  while (i > 0 && row_start(i) > t) --i;
  auto j = i + 1 + (t - row_start(i));
  return {static_cast<int>(i), static_cast<int>(j)};
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw RangeError("vertex count must be >= 1");
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(n, {});
  for (auto& [a, b] : edges) {
    if (a == b) throw SelfLoopError("self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw RangeError("vertex id out of range: " + std::to_string(a) + " " + std::to_string(b));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    if (edges[k] == edges[k + 1])
      throw DuplicateEdgeError("duplicate edge " + std::to_string(edges[k].first) + " " +
                               std::to_string(edges[k].second));
  }
  for (const auto& [a, b] : edges) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = static_cast<std::int64_t>(edges.size());
  g.degrees_.resize(n);
  for (int v = 0; v < n; ++v) g.degrees_[v] = static_cast<int>(g.adjacency_[v].size());

  // BFS from vertex 0.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  std::size_t head = 0, reached = 1;
  while (head < queue.size()) {
    int u = queue[head++];
    for (int w : g.adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  g.connected_ = (reached == static_cast<std::size_t>(n));
  return g;
}

int Graph::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }
int Graph::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int i = 0; i < n_; ++i)
    for (int j : adjacency_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

Graph sample_gnp(const GnpParams& params) {
  if (params.n < 1) throw RangeError("vertex count must be >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw RangeError("edge probability must lie in [0, 1]");

  const int n = params.n;
  const double p = params.p;
  SplitMix64 rng = StreamKey(params.seed).child(0).generator();

  std::vector<std::pair<int, int>> edges;
  if (p >= 1.0) {
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  } else if (p > 0.0) {
    if (n <= 4096) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.next_bernoulli(p)) edges.emplace_back(i, j);
    } else {
      // Geometric skip sampling over the linearized pair index.
      const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
      const double log1mp = std::log1p(-p);
      std::int64_t t = -1;
      while (true) {
        const double u = rng.next_double();
        const double skip = std::floor(std::log1p(-u) / log1mp);
        if (skip > static_cast<double>(total)) break;
        t += 1 + static_cast<std::int64_t>(skip);
        if (t >= total) break;
        edges.push_back(pair_from_index(t, n));
      }
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

bool is_connected(const Graph& g) { return g.connected(); }

std::vector<double> stationary_distribution(const Graph& g) {
  if (g.edge_count() == 0) throw EmptyGraphError();
  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  std::vector<double> pi(g.n());
  for (int v = 0; v < g.n(); ++v) pi[v] = g.degree(v) / two_e;
  return pi;
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (n < 0) {
      long long count = 0;
      std::string extra;
      if (first != "n" || !(ls >> count) || (ls >> extra) || count < 1)
        throw ParseError("line " + std::to_string(lineno) + ": expected header \"n <count>\"");
      n = static_cast<int>(count);
      continue;
    }
    long long a = 0, b = 0;
    std::string extra;
    try {
      std::size_t pos = 0;
      a = std::stoll(first, &pos);
      if (pos != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad vertex id \"" + first + "\"");
    }
    if (!(ls >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) + ": expected \"i j\"");
    if (a == b) throw SelfLoopError("line " + std::to_string(lineno) + ": self-loop at " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw RangeError("line " + std::to_string(lineno) + ": vertex id out of range");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw ParseError("missing header line \"n <count>\"");
  return Graph::from_edges(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const auto& [i, j] : g.edges()) out << i << " " << j << "\n";
  return out.str();
}

}  // namespace gnpwalk
