#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gnpwalk/errors.hpp"

namespace gnpwalk {

/// Parameters of the G(n, p) model: each of the C(n,2) unordered pairs is an
/// edge independently with probability p, driven by a 64-bit seed.
struct GnpParams {
  int n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Simple undirected graph on dense 0-based vertices. Immutable after
/// construction; safe to share across threads. Neighbor lists are sorted,
/// self-loops and parallel edges are rejected at construction.
class Graph {
 public:
  /// Builds from an unordered edge set. Throws SelfLoopError,
  /// DuplicateEdgeError or RangeError on invalid input.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }

  int min_degree() const;
  int max_degree() const;

  /// True iff every vertex is reachable from vertex 0. The single-vertex
  /// graph is connected. Computed once at construction.
  bool connected() const { return connected_; }

  /// Sorted edge list, i < j, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> degrees_;
  bool connected_ = false;
};

/// Samples one realization of G(n, p). Deterministic in params.seed; the
/// edge stream is derived from (seed, stream 0). Pair-by-pair Bernoulli
/// draws up to n = 4096, geometric skip sampling above.
Graph sample_gnp(const GnpParams& params);

bool is_connected(const Graph& g);

/// pi_i = d_i / (2|E|). Throws EmptyGraphError when the graph has no edges.
std::vector<double> stationary_distribution(const Graph& g);

/// Edge-list text format: header line "n <count>", then one "i j" line per
/// edge. write_edge_list emits edges with i < j in lexicographic order.
Graph read_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

}  // namespace gnpwalk
