#pragma once

#include <utility>
#include <vector>

#include "gnpwalk/graph.hpp"

namespace fixtures {

inline gnpwalk::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return gnpwalk::Graph::from_edges(n, std::move(edges));
}

inline gnpwalk::Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return gnpwalk::Graph::from_edges(n, std::move(edges));
}

inline gnpwalk::Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return gnpwalk::Graph::from_edges(n, std::move(edges));
}

/// Two disjoint edges on four vertices.
inline gnpwalk::Graph disconnected4() {
  return gnpwalk::Graph::from_edges(4, {{0, 1}, {2, 3}});
}

}  // namespace fixtures
