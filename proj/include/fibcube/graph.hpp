#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fibcube {

/// Simple undirected graph on vertices 0..n-1 in compressed sparse rows.
/// Neighbor lists are sorted and free of duplicates and loops.
class Graph {
public:
  Graph() = default;
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::int64_t size() const { return static_cast<std::int64_t>(nbrs_.size()) / 2; }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> neighbors(int v) const {
    return {nbrs_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }
  bool has_edge(int u, int v) const;

  /// Edges (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<int> offsets_{0};
  std::vector<int> nbrs_;
};

/// Unweighted BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

} // namespace fibcube
