#include "fibcube/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibcube {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[static_cast<std::size_t>(v)];
  nbrs_.assign(static_cast<std::size_t>(offsets_[n]), 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    nbrs_[static_cast<std::size_t>(fill[u]++)] = v;
    nbrs_[static_cast<std::size_t>(fill[v]++)] = u;
  }
  // sort rows and drop parallel edges
  std::vector<int> compact;
  compact.reserve(nbrs_.size());
  std::vector<int> new_offsets(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto first = nbrs_.begin() + offsets_[v];
    auto last = nbrs_.begin() + offsets_[v + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    compact.insert(compact.end(), first, last);
    new_offsets[static_cast<std::size_t>(v) + 1] = static_cast<int>(compact.size());
  }
  offsets_ = std::move(new_offsets);
  nbrs_ = std::move(compact);
}

bool Graph::has_edge(int u, int v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int u = 0; u < order(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw std::invalid_argument("permutation size mismatch");
  auto es = edges();
  for (auto& [u, v] : es) {
    u = perm[static_cast<std::size_t>(u)];
    v = perm[static_cast<std::size_t>(v)];
  }
  return Graph(order(), es);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

} // namespace fibcube
