#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcube/graph.hpp"
#include "fibcube/word.hpp"

namespace fibcube {

/// Q_d(f): the subgraph of the d-cube induced on the length-d words that avoid
/// f, or the whole d-cube when f is absent. Vertices are numbered in ascending
/// order of their words read as big-endian integers.
class AvoidanceGraph {
public:
  static constexpr int kMaxDimension = 14;

  AvoidanceGraph(int d, std::optional<Word> f);

  int dimension() const { return d_; }
  const std::optional<Word>& forbidden() const { return f_; }
  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }

  Word word(int v) const { return Word(codes_[static_cast<std::size_t>(v)], d_); }
  const std::vector<std::uint32_t>& codes() const { return codes_; }
  /// Vertex index of w, or nullopt when w is not a vertex.
  std::optional<int> index_of(const Word& w) const;
  bool contains(const Word& w) const { return index_of(w).has_value(); }

private:
  int d_;
  std::optional<Word> f_;
  std::vector<std::uint32_t> codes_;
  std::vector<int> index_;  // code -> vertex or -1
  Graph graph_;
};

/// Throws std::invalid_argument unless 1 <= d <= 14.
AvoidanceGraph build_graph(int d, std::optional<Word> f = std::nullopt);

/// w + e_i (mod 2); i is 1-indexed.
Word flip_bit(const Word& w, int i);

struct ExcludedSets {
  /// V(Q_d) minus V(Q_d(f)), ascending.
  std::vector<Word> removed;
  /// Layers {u f v : |u| = i, |v| = k-1-i} for i = 0..k-1; only filled when
  /// f is 0^k1^k or 0^{k+1}1^{k-1} and d = 3k-1.
  std::vector<std::vector<Word>> layers;
};

ExcludedSets excluded_sets(int d, const Word& f);

/// BFS distance in G, nullopt when v is unreachable from u.
/// Throws std::invalid_argument when u or v is not a vertex of G.
std::optional<int> graph_distance(const AvoidanceGraph& g, const Word& u, const Word& v);

/// Number of 4-cycles of G through the edge uv. Throws on a non-edge.
std::int64_t count_c4_through_edge(const AvoidanceGraph& g, const Word& u, const Word& v);
std::int64_t count_c4_through_edge(const Graph& g, int u, int v);

/// Shortest path from b to c that flips the differing positions left to right.
std::vector<Word> left_to_right_path(const Word& b, const Word& c);

std::int64_t edge_count(const AvoidanceGraph& g);

/// Standard graph6 text, without a trailing newline.
std::string to_graph6(const Graph& g);
/// Throws std::invalid_argument on malformed input. Accepts an optional
/// trailing newline.
Graph from_graph6(std::string_view text);

// Structural facts about subgraphs of hypercubes.

bool is_bipartite(const Graph& g);
/// Largest number of common neighbors over all pairs of distinct vertices.
int max_common_neighbors(const Graph& g);
/// Maximum number of internally vertex-disjoint shortest u-v paths.
int count_disjoint_shortest_paths(const Graph& g, int u, int v);

/// The subgraph induced on a vertex subset of the full d-cube.
Graph induced_cube_subgraph(const std::vector<Word>& vertices);

} // namespace fibcube
