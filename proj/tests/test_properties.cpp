#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fibcube/cube.hpp"
#include "fibcube/iso.hpp"
#include "fibcube/word.hpp"

using namespace fibcube;

namespace {

std::vector<AvoidanceGraph> family(int d) {
  std::vector<AvoidanceGraph> out;
  out.push_back(build_graph(d));
  for (int k = 1; k <= d; ++k)
    for (const Word& f : representatives(k)) out.push_back(build_graph(d, f));
  return out;
}

// 50 graphs: ten forbidden factors at each of d = 5..9, spread over lengths
std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (int d = 5; d <= 9; ++d) {
    std::vector<Word> pool;
    for (int k = 2; k <= d - 1; ++k)
      for (const Word& f : representatives(k)) pool.push_back(f);
    const std::size_t step = pool.size() / 10;
    for (std::size_t i = 0; i < 10; ++i) out.push_back(build_graph(d, pool[i * step]).graph());
  }
  return out;
}

std::vector<int> degree_list(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("every Q_d(f) is bipartite") {
  for (int d = 1; d <= 10; ++d)
    for (const auto& g : family(d)) CHECK(is_bipartite(g.graph()));
}

TEST_CASE("no two vertices share three neighbors") {
  for (int d = 2; d <= 8; ++d) CHECK(max_common_neighbors(build_graph(d).graph()) == 2);
  for (int d = 2; d <= 9; ++d)
    for (const auto& g : family(d)) CHECK(max_common_neighbors(g.graph()) <= 2);
}

TEST_CASE("each edge of Q_d lies in d-1 four-cycles") {
  for (int d = 1; d <= 8; ++d) {
    const auto q = build_graph(d).graph();
    for (const auto& [u, v] : q.edges()) {
      INFO("d=" << d << " edge " << u << "-" << v);
      CHECK(count_c4_through_edge(q, u, v) == d - 1);
    }
  }
  const auto q = build_graph(4).graph();
  CHECK_THROWS_AS(count_c4_through_edge(q, 0, 3), std::invalid_argument);
}

TEST_CASE("three disjoint shortest paths at distance 3") {
  for (int d = 3; d <= 6; ++d) {
    const auto q = build_graph(d).graph();
    for (int u = 0; u < q.order(); ++u) {
      const auto dist = bfs_distances(q, u);
      for (int v = u + 1; v < q.order(); ++v)
        if (dist[static_cast<std::size_t>(v)] == 3) CHECK(count_disjoint_shortest_paths(q, u, v) == 3);
    }
  }
}

TEST_CASE("excluded set shape for |f| = d-1") {
  for (int d = 3; d <= 10; ++d)
    for (const Word& f : representatives(d - 1)) {
      const auto a = induced_cube_subgraph(excluded_sets(d, f).removed);
      INFO("d=" << d << " f=" << f.str());
      if (nu(f) == 0) {
        CHECK(a.order() == 3);
        CHECK(degree_list(a) == std::vector<int>{1, 1, 2});
      } else if (nu(f) == 1) {
        CHECK(a.order() == 4);
        CHECK(degree_list(a) == std::vector<int>{1, 1, 2, 2});
        CHECK(a.size() == 3);
      } else {
        CHECK(a.order() == 4);
        CHECK(degree_list(a) == std::vector<int>{1, 1, 1, 1});
      }
    }
}

TEST_CASE("layers of the 3k-1 excluded set") {
  for (int k = 2; k <= 4; ++k) {
    for (const Word& f : {Word::zeros(k) + Word::ones(k), Word::zeros(k + 1) + Word::ones(k - 1)}) {
      const auto e = excluded_sets(3 * k - 1, f);
      REQUIRE(e.layers.size() == static_cast<std::size_t>(k));
      std::vector<Word> all;
      for (const auto& layer : e.layers) {
        CHECK(layer.size() == static_cast<std::size_t>(1 << (k - 1)));
        all.insert(all.end(), layer.begin(), layer.end());
      }
      std::sort(all.begin(), all.end());
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      CHECK(all.size() == static_cast<std::size_t>(k << (k - 1)));
      CHECK(e.removed.size() == all.size());
    }
  }
}

TEST_CASE("certificate invariance on a fixed corpus") {
  std::mt19937 rng(20240601);
  const auto graphs = corpus();
  REQUIRE(graphs.size() == 50);
  for (const auto& g : graphs) {
    const auto base = canonical_certificate(g);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 100; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_certificate(g.relabeled(perm)) == base);
    }
  }
  const auto q5 = build_graph(5, Word::parse("010")).graph();
  const auto base = canonical_certificate(q5);
  std::vector<int> perm(static_cast<std::size_t>(q5.order()));
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 100; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_certificate(q5.relabeled(perm)) == base);
  }
}
