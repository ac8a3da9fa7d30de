#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "fibcube/cube.hpp"
#include "fibcube/word.hpp"

using namespace fibcube;

namespace {
Word w(const char* s) { return Word::parse(s); }

std::vector<Word> vertex_words(const AvoidanceGraph& g) {
  std::vector<Word> v;
  for (int i = 0; i < g.order(); ++i) v.push_back(g.word(i));
  return v;
}

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& x : ws) out.push_back(x.str());
  std::sort(out.begin(), out.end());
  return out;
}
} // namespace

TEST_CASE("small avoidance graphs") {
  const auto g = build_graph(3, w("11"));
  CHECK(g.order() == 5);
  CHECK(strs(vertex_words(g)) == std::vector<std::string>{"000", "001", "010", "100", "101"});
  CHECK(g.graph().size() == 5);
  std::vector<int> degrees;
  for (int v = 0; v < g.order(); ++v) degrees.push_back(g.graph().degree(v));
  CHECK(degrees == std::vector<int>{3, 2, 1, 2, 2});

  CHECK(build_graph(4, w("0110")).order() == 15);
  CHECK(build_graph(6, w("0110")).graph().size() == 132);
  CHECK(build_graph(6, w("0100")).graph().size() == 133);
  CHECK(build_graph(8, w("0011")).graph().size() == 588);
  CHECK(build_graph(5).graph().size() == 80);
  CHECK(build_graph(5, w("000000")).order() == 32);
  CHECK_THROWS_AS(build_graph(15), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(0), std::invalid_argument);
}

TEST_CASE("flip_bit") {
  CHECK(flip_bit(w("000"), 1) == w("100"));
  CHECK(flip_bit(w("000"), 3) == w("001"));
  CHECK_THROWS_AS(flip_bit(w("000"), 4), std::invalid_argument);
  CHECK_THROWS_AS(flip_bit(w("000"), 0), std::invalid_argument);
}

TEST_CASE("excluded sets") {
  const auto a = excluded_sets(5, w("0011"));
  CHECK(strs(a.removed) == std::vector<std::string>{"00011", "00110", "00111", "10011"});
  CHECK(a.layers.size() == 2);
  for (const Word& f : representatives(6)) {
    const auto e = excluded_sets(7, f);
    CHECK(e.removed.size() == (nu(f) == 0 ? 3u : 4u));
  }
  const auto big = excluded_sets(8, w("000111"));
  std::size_t total = 0;
  for (const auto& layer : big.layers) total += layer.size();
  CHECK(big.removed.size() == 3u * 4u);
  CHECK(total == big.removed.size());
}

TEST_CASE("distances on the full cube") {
  const auto q5 = build_graph(5);
  CHECK(graph_distance(q5, w("00110"), w("01100")) == 2);
  for (const Word& f : representatives(4)) {
    const int k = f.length();
    const Word b = f.prepend(f.bit(1));
    const Word c = f.append(f.bit(k));
    const Word bb = f.prepend(1 - f.bit(1));
    const Word cc = f.append(1 - f.bit(k));
    CHECK(graph_distance(q5, b, c) == nu(f));
    CHECK(graph_distance(q5, bb, cc) == nu(f) + 2);
  }
  const auto g = build_graph(4, w("11"));
  CHECK(graph_distance(g, w("0101"), w("1010")) == 4);
  CHECK_THROWS_AS(graph_distance(g, w("0110"), w("0000")), std::invalid_argument);
}

TEST_CASE("four-cycles through an edge") {
  const auto q3 = build_graph(3);
  const auto q5 = build_graph(5);
  CHECK(count_c4_through_edge(q3, w("000"), w("001")) == 2);
  CHECK(count_c4_through_edge(q5, w("01101"), w("01111")) == 4);
}

TEST_CASE("left-to-right path") {
  CHECK(strs(left_to_right_path(w("00110"), w("01100"))) == strs({w("00110"), w("01110"), w("01100")}));
  CHECK(left_to_right_path(w("00110"), w("01100"))[1] == w("01110"));
  CHECK(left_to_right_path(w("010"), w("010")).size() == 1);
}

TEST_CASE("edge counts for length d-1 words") {
  CHECK(edge_count(build_graph(5, w("0011"))) == 63);
  CHECK(edge_count(build_graph(5, w("0110"))) == 62);
}

TEST_CASE("graph6") {
  const std::pair<int, int> e[] = {{0, 1}};
  const Graph k2(2, e);
  CHECK(to_graph6(k2) == "A_");
  CHECK(to_graph6(build_graph(3, w("11")).graph()) == "DsS");
  CHECK(to_graph6(build_graph(4, w("0110")).graph()) == "Nr`Gk@@GO``G@H?D?PW");
  CHECK(to_graph6(build_graph(5, w("0011")).graph()) ==
        "[sUAHGBD?S_I?J_?G?H?AC?OG?g??o??KC@??_GGA?`?C?B?CAG?A@C_?_PO?CAJ");
  for (const char* f : {"0110", "00111", "1"}) {
    const auto g = build_graph(9, w(f)).graph();
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(from_graph6(to_graph6(g) + "\n") == g);
  }
  const auto big = build_graph(7).graph();
  CHECK(to_graph6(big).front() == 126);
  CHECK(from_graph6(to_graph6(big)) == big);
  CHECK_THROWS_AS(from_graph6("A"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("A`"), std::invalid_argument);
}

TEST_CASE("structural helpers") {
  CHECK(is_bipartite(build_graph(6, w("0110")).graph()));
  const std::pair<int, int> tri[] = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_FALSE(is_bipartite(Graph(3, tri)));
  CHECK(max_common_neighbors(build_graph(6).graph()) == 2);
  const auto q4 = build_graph(4);
  CHECK(count_disjoint_shortest_paths(q4.graph(), *q4.index_of(w("0000")), *q4.index_of(w("0111"))) == 3);
  const auto sub = induced_cube_subgraph({w("00"), w("01"), w("11")});
  CHECK(sub.order() == 3);
  CHECK(sub.size() == 2);
}
