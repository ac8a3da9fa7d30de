#include "fibcube/cube.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fibcube {

AvoidanceGraph::AvoidanceGraph(int d, std::optional<Word> f) : d_(d), f_(f) {
  if (d < 1 || d > kMaxDimension)
    throw std::invalid_argument("build_graph: d must be in [1, 14], got " + std::to_string(d));
  const std::uint32_t limit = 1u << d;
  index_.assign(limit, -1);
  for (std::uint32_t c = 0; c < limit; ++c) {
    if (f && contains_factor(Word(c, d), *f)) continue;
    index_[c] = static_cast<int>(codes_.size());
    codes_.push_back(c);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    for (int b = 0; b < d; ++b) {
      const std::uint32_t other = codes_[i] ^ (1u << b);
      const int j = index_[other];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  graph_ = Graph(static_cast<int>(codes_.size()), edges);
}

std::optional<int> AvoidanceGraph::index_of(const Word& w) const {
  if (w.length() != d_) return std::nullopt;
  const int i = index_[w.code()];
  if (i < 0) return std::nullopt;
  return i;
}

AvoidanceGraph build_graph(int d, std::optional<Word> f) { return AvoidanceGraph(d, f); }

Word flip_bit(const Word& w, int i) {
  if (i < 1 || i > w.length())
    throw std::invalid_argument("flip_bit: index " + std::to_string(i) + " outside [1, " +
                                std::to_string(w.length()) + "]");
  return Word(w.code() ^ (1u << (w.length() - i)), w.length());
}

ExcludedSets excluded_sets(int d, const Word& f) {
  if (f.length() > d || d > AvoidanceGraph::kMaxDimension)
    throw std::invalid_argument("excluded_sets: need |f| <= d <= 14");
  ExcludedSets out;
  const std::uint32_t limit = 1u << d;
  for (std::uint32_t c = 0; c < limit; ++c) {
    const Word w(c, d);
    if (contains_factor(w, f)) out.removed.push_back(w);
  }

  // Layer decomposition for 0^k1^k and 0^{k+1}1^{k-1} at d = 3k-1.
  if ((d + 1) % 3 != 0) return out;
  const int k = (d + 1) / 3;
  if (k < 2 || f.length() != 2 * k) return out;
  const Word a = Word::zeros(k) + Word::ones(k);
  const Word b = Word::zeros(k + 1) + Word::ones(k - 1);
  if (f != a && f != b) return out;
  out.layers.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int tail = k - 1 - i;
    for (std::uint32_t u = 0; u < (1u << i); ++u) {
      for (std::uint32_t v = 0; v < (1u << tail); ++v) {
        const std::uint32_t code = (u << (2 * k + tail)) | (f.code() << tail) | v;
        out.layers[static_cast<std::size_t>(i)].push_back(Word(code, d));
      }
    }
    std::sort(out.layers[static_cast<std::size_t>(i)].begin(),
              out.layers[static_cast<std::size_t>(i)].end());
  }
  return out;
}

namespace {

int require_vertex(const AvoidanceGraph& g, const Word& w) {
  auto i = g.index_of(w);
  if (!i) throw std::invalid_argument("word " + w.str() + " is not a vertex of the graph");
  return *i;
}

} // namespace

std::optional<int> graph_distance(const AvoidanceGraph& g, const Word& u, const Word& v) {
  const int s = require_vertex(g, u);
  const int t = require_vertex(g, v);
  const int dist = bfs_distances(g.graph(), s)[static_cast<std::size_t>(t)];
  if (dist < 0) return std::nullopt;
  return dist;
}

std::int64_t count_c4_through_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("count_c4_through_edge: not an edge");
  std::int64_t n = 0;
  for (int x : g.neighbors(u)) {
    if (x == v) continue;
    for (int y : g.neighbors(v))
      if (y != u && y != x && g.has_edge(x, y)) ++n;
  }
  return n;
}

std::int64_t count_c4_through_edge(const AvoidanceGraph& g, const Word& u, const Word& v) {
  return count_c4_through_edge(g.graph(), require_vertex(g, u), require_vertex(g, v));
}

std::vector<Word> left_to_right_path(const Word& b, const Word& c) {
  if (b.length() != c.length()) throw std::invalid_argument("left_to_right_path: length mismatch");
  std::vector<Word> path{b};
  Word cur = b;
  for (int i = 1; i <= b.length(); ++i) {
    if (b.bit(i) != c.bit(i)) {
      cur = flip_bit(cur, i);
      path.push_back(cur);
    }
  }
  return path;
}

std::int64_t edge_count(const AvoidanceGraph& g) { return g.graph().size(); }

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  if (n >= 258048) throw std::invalid_argument("graph6: order must be below 258048");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  const std::int64_t bits = n * (n - 1) / 2;
  std::string body(static_cast<std::size_t>((bits + 5) / 6), '\0');
  // Bit index of pair (i, j), i < j, in column order is j(j-1)/2 + i.
  for (auto [i, j] : g.edges()) {
    const std::int64_t k = static_cast<std::int64_t>(j) * (j - 1) / 2 + i;
    body[static_cast<std::size_t>(k / 6)] |= static_cast<char>(1 << (5 - k % 6));
  }
  for (char& ch : body) ch = static_cast<char>(ch + 63);
  return out + body;
}

Graph from_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  auto sixbits = [&](std::size_t pos) {
    const int v = static_cast<unsigned char>(text[pos]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: byte out of range");
    return v;
  };
  std::int64_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated size field");
    if (static_cast<unsigned char>(text[1]) == 126)
      throw std::invalid_argument("graph6: orders of 258048 or more are not supported");
    n = (std::int64_t{sixbits(1)} << 12) | (sixbits(2) << 6) | sixbits(3);
    if (n <= 62) throw std::invalid_argument("graph6: non-minimal size field");
    pos = 4;
  } else {
    n = sixbits(0);
    if (n == 63) throw std::invalid_argument("graph6: bad size byte");
    pos = 1;
  }
  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != want)
    throw std::invalid_argument("graph6: expected " + std::to_string(want) + " adjacency bytes, got " +
                                std::to_string(text.size() - pos));
  std::vector<std::pair<int, int>> edges;
  std::int64_t k = 0;
  for (std::int64_t j = 1; j < n; ++j) {
    for (std::int64_t i = 0; i < j; ++i, ++k) {
      const int byte = sixbits(pos + static_cast<std::size_t>(k / 6));
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (bits % 6 != 0) {
    const int last = sixbits(text.size() - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding");
  }
  return Graph(static_cast<int>(n), edges);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

int max_common_neighbors(const Graph& g) {
  const int n = g.order();
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  std::vector<int> touched;
  int best = 0;
  for (int u = 0; u < n; ++u) {
    // count two-step walks u - x - w for w > u
    for (int x : g.neighbors(u)) {
      for (int w : g.neighbors(x)) {
        if (w <= u) continue;
        if (count[static_cast<std::size_t>(w)]++ == 0) touched.push_back(w);
      }
    }
    for (int w : touched) {
      best = std::max(best, count[static_cast<std::size_t>(w)]);
      count[static_cast<std::size_t>(w)] = 0;
    }
    touched.clear();
  }
  return best;
}

int count_disjoint_shortest_paths(const Graph& g, int u, int v) {
  if (u == v) return 0;
  const auto du = bfs_distances(g, u);
  const auto dv = bfs_distances(g, v);
  const int total = du[static_cast<std::size_t>(v)];
  if (total < 0) return 0;
  if (total == 1) return 1;

  // Split every vertex x into x_in = 2x and x_out = 2x+1 with unit capacity;
  // keep only arcs that advance along a shortest u-v path.
  const int n = g.order();
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> net(static_cast<std::size_t>(2 * n));
  auto add = [&](int a, int b, int cap) {
    net[static_cast<std::size_t>(a)].push_back({b, cap, static_cast<int>(net[static_cast<std::size_t>(b)].size())});
    net[static_cast<std::size_t>(b)].push_back({a, 0, static_cast<int>(net[static_cast<std::size_t>(a)].size()) - 1});
  };
  auto on_path = [&](int x) {
    const int a = du[static_cast<std::size_t>(x)];
    const int b = dv[static_cast<std::size_t>(x)];
    return a >= 0 && b >= 0 && a + b == total;
  };
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  for (int x = 0; x < n; ++x) {
    if (!on_path(x)) continue;
    add(2 * x, 2 * x + 1, (x == u || x == v) ? kInf : 1);
    for (int y : g.neighbors(x))
      if (on_path(y) && du[static_cast<std::size_t>(y)] == du[static_cast<std::size_t>(x)] + 1)
        add(2 * x + 1, 2 * y, 1);
  }
  const int source = 2 * u + 1;
  const int sink = 2 * v;
  int flow = 0;
  std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(2 * n));
  for (;;) {
    std::fill(parent.begin(), parent.end(), std::pair{-1, -1});
    std::vector<int> queue{source};
    parent[static_cast<std::size_t>(source)] = {source, -1};
    for (std::size_t h = 0; h < queue.size() && parent[static_cast<std::size_t>(sink)].first < 0; ++h) {
      const int a = queue[h];
      for (int e = 0; e < static_cast<int>(net[static_cast<std::size_t>(a)].size()); ++e) {
        const Arc& arc = net[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)];
        if (arc.cap > 0 && parent[static_cast<std::size_t>(arc.to)].first < 0) {
          parent[static_cast<std::size_t>(arc.to)] = {a, e};
          queue.push_back(arc.to);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)].first < 0) break;
    for (int x = sink; x != source;) {
      auto [p, e] = parent[static_cast<std::size_t>(x)];
      Arc& arc = net[static_cast<std::size_t>(p)][static_cast<std::size_t>(e)];
      arc.cap -= 1;
      net[static_cast<std::size_t>(x)][static_cast<std::size_t>(arc.rev)].cap += 1;
      x = p;
    }
    ++flow;
  }
  return flow;
}

Graph induced_cube_subgraph(const std::vector<Word>& vertices) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i].length() == vertices[j].length() &&
          __builtin_popcount(vertices[i].code() ^ vertices[j].code()) == 1)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(vertices.size()), edges);
}

} // namespace fibcube
