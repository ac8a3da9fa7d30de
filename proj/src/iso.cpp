#include "fibcube/iso.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string_view>
#include <utility>

#include "fibcube/cube.hpp"

namespace fibcube {

namespace {

constexpr int kMaxOrder = 1 << 14;
constexpr int kNoJump = -1;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

void mix(std::uint64_t& h, std::uint64_t v) { h = splitmix(h ^ splitmix(v + 0x632BE59BD9B4E019ull)); }

/// Ordered partition of the vertex set. Cells are contiguous ranges of lab;
/// a cell is named by its start position.
struct Partition {
  std::vector<int> lab;   // position -> vertex
  std::vector<int> pos;   // vertex -> position
  std::vector<int> cell;  // vertex -> start of its cell
  std::vector<int> end;   // cell start -> one past its last position
  int cells = 0;

  int order() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return cells == order(); }
};

/// Equitable refinement driven by a FIFO of splitter cells. Every decision
/// depends only on cell positions and neighbor counts, so the resulting
/// ordered partition and trace are invariant under relabeling.
class Refiner {
public:
  explicit Refiner(const Graph& g)
      : g_(g),
        count_(static_cast<std::size_t>(g.order()), 0),
        queued_(static_cast<std::size_t>(g.order()), 0) {}

  Partition initial(std::span<const int> colors, std::uint64_t& trace) {
    const int n = g_.order();
    Partition p;
    p.lab.resize(static_cast<std::size_t>(n));
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) {
      return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
    });
    p.pos.resize(static_cast<std::size_t>(n));
    p.cell.resize(static_cast<std::size_t>(n));
    p.end.assign(static_cast<std::size_t>(n), 0);
    queue_.clear();
    head_ = 0;
    for (int i = 0; i < n;) {
      int j = i;
      const int c = colors[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])];
      while (j < n && colors[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(j)])] == c) ++j;
      for (int k = i; k < j; ++k) {
        p.pos[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(k)])] = k;
        p.cell[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(k)])] = i;
      }
      p.end[static_cast<std::size_t>(i)] = j;
      ++p.cells;
      mix(trace, static_cast<std::uint64_t>(j - i));
      push(i);
      i = j;
    }
    run(p, trace);
    return p;
  }

  /// Splits v off the front of its cell and refines.
  void individualize(Partition& p, int v, std::uint64_t& trace) {
    const int s = p.cell[static_cast<std::size_t>(v)];
    const int e = p.end[static_cast<std::size_t>(s)];
    swap_positions(p, v, p.lab[static_cast<std::size_t>(s)]);
    p.end[static_cast<std::size_t>(s)] = s + 1;
    p.end[static_cast<std::size_t>(s) + 1] = e;
    for (int i = s + 1; i < e; ++i) p.cell[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = s + 1;
    ++p.cells;
    mix(trace, static_cast<std::uint64_t>(s));
    queue_.clear();
    head_ = 0;
    push(s);
    run(p, trace);
  }

private:
  void push(int start) {
    queue_.push_back(start);
    queued_[static_cast<std::size_t>(start)] = 1;
  }

  static void swap_positions(Partition& p, int a, int b) {
    const int pa = p.pos[static_cast<std::size_t>(a)];
    const int pb = p.pos[static_cast<std::size_t>(b)];
    p.lab[static_cast<std::size_t>(pa)] = b;
    p.lab[static_cast<std::size_t>(pb)] = a;
    p.pos[static_cast<std::size_t>(a)] = pb;
    p.pos[static_cast<std::size_t>(b)] = pa;
  }

  void run(Partition& p, std::uint64_t& trace) {
    while (head_ < queue_.size()) {
      if (p.discrete()) break;
      const int w = queue_[head_++];
      queued_[static_cast<std::size_t>(w)] = 0;
      const int we = p.end[static_cast<std::size_t>(w)];
      mix(trace, (static_cast<std::uint64_t>(w) << 32) | static_cast<std::uint32_t>(we - w));

      touched_.clear();
      for (int i = w; i < we; ++i) {
        for (int u : g_.neighbors(p.lab[static_cast<std::size_t>(i)])) {
          if (count_[static_cast<std::size_t>(u)]++ == 0) touched_.push_back(u);
        }
      }
      groups_.clear();
      for (int u : touched_) {
        const auto key = (static_cast<std::uint64_t>(p.cell[static_cast<std::size_t>(u)]) << 32) |
                         static_cast<std::uint32_t>(count_[static_cast<std::size_t>(u)]);
        groups_.emplace_back(key, u);
      }
      std::sort(groups_.begin(), groups_.end());

      for (std::size_t g = 0; g < groups_.size();) {
        const int s = static_cast<int>(groups_[g].first >> 32);
        std::size_t h = g;
        while (h < groups_.size() && static_cast<int>(groups_[h].first >> 32) == s) ++h;
        split_cell(p, s, g, h, trace);
        g = h;
      }
      for (int u : touched_) count_[static_cast<std::size_t>(u)] = 0;
    }
    for (std::size_t i = head_; i < queue_.size(); ++i) queued_[static_cast<std::size_t>(queue_[i])] = 0;
    queue_.clear();
    head_ = 0;
    mix(trace, static_cast<std::uint64_t>(p.cells));
  }

  /// groups_[g, h) are the touched vertices of the cell starting at s, sorted
  /// by neighbor count.
  void split_cell(Partition& p, int s, std::size_t g, std::size_t h, std::uint64_t& trace) {
    const int e = p.end[static_cast<std::size_t>(s)];
    const int touched = static_cast<int>(h - g);
    const auto lo = static_cast<std::uint32_t>(groups_[g].first);
    const auto hi = static_cast<std::uint32_t>(groups_[h - 1].first);
    if (e - s == 1 || (touched == e - s && lo == hi)) {
      mix(trace, (static_cast<std::uint64_t>(s) << 32) | lo);
      return;
    }
    // Untouched vertices (count 0) stay in front; touched ones move to the
    // tail in ascending count order.
    int target = e - touched;
    for (std::size_t i = g; i < h; ++i) {
      swap_positions(p, groups_[i].second, p.lab[static_cast<std::size_t>(target)]);
      ++target;
    }
    frags_.clear();
    if (e - touched > s) frags_.push_back({s, e - touched, 0});
    int start = e - touched;
    for (std::size_t i = g; i < h;) {
      const auto c = static_cast<std::uint32_t>(groups_[i].first);
      std::size_t j = i;
      while (j < h && static_cast<std::uint32_t>(groups_[j].first) == c) ++j;
      frags_.push_back({start, start + static_cast<int>(j - i), c});
      start += static_cast<int>(j - i);
      i = j;
    }

    mix(trace, (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint32_t>(frags_.size()));
    std::size_t largest = 0;
    for (std::size_t f = 0; f < frags_.size(); ++f) {
      const auto& fr = frags_[f];
      mix(trace, (static_cast<std::uint64_t>(fr.end - fr.start) << 32) | fr.count);
      p.end[static_cast<std::size_t>(fr.start)] = fr.end;
      if (f > 0)
        for (int i = fr.start; i < fr.end; ++i) p.cell[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = fr.start;
      if (fr.end - fr.start > frags_[largest].end - frags_[largest].start) largest = f;
    }
    p.cells += static_cast<int>(frags_.size()) - 1;

    if (queued_[static_cast<std::size_t>(s)]) {
      for (std::size_t f = 1; f < frags_.size(); ++f) push(frags_[f].start);
    } else {
      for (std::size_t f = 0; f < frags_.size(); ++f)
        if (f != largest) push(frags_[f].start);
    }
  }

  struct Fragment {
    int start;
    int end;
    std::uint32_t count;
  };

  const Graph& g_;
  std::vector<int> count_;
  std::vector<char> queued_;
  std::vector<int> queue_;
  std::size_t head_ = 0;
  std::vector<int> touched_;
  std::vector<std::pair<std::uint64_t, int>> groups_;
  std::vector<Fragment> frags_;
};

std::vector<int> colors_of(const Partition& p) {
  std::vector<int> colors(static_cast<std::size_t>(p.order()));
  int c = -1;
  for (int i = 0; i < p.order(); ++i) {
    if (p.cell[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] == i) ++c;
    colors[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = c;
  }
  return colors;
}

/// Union-find over vertices, used for orbits of a set of generators.
class Orbits {
public:
  explicit Orbits(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

/// One trace entry per search depth: cell count after refinement, then a hash
/// of the refinement history. Equal cell counts make discreteness agree.
using TraceEntry = std::pair<int, std::uint64_t>;

class CanonSearch {
public:
  CanonSearch(const Graph& g, std::int64_t budget) : g_(g), refiner_(g), budget_(budget) {}

  CanonicalForm run() {
    const int n = g_.order();
    CanonicalForm out;
    if (n == 0) {
      out.certificate = to_graph6(g_);
      return out;
    }
    std::uint64_t h = 0;
    const std::vector<int> uniform(static_cast<std::size_t>(n), 0);
    Partition root = refiner_.initial(uniform, h);
    trace_.push_back({root.cells, h});
    dfs(root);

    out.position.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) out.position[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(i)])] = i;
    out.certificate = to_graph6(g_.relabeled(out.position));
    stats_.automorphisms = static_cast<std::int64_t>(generators_.size());
    out.stats = stats_;
    return out;
  }

private:
  int depth() const { return static_cast<int>(path_.size()); }

  /// Sign of trace_ against best_trace_ over the current prefix.
  int compare_to_best() const {
    const std::size_t len = trace_.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (trace_[i] < best_trace_[i]) return -1;
      if (best_trace_[i] < trace_[i]) return 1;
    }
    return 0;
  }

  int dfs(Partition& p) {
    if (++stats_.nodes > budget_)
      throw BudgetExceeded("canonical labeling exceeded the node budget of " + std::to_string(budget_));
    stats_.max_depth = std::max(stats_.max_depth, depth());
    if (have_first_ && compare_to_best() > 0) return kNoJump;
    if (p.discrete()) return leaf(p);

    int s = -1;
    int best_size = 1;
    for (int i = 0; i < p.order(); i = p.end[static_cast<std::size_t>(i)]) {
      const int size = p.end[static_cast<std::size_t>(i)] - i;
      if (size > best_size) {
        best_size = size;
        s = i;
      }
    }
    std::vector<int> children(p.lab.begin() + s, p.lab.begin() + p.end[static_cast<std::size_t>(s)]);
    std::sort(children.begin(), children.end());

    std::vector<int> explored;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::optional<Orbits> orbits;
    for (int v : children) {
      if (!explored.empty()) {
        if (gens_seen != generators_.size()) {
          orbits = stabilizer_orbits();
          gens_seen = generators_.size();
        }
        const int root = orbits->find(v);
        if (std::any_of(explored.begin(), explored.end(), [&](int e) { return orbits->find(e) == root; })) continue;
      }
      explored.push_back(v);

      Partition child = p;
      std::uint64_t h = 0;
      refiner_.individualize(child, v, h);
      path_.push_back(v);
      trace_.push_back({child.cells, h});
      const int jump = dfs(child);
      path_.pop_back();
      trace_.pop_back();
      if (jump != kNoJump && jump < depth()) return jump;
    }
    return kNoJump;
  }

  /// Orbits of the subgroup generated by the recorded automorphisms that fix
  /// every vertex on the current path.
  Orbits stabilizer_orbits() const {
    Orbits o(g_.order());
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(),
                                     [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < g_.order(); ++v) o.unite(v, gamma[static_cast<std::size_t>(v)]);
    }
    return o;
  }

  std::vector<std::uint64_t> leaf_code(const Partition& p) const {
    std::vector<std::uint64_t> code;
    code.reserve(static_cast<std::size_t>(g_.size()));
    for (int u = 0; u < g_.order(); ++u) {
      const auto pu = static_cast<std::uint64_t>(p.pos[static_cast<std::size_t>(u)]);
      for (int w : g_.neighbors(u)) {
        const auto pw = static_cast<std::uint64_t>(p.pos[static_cast<std::size_t>(w)]);
        if (pu < pw) code.push_back((pu << 32) | pw);
      }
    }
    std::sort(code.begin(), code.end());
    return code;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  /// Records gamma: current leaf -> target leaf and returns the level to jump
  /// back to: the node where the two paths diverge, provided gamma carries the
  /// current path onto the target path there; otherwise no jump.
  int record_automorphism(const Partition& p, const std::vector<int>& target_lab,
                          const std::vector<int>& target_path) {
    std::vector<int> gamma(static_cast<std::size_t>(g_.order()));
    for (int i = 0; i < g_.order(); ++i)
      gamma[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = target_lab[static_cast<std::size_t>(i)];
    const int level = common_prefix(path_, target_path);
    bool aligned = static_cast<std::size_t>(level) < path_.size() &&
                   static_cast<std::size_t>(level) < target_path.size();
    for (int j = 0; aligned && j <= level; ++j)
      aligned = gamma[static_cast<std::size_t>(path_[static_cast<std::size_t>(j)])] ==
                target_path[static_cast<std::size_t>(j)];
    generators_.push_back(std::move(gamma));
    return aligned ? level : kNoJump;
  }

  void take_best(const Partition& p, std::vector<std::uint64_t> code) {
    best_lab_ = p.lab;
    best_code_ = std::move(code);
    best_trace_ = trace_;
    best_path_ = path_;
  }

  int leaf(const Partition& p) {
    ++stats_.leaves;
    auto code = leaf_code(p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = p.lab;
      first_code_ = code;
      first_trace_ = trace_;
      first_path_ = path_;
      take_best(p, std::move(code));
      return kNoJump;
    }
    if (trace_ == first_trace_ && code == first_code_) {
      return record_automorphism(p, first_lab_, first_path_);
    }
    const int cmp = compare_to_best();
    if (cmp == 0) {
      if (code == best_code_) {
        return record_automorphism(p, best_lab_, best_path_);
      }
      if (code < best_code_) take_best(p, std::move(code));
      return kNoJump;
    }
    take_best(p, std::move(code));
    return kNoJump;
  }

  const Graph& g_;
  Refiner refiner_;
  std::int64_t budget_;
  SearchStats stats_;

  std::vector<int> path_;
  std::vector<TraceEntry> trace_;

  bool have_first_ = false;
  std::vector<int> first_lab_, first_path_;
  std::vector<std::uint64_t> first_code_;
  std::vector<TraceEntry> first_trace_;

  std::vector<int> best_lab_, best_path_;
  std::vector<std::uint64_t> best_code_;
  std::vector<TraceEntry> best_trace_;

  std::vector<std::vector<int>> generators_;
};

int max_distance(const Graph& g, int v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

Fingerprint fingerprint_common(const Graph& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.size = g.size();
  for (int v = 0; v < g.order(); ++v) fp.degrees.push_back(g.degree(v));
  std::sort(fp.degrees.begin(), fp.degrees.end());
  const std::vector<int> uniform(static_cast<std::size_t>(g.order()), 0);
  const auto colors = refine(g, uniform);
  if (!colors.empty()) {
    fp.class_sizes.assign(static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end()) + 1), 0);
    for (int c : colors) ++fp.class_sizes[static_cast<std::size_t>(c)];
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  }
  return fp;
}

/// Naive signature refinement: color -> (color, sorted neighbor colors),
/// renumbered by sorted signature, until the class count stops growing.
void naive_refine(const Graph& g, std::vector<int>& colors) {
  const int n = g.order();
  int classes = -1;
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.clear();
      for (int u : g.neighbors(v)) s.push_back(colors[static_cast<std::size_t>(u)]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), colors[static_cast<std::size_t>(v)]);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
    });
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
                       sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i) - 1])])
        ++c;
      colors[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = c;
    }
    if (c + 1 == classes) return;
    classes = c + 1;
  }
}

class Backtracker {
public:
  Backtracker(const Graph& g, const Graph& h, std::int64_t budget)
      : g_(g), h_(h), n_(g.order()), budget_(budget) {
    std::vector<std::pair<int, int>> es = g.edges();
    for (auto [a, b] : h.edges()) es.emplace_back(a + n_, b + n_);
    union_ = Graph(2 * n_, es);
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> colors(static_cast<std::size_t>(2 * n_), 0);
    naive_refine(union_, colors);
    return search(colors);
  }

private:
  std::optional<std::vector<int>> search(const std::vector<int>& colors) {
    if (++nodes_ > budget_) throw BudgetExceeded("backtracking isomorphism search exceeded its budget");
    const int num = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<int> left(static_cast<std::size_t>(num), 0), right(static_cast<std::size_t>(num), 0);
    for (int v = 0; v < n_; ++v) ++left[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    for (int v = n_; v < 2 * n_; ++v) ++right[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    if (left != right) return std::nullopt;

    int pick = -1;
    for (int c = 0; c < num; ++c)
      if (left[static_cast<std::size_t>(c)] > 1 &&
          (pick < 0 || left[static_cast<std::size_t>(c)] < left[static_cast<std::size_t>(pick)]))
        pick = c;
    if (pick < 0) {
      std::vector<int> owner(static_cast<std::size_t>(num), -1);
      for (int v = n_; v < 2 * n_; ++v) owner[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v - n_;
      std::vector<int> m(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) m[static_cast<std::size_t>(v)] = owner[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
      if (verify_mapping(g_, h_, m)) return m;
      return std::nullopt;
    }
    int x = -1;
    for (int v = 0; v < n_ && x < 0; ++v)
      if (colors[static_cast<std::size_t>(v)] == pick) x = v;
    for (int y = n_; y < 2 * n_; ++y) {
      if (colors[static_cast<std::size_t>(y)] != pick) continue;
      std::vector<int> next = colors;
      next[static_cast<std::size_t>(x)] = num;
      next[static_cast<std::size_t>(y)] = num;
      naive_refine(union_, next);
      if (auto m = search(next)) return m;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  Graph union_;
};

} // namespace

Fingerprint fingerprint_serial(const Graph& g) {
  Fingerprint fp = fingerprint_common(g);
  for (int v = 0; v < g.order(); ++v) fp.eccentricities.push_back(max_distance(g, v));
  std::sort(fp.eccentricities.begin(), fp.eccentricities.end());
  return fp;
}

Fingerprint fingerprint(const Graph& g) {
  Fingerprint fp = fingerprint_common(g);
  const int n = g.order();
  fp.eccentricities.assign(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (int v = 0; v < n; ++v) fp.eccentricities[static_cast<std::size_t>(v)] = max_distance(g, v);
  std::sort(fp.eccentricities.begin(), fp.eccentricities.end());
  return fp;
}

std::vector<int> refine(const Graph& g, std::span<const int> initial_colors) {
  if (static_cast<int>(initial_colors.size()) != g.order())
    throw std::invalid_argument("refine: coloring size does not match the graph order");
  if (g.order() == 0) return {};
  Refiner r(g);
  std::uint64_t trace = 0;
  return colors_of(r.initial(initial_colors, trace));
}

std::int64_t default_node_budget() {
  if (const char* env = std::getenv("FIBCUBE_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

CanonicalForm canonical_form(const Graph& g, std::int64_t node_budget) {
  if (g.order() > kMaxOrder)
    throw std::invalid_argument("canonical_form: graphs above 16384 vertices are rejected");
  return CanonSearch(g, node_budget).run();
}

std::string canonical_certificate(const Graph& g, std::int64_t node_budget) {
  return canonical_form(g, node_budget).certificate;
}

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h, std::int64_t node_budget) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;
  const auto cg = canonical_form(g, node_budget);
  const auto ch = canonical_form(h, node_budget);
  if (cg.certificate != ch.certificate) return std::nullopt;
  std::vector<int> at(static_cast<std::size_t>(h.order()));
  for (int v = 0; v < h.order(); ++v) at[static_cast<std::size_t>(ch.position[static_cast<std::size_t>(v)])] = v;
  std::vector<int> m(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) m[static_cast<std::size_t>(v)] = at[static_cast<std::size_t>(cg.position[static_cast<std::size_t>(v)])];
  if (!verify_mapping(g, h, m))
    throw std::logic_error("are_isomorphic: equal certificates produced an invalid mapping");
  return m;
}

bool verify_mapping(const Graph& g, const Graph& h, std::span<const int> m) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(m.size()) != n || g.size() != h.size()) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x : m) {
    if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = 1;
  }
  for (auto [u, v] : g.edges())
    if (!h.has_edge(m[static_cast<std::size_t>(u)], m[static_cast<std::size_t>(v)])) return false;
  return true;
}

std::optional<std::vector<int>> find_isomorphism_backtrack(const Graph& g, const Graph& h,
                                                           std::int64_t node_budget) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (g.order() == 0) return std::vector<int>{};
  return Backtracker(g, h, node_budget).run();
}

} // namespace fibcube
