#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibcube/graph.hpp"

namespace fibcube {

/// Raised when a search exceeds its node budget. Never converted into a verdict.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Cheap relabeling-invariant summary; unequal fingerprints prove non-isomorphism.
struct Fingerprint {
  int order = 0;
  std::int64_t size = 0;
  std::vector<int> degrees;         // sorted
  std::vector<int> eccentricities;  // sorted; max finite BFS distance per vertex
  std::vector<int> class_sizes;     // sorted sizes of the stable refinement classes

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Eccentricities are computed with one BFS per vertex, OpenMP-parallel.
Fingerprint fingerprint(const Graph& g);
Fingerprint fingerprint_serial(const Graph& g);

/// Coarsest equitable refinement of the coloring. Returned colors are dense
/// (0..c-1) and numbered by cell position, which depends only on the initial
/// colors and the graph structure, never on vertex names.
std::vector<int> refine(const Graph& g, std::span<const int> initial_colors);

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
  std::int64_t automorphisms = 0;  // generators recorded
  int max_depth = 0;               // individualizations on the deepest path
};

struct CanonicalForm {
  /// graph6 text of the canonically relabeled graph.
  std::string certificate;
  /// position[v] = canonical index of vertex v.
  std::vector<int> position;
  SearchStats stats;
};

/// Node budget: FIBCUBE_BUDGET when set to a positive integer, else 10^7.
std::int64_t default_node_budget();

/// Individualization-refinement canonical labeling. Throws BudgetExceeded when
/// more than node_budget search nodes are visited. Rejects orders above 16384.
CanonicalForm canonical_form(const Graph& g, std::int64_t node_budget = default_node_budget());
std::string canonical_certificate(const Graph& g, std::int64_t node_budget = default_node_budget());

/// Witness mapping m with m[v] in H for every v in G, or nullopt. Rejects on a
/// fingerprint mismatch before canonicalizing.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h,
                                               std::int64_t node_budget = default_node_budget());

/// True iff m is a bijection V(G) -> V(H) preserving adjacency and non-adjacency.
bool verify_mapping(const Graph& g, const Graph& h, std::span<const int> m);

/// Independent oracle: backtracking over bijections compatible with naive
/// color refinement of the disjoint union. Slow; used to double-check verdicts.
std::optional<std::vector<int>> find_isomorphism_backtrack(const Graph& g, const Graph& h,
                                                           std::int64_t node_budget = 1'000'000);

} // namespace fibcube
