#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "fibcube/cube.hpp"
#include "fibcube/word.hpp"

namespace fibcube {

/// Hypercube automorphism built from a coordinate permutation and a set of
/// complemented output coordinates: y_t = x_{phi^-1(t)}, flipped iff t is in
/// the mask. Positions are 1-indexed.
class CoordinateMap {
public:
  /// target[i-1] = phi(i); flip[t-1] marks complemented output positions.
  CoordinateMap(std::vector<int> target, std::vector<bool> flip);
  static CoordinateMap identity(int d);

  int dimension() const { return static_cast<int>(target_.size()); }
  int phi(int i) const { return target_[static_cast<std::size_t>(i - 1)]; }
  bool flips(int t) const { return flip_[static_cast<std::size_t>(t - 1)]; }

  Word apply(const Word& x) const;
  std::uint32_t apply_code(std::uint32_t x) const;

private:
  std::vector<int> target_;
  std::vector<bool> flip_;
  std::vector<int> source_;  // source_[t-1] = phi^-1(t)
};

/// u_1..u_k ~u_{2k} u_{k+1}..u_{2k-1} u_{2k+1}..u_d. Requires k >= 2 and
/// 2k <= d <= 3k-1; throws std::invalid_argument otherwise.
CoordinateMap alpha_map(int k, int d);

/// The block-structure isomorphism Q_d(f) -> Q_d(g) for |f| = |g| = d-1 and
/// nu(f) = nu(g). Change indices of f map to those of g in order, 1 and d are
/// fixed, remaining positions map in increasing order. Position t is
/// complemented iff c_{phi^-1(t)} != c'_t where c = f f_{|f|} and c' = g g_{|g|};
/// this also absorbs the complementation that normalizes f_1 = g_1 = 0.
CoordinateMap psi_map(const Word& f, const Word& g, int d);

/// Vertex map induced by m, or nullopt when some image leaves V(to).
std::optional<std::vector<int>> induced_vertex_map(const CoordinateMap& m, const AvoidanceGraph& from,
                                                   const AvoidanceGraph& to);

struct TheoremReport {
  bool pass = false;
  nlohmann::json evidence;
};

/// Q_d(0^k 1^k) and Q_d(0^{k+1} 1^{k-1}) via the explicit map (identity when
/// d < 2k, where both are the full cube) plus certificate equality.
TheoremReport verify_theorem_3k1(int k, int d);

/// All pairs of length-(d-1) words: equal nu => psi verifies; unequal nu =>
/// different certificates. 2 <= d <= 11.
TheoremReport verify_theorem_blocks(int d);

/// Every certificate class over forbidden lengths 1..d has one word length,
/// and the count chain holds for every k < d. d <= 11.
TheoremReport verify_theorem_length(int d);

} // namespace fibcube
