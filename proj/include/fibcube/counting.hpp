#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fibcube/word.hpp"

namespace fibcube {

/// Failure-function automaton over {0,1} that detects the factor f.
/// States 0..k-1 are the length of the longest suffix of the text read so far
/// that is a proper prefix of f; state k is absorbing ("f seen").
class FactorAutomaton {
public:
  explicit FactorAutomaton(const Word& f);

  int state_count() const { return static_cast<int>(delta_.size()); }
  int absorbing() const { return state_count() - 1; }
  int next(int state, int bit) const { return delta_[static_cast<std::size_t>(state)][bit]; }

  /// Runs the automaton over w from state 0.
  bool accepts(const Word& w) const;

private:
  std::vector<std::array<int, 2>> delta_;
};

FactorAutomaton build_automaton(const Word& f);

/// n_d(f): length-d binary strings with no occurrence of f, by DP over the
/// automaton. d in [0, 62]; throws std::invalid_argument outside.
std::uint64_t count_avoiders(int d, const Word& f);

/// Same contract by enumeration of all 2^d strings; d in [0, 24].
/// OpenMP-parallel over the string space.
std::uint64_t brute_count(int d, const Word& f);
/// Single-threaded reference for brute_count.
std::uint64_t brute_count_serial(int d, const Word& f);

/// For every f of length k: n_d(0^{k-1}1) <= n_d(f) <= n_d(0^k), and
/// n_d(0^k) < n_d(0^k 1) when k + 1 <= d. Requires 1 <= k <= d.
bool verify_count_chain(int d, int k);

} // namespace fibcube
