#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fibcube/iso.hpp"
#include "fibcube/word.hpp"

namespace fibcube {

struct HarnessOptions {
  std::int64_t node_budget = default_node_budget();
  /// Per-dimension wall clock; items not started before it expires are skipped
  /// and the table is marked incomplete.
  double wall_seconds = 1800.0;
  /// Append-only JSON lines {d, k, f, certificate}; entries already present
  /// for the same d are reused instead of recomputed.
  std::optional<std::filesystem::path> results_path;
  /// Throw std::logic_error when a class mixes word lengths.
  bool enforce_equal_lengths = true;
};

/// Certificate -> orbit representatives producing it, each list ascending.
struct IsoClassTable {
  int d = 0;
  int k_min = 0;
  int k_max = 0;
  std::map<std::string, std::vector<Word>> classes;
  bool complete = true;
  std::int64_t words_classified = 0;
  std::int64_t words_reused = 0;
  double seconds = 0.0;
};

/// Buckets Q_d(f) for every representative f with k_min <= |f| <= k_max by
/// canonical certificate. Work items run on an OpenMP pool; the merge is
/// sequential in item order. 2 <= d <= 11 (the range may be empty).
IsoClassTable isom_classes(int d, int k_min, int k_max, const HarnessOptions& opts = {});
/// Single-threaded reference implementation of isom_classes.
IsoClassTable isom_classes_serial(int d, int k_min, int k_max, const HarnessOptions& opts = {});
/// Default range [3, d-1].
IsoClassTable isom_classes(int d, const HarnessOptions& opts = {});

/// All unordered pairs inside multi-member classes, ascending.
std::vector<std::pair<Word, Word>> nontrivial_pairs(const IsoClassTable& t);

enum class ConjectureId { DimMinus1 = 1, TwoThirds = 2, Blocks = 3 };

const char* conjecture_name(ConjectureId id);

struct Counterexample {
  Word f;
  Word g;
  int d;
};

struct ConjectureReport {
  ConjectureId id = ConjectureId::DimMinus1;
  int d = 0;
  bool verdict = true;
  bool complete = true;
  std::int64_t classes = 0;
  std::int64_t pairs = 0;
  std::optional<Counterexample> counterexample;
  double seconds = 0.0;
};

nlohmann::json to_json(const ConjectureReport& r);

/// Isomorphism at d of every non-trivial pair at d implies isomorphism at d-1.
ConjectureReport check_conjecture_dim_minus_1(const IsoClassTable& t, const HarnessOptions& opts = {});
ConjectureReport check_conjecture_dim_minus_1(int d, const HarnessOptions& opts = {});
/// Multi-member classes satisfy 3|f| >= 2(d+1).
ConjectureReport check_conjecture_two_thirds(const IsoClassTable& t, const HarnessOptions& opts = {});
ConjectureReport check_conjecture_two_thirds(int d, const HarnessOptions& opts = {});
/// nu is constant on every class.
ConjectureReport check_conjecture_blocks(const IsoClassTable& t, const HarnessOptions& opts = {});
ConjectureReport check_conjecture_blocks(int d, const HarnessOptions& opts = {});

} // namespace fibcube
