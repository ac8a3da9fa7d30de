// One PASS/FAIL line per acceptance criterion.
// usage: acceptance <fibcube-cli> <test_properties>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "fibcube/counting.hpp"
#include "fibcube/cube.hpp"
#include "fibcube/harness.hpp"
#include "fibcube/iso.hpp"
#include "fibcube/theorems.hpp"

using namespace fibcube;

namespace {

std::string cli_path;
std::string properties_path;

int exit_status(const std::string& cmd) {
  const int s = std::system(cmd.c_str());
  return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

bool counts_match_enumeration() {
  for (int k = 1; k <= 6; ++k)
    for (std::uint32_t c = 0; c < (1u << k); ++c)
      for (int d = 0; d <= 14; ++d)
        if (count_avoiders(d, Word(c, k)) != brute_count(d, Word(c, k))) return false;
  return true;
}

bool fibonacci() {
  const Word f = Word::parse("11");
  if (count_avoiders(1, f) != 2 || count_avoiders(2, f) != 3) return false;
  for (int d = 3; d <= 20; ++d)
    if (count_avoiders(d, f) != count_avoiders(d - 1, f) + count_avoiders(d - 2, f)) return false;
  if (count_avoiders(20, f) != 17711) return false;
  for (int d : {1, 5, 10, 16, 20, 22, 24})
    if (count_avoiders(d, f) != brute_count(d, f)) return false;
  return true;
}

bool count_chain() {
  for (int d = 1; d <= 12; ++d)
    for (int k = 1; k <= d; ++k)
      if (!verify_count_chain(d, k)) return false;
  return true;
}

bool theorem_3k1() {
  for (int k = 2; k <= 4; ++k) {
    for (int d = 1; d <= std::min(3 * k - 1, 11); ++d)
      if (!verify_theorem_3k1(k, d).pass) return false;
    const std::size_t expected = static_cast<std::size_t>(k) << (k - 1);
    if (excluded_sets(3 * k - 1, Word::zeros(k) + Word::ones(k)).removed.size() != expected) return false;
    if (excluded_sets(3 * k - 1, Word::zeros(k + 1) + Word::ones(k - 1)).removed.size() != expected) return false;
  }
  return true;
}

bool theorem_blocks() {
  for (int d = 2; d <= 9; ++d)
    if (!verify_theorem_blocks(d).pass) return false;
  return true;
}

bool negative_instance() {
  return exit_status("'" + cli_path + "' iso --d 6 --f 0110 --g 0100 > /dev/null") == 1;
}

bool conjectures() {
  // classes and non-trivial pairs for d = 4..10, from the nauty reference
  const std::size_t expected[][2] = {{3, 0}, {7, 2}, {14, 8}, {25, 36}, {42, 127}, {70, 504}, {116, 1789}};
  for (int d = 3; d <= 10; ++d) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto t = isom_classes(d);
    const auto a = check_conjecture_dim_minus_1(t);
    const auto b = check_conjecture_two_thirds(t);
    const auto c = check_conjecture_blocks(t);
    std::printf("  d=%-2d classes=%-4zu pairs=%-5lld %.2fs\n", d, t.classes.size(),
                static_cast<long long>(a.pairs),
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    if (!t.complete || !a.verdict || !b.verdict || !c.verdict) return false;
    if (d >= 4 && (t.classes.size() != expected[d - 4][0] ||
                   static_cast<std::size_t>(a.pairs) != expected[d - 4][1]))
      return false;
  }
  return true;
}

bool properties() { return exit_status("'" + properties_path + "' > /dev/null") == 0; }

bool edge_formulas() {
  for (int d = 2; d <= 10; ++d)
    for (std::uint32_t c = 0; c < (1u << (d - 1)); ++c) {
      const Word f(c, d - 1);
      if (nu(f) == 0) continue;
      const std::int64_t full = static_cast<std::int64_t>(d) << (d - 1);
      const std::int64_t expected = full - (nu(f) == 1 ? 4 * d - 3 : 4 * d - 2);
      if (edge_count(build_graph(d, f)) != expected) return false;
    }
  return true;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <fibcube-cli> <test_properties>\n", argv[0]);
    return 2;
  }
  cli_path = argv[1];
  properties_path = argv[2];

  const std::pair<const char*, std::function<bool()>> criteria[] = {
      {"count automaton equals enumeration, |f| <= 6, d <= 14", counts_match_enumeration},
      {"Fibonacci recurrence for 11 up to d = 20", fibonacci},
      {"count chain for all k <= d <= 12", count_chain},
      {"0^k1^k vs 0^{k+1}1^{k-1} isomorphic for k = 2..4", theorem_3k1},
      {"length d-1 words: isomorphic iff equal nu, d = 2..9", theorem_blocks},
      {"iso exits 1 on Q_6(0110) vs Q_6(0100)", negative_instance},
      {"all three conjectures hold for d <= 10", conjectures},
      {"property suites", properties},
      {"edge-count formulas for d <= 10", edge_formulas},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", n, name, secs, error.empty() ? "" : ": ",
                error.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
