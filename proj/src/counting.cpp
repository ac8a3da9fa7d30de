#include "fibcube/counting.hpp"

#include <stdexcept>
#include <string>

namespace fibcube {

FactorAutomaton::FactorAutomaton(const Word& f) {
  const int k = f.length();
  // KMP failure function, 1-indexed: fail[q] = longest proper border of f_1..f_q.
  std::vector<int> fail(static_cast<std::size_t>(k) + 1, 0);
  for (int q = 2, b = 0; q <= k; ++q) {
    while (b > 0 && f.bit(b + 1) != f.bit(q)) b = fail[static_cast<std::size_t>(b)];
    if (f.bit(b + 1) == f.bit(q)) ++b;
    fail[static_cast<std::size_t>(q)] = b;
  }

  delta_.assign(static_cast<std::size_t>(k) + 1, {0, 0});
  for (int s = 0; s < k; ++s) {
    for (int c = 0; c < 2; ++c) {
      if (f.bit(s + 1) == c) {
        delta_[static_cast<std::size_t>(s)][c] = s + 1;
      } else {
        delta_[static_cast<std::size_t>(s)][c] =
            s == 0 ? 0 : delta_[static_cast<std::size_t>(fail[static_cast<std::size_t>(s)])][c];
      }
    }
  }
  delta_[static_cast<std::size_t>(k)] = {k, k};
}

bool FactorAutomaton::accepts(const Word& w) const {
  int s = 0;
  for (int i = 1; i <= w.length(); ++i) s = next(s, w.bit(i));
  return s == absorbing();
}

FactorAutomaton build_automaton(const Word& f) { return FactorAutomaton(f); }

std::uint64_t count_avoiders(int d, const Word& f) {
  if (d < 0 || d > 62)
    throw std::invalid_argument("count_avoiders: d must be in [0, 62], got " +
                                std::to_string(d));
  const FactorAutomaton a(f);
  const int live = a.absorbing();
  std::vector<std::uint64_t> cur(static_cast<std::size_t>(live), 0), nxt(cur.size());
  cur[0] = 1;
  for (int step = 0; step < d; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int s = 0; s < live; ++s) {
      const std::uint64_t ways = cur[static_cast<std::size_t>(s)];
      if (ways == 0) continue;
      for (int c = 0; c < 2; ++c) {
        const int t = a.next(s, c);
        if (t == live) continue;
        auto& slot = nxt[static_cast<std::size_t>(t)];
        if (__builtin_add_overflow(slot, ways, &slot))
          throw std::overflow_error("count_avoiders overflowed 64 bits");
      }
    }
    cur.swap(nxt);
  }
  std::uint64_t total = 0;
  for (std::uint64_t v : cur)
    if (__builtin_add_overflow(total, v, &total))
      throw std::overflow_error("count_avoiders overflowed 64 bits");
  return total;
}

namespace {

void check_brute_range(int d) {
  if (d < 0 || d > 24)
    throw std::invalid_argument("brute_count: d must be in [0, 24], got " +
                                std::to_string(d));
}

} // namespace

std::uint64_t brute_count_serial(int d, const Word& f) {
  check_brute_range(d);
  if (d == 0) return 1;
  std::uint64_t n = 0;
  const std::uint32_t limit = 1u << d;
  for (std::uint32_t c = 0; c < limit; ++c)
    if (!contains_factor(Word(c, d), f)) ++n;
  return n;
}

std::uint64_t brute_count(int d, const Word& f) {
  check_brute_range(d);
  if (d == 0) return 1;
  const std::int64_t limit = std::int64_t{1} << d;
  std::uint64_t n = 0;
#pragma omp parallel for reduction(+ : n) schedule(static)
  for (std::int64_t c = 0; c < limit; ++c)
    if (!contains_factor(Word(static_cast<std::uint32_t>(c), d), f)) ++n;
  return n;
}

bool verify_count_chain(int d, int k) {
  if (k < 1 || k > d) throw std::invalid_argument("verify_count_chain: need 1 <= k <= d");
  const Word prime = k == 1 ? Word::ones(1) : Word::zeros(k - 1).append(1);
  const std::uint64_t low = count_avoiders(d, prime);
  const std::uint64_t high = count_avoiders(d, Word::zeros(k));
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t c = 0; c < limit; ++c) {
    const std::uint64_t n = count_avoiders(d, Word(static_cast<std::uint32_t>(c), k));
    if (n < low || n > high) return false;
  }
  if (k + 1 <= d && !(high < count_avoiders(d, Word::zeros(k).append(1)))) return false;
  return true;
}

} // namespace fibcube
