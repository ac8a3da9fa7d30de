#include "doctest.h"

#include <random>
#include <stdexcept>

#include "fibcube/counting.hpp"
#include "fibcube/word.hpp"

using namespace fibcube;

TEST_CASE("automaton acceptance matches the naive scan") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 16);
    const Word f(static_cast<std::uint32_t>(rng() % (1u << k)), k);
    const Word x(static_cast<std::uint32_t>(rng() % (1u << n)), n);
    CHECK(build_automaton(f).accepts(x) == contains_factor(x, f));
  }
  const auto a = build_automaton(Word::parse("0110"));
  CHECK(a.state_count() == 5);
  CHECK(a.next(a.absorbing(), 0) == a.absorbing());
  CHECK(a.next(a.absorbing(), 1) == a.absorbing());
}

TEST_CASE("known counts") {
  const Word f11 = Word::parse("11");
  CHECK(count_avoiders(0, f11) == 1);
  CHECK(count_avoiders(3, f11) == 5);
  CHECK(count_avoiders(20, f11) == 17711);
  CHECK(count_avoiders(4, Word::parse("0110")) == 15);
  // brute-force enumeration in the Python reference
  CHECK(count_avoiders(10, Word::parse("0110")) == 631);
  CHECK(count_avoiders(12, Word::parse("00111")) == 3096);
  CHECK(count_avoiders(16, Word::parse("010")) == 10252);
  CHECK(count_avoiders(62, Word::parse("1")) == 1);
  CHECK_THROWS_AS(count_avoiders(63, f11), std::invalid_argument);
  CHECK_THROWS_AS(brute_count(25, f11), std::invalid_argument);
}

TEST_CASE("automaton count equals enumeration") {
  for (int k = 1; k <= 5; ++k)
    for (const Word& f : representatives(k))
      for (int d = 0; d <= 16; ++d) CHECK(count_avoiders(d, f) == brute_count_serial(d, f));
}

TEST_CASE("parallel and serial enumeration agree") {
  for (const char* s : {"0110", "00111", "1"})
    for (int d : {0, 5, 18, 22}) CHECK(brute_count(d, Word::parse(s)) == brute_count_serial(d, Word::parse(s)));
}

TEST_CASE("count chain") {
  CHECK(verify_count_chain(6, 3));
  CHECK(verify_count_chain(12, 5));
  CHECK(verify_count_chain(4, 4));
  CHECK_THROWS_AS(verify_count_chain(3, 4), std::invalid_argument);
}
