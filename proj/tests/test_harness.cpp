#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "fibcube/harness.hpp"

using namespace fibcube;

namespace {

Word w(const char* s) { return Word::parse(s); }

std::vector<std::vector<std::string>> multi_classes(const IsoClassTable& t) {
  std::vector<std::vector<std::string>> out;
  for (const auto& [cert, members] : t.classes) {
    if (members.size() < 2) continue;
    std::vector<std::string> v;
    for (const Word& x : members) v.push_back(x.str());
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path temp_file(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

} // namespace

TEST_CASE("class tables match the nauty reference") {
  // d -> (classes, non-trivial pairs) over 3 <= |f| <= d-1
  const int expected[][3] = {{4, 3, 0}, {5, 7, 2}, {6, 14, 8}, {7, 25, 36}, {8, 42, 127}, {9, 70, 504}};
  for (const auto& row : expected) {
    const auto t = isom_classes(row[0]);
    INFO("d=" << row[0]);
    CHECK(t.complete);
    CHECK(t.classes.size() == static_cast<std::size_t>(row[1]));
    CHECK(nontrivial_pairs(t).size() == static_cast<std::size_t>(row[2]));
  }
  CHECK(multi_classes(isom_classes(5)) ==
        std::vector<std::vector<std::string>>{{"0001", "0011"}, {"0010", "0110"}});
  CHECK(multi_classes(isom_classes(6)) == std::vector<std::vector<std::string>>{
                                               {"00001", "00011"}, {"00010", "00100", "00110", "01110"}, {"00101", "01001"}});
  HarnessOptions loose;
  loose.enforce_equal_lengths = false;
  CHECK(isom_classes(6, 1, 6, loose).classes.size() == 18);
}

TEST_CASE("negative instance lands in different classes") {
  const auto t = isom_classes(6);
  for (const auto& [cert, members] : t.classes) {
    const bool has_a = std::find(members.begin(), members.end(), w("0110")) != members.end();
    // 0010 represents the orbit of 0100
    const bool has_b = std::find(members.begin(), members.end(), w("0010")) != members.end();
    CHECK_FALSE((has_a && has_b));
  }
  const auto pairs = nontrivial_pairs(isom_classes(5));
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair{w("0001"), w("0011")}) != pairs.end());
}

TEST_CASE("serial and parallel tables agree") {
  for (int d = 4; d <= 8; ++d) {
    const auto a = isom_classes(d, 3, d - 1);
    const auto b = isom_classes_serial(d, 3, d - 1);
    CHECK(a.classes == b.classes);
  }
}

TEST_CASE("degenerate ranges") {
  CHECK(isom_classes(3).classes.empty());
  CHECK(isom_classes(2).classes.empty());
  CHECK_THROWS_AS(isom_classes(12), std::invalid_argument);
  CHECK_THROWS_AS(isom_classes(5, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(isom_classes(5, 3, 6), std::invalid_argument);
}

TEST_CASE("results file is reused and tolerates a torn line") {
  const auto path = temp_file("fibcube_results_test.jsonl");
  HarnessOptions opts;
  opts.results_path = path;
  const auto first = isom_classes(7, opts);
  CHECK(first.words_reused == 0);
  CHECK(first.words_classified > 0);
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"d\": 7, \"k\": 3, \"f\": \"0";
  }
  const auto second = isom_classes(7, opts);
  CHECK(second.words_classified == 0);
  CHECK(second.words_reused == first.words_classified);
  CHECK(second.classes == first.classes);
  const auto other_d = isom_classes(6, opts);
  CHECK(other_d.words_reused == 0);
  std::filesystem::remove(path);
}

TEST_CASE("wall clock expiry marks the table incomplete") {
  HarnessOptions opts;
  opts.wall_seconds = 0.0;
  const auto t = isom_classes(8, opts);
  CHECK_FALSE(t.complete);
  const auto r = check_conjecture_blocks(t);
  CHECK_FALSE(r.complete);
}

TEST_CASE("budget exhaustion propagates") {
  HarnessOptions opts;
  opts.node_budget = 1;
  CHECK_THROWS_AS(isom_classes(7, opts), BudgetExceeded);
}

TEST_CASE("conjectures hold at small d") {
  for (int d = 3; d <= 8; ++d) {
    CHECK(check_conjecture_dim_minus_1(d).verdict);
    CHECK(check_conjecture_two_thirds(d).verdict);
    CHECK(check_conjecture_blocks(d).verdict);
  }
  CHECK_THROWS_AS(check_conjecture_blocks(2), std::invalid_argument);
}

TEST_CASE("checkers catch planted counterexamples") {
  IsoClassTable t;
  t.d = 6;
  t.classes["x"] = {w("0001"), w("1110")};
  const auto two = check_conjecture_two_thirds(t);
  CHECK_FALSE(two.verdict);
  REQUIRE(two.counterexample.has_value());
  CHECK(two.counterexample->f == w("0001"));

  IsoClassTable b;
  b.d = 5;
  b.classes["y"] = {w("0010"), w("0110")};
  CHECK(check_conjecture_blocks(b).verdict);

  IsoClassTable bad;
  bad.d = 6;
  bad.classes["z"] = {w("0001"), w("0110")};
  CHECK_THROWS_AS(check_conjecture_blocks(bad), std::logic_error);
}

TEST_CASE("report serialization") {
  ConjectureReport r;
  r.id = ConjectureId::TwoThirds;
  r.d = 9;
  r.counterexample = Counterexample{w("0001"), w("0011"), 9};
  r.verdict = false;
  const auto j = to_json(r);
  CHECK(j["conjecture"] == "two_thirds");
  CHECK(j["id"] == 2);
  CHECK(j["verdict"] == false);
  CHECK(j["counterexample"]["f"] == "0001");
  r.counterexample.reset();
  CHECK(to_json(r)["counterexample"].is_null());
}
