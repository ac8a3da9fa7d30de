#include "fibcube/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fibcube/cube.hpp"

namespace fibcube {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_table_args(int d, int k_min, int k_max) {
  if (d < 2 || d > 11) throw std::invalid_argument("isom_classes: d must be in [2, 11]");
  if (k_min < 1 || k_max > d)
    throw std::invalid_argument("isom_classes: need 1 <= k_min and k_max <= d");
}

std::vector<Word> work_items(int k_min, int k_max) {
  std::vector<Word> items;
  for (int k = k_min; k <= k_max; ++k) {
    auto reps = representatives(k);
    items.insert(items.end(), reps.begin(), reps.end());
  }
  return items;
}

std::string certificate_of(int d, const Word& f, std::int64_t budget) {
  return canonical_certificate(build_graph(d, f).graph(), budget);
}

void enforce_lengths(const IsoClassTable& t) {
  for (const auto& [cert, members] : t.classes)
    for (const Word& w : members)
      if (w.length() != members.front().length())
        throw std::logic_error("isomorphism class mixes forbidden lengths: " + members.front().str() + " and " +
                               w.str() + " at d=" + std::to_string(t.d));
}

std::unordered_map<std::string, std::string> load_results(const std::filesystem::path& path, int d) {
  std::unordered_map<std::string, std::string> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;  // tolerate a torn final line
    if (j.value("d", -1) != d) continue;
    out[j.at("f").get<std::string>()] = j.at("certificate").get<std::string>();
  }
  return out;
}

} // namespace

IsoClassTable isom_classes(int d, int k_min, int k_max, const HarnessOptions& opts) {
  check_table_args(d, k_min, k_max);
  const auto t0 = Clock::now();
  IsoClassTable t;
  t.d = d;
  t.k_min = k_min;
  t.k_max = k_max;
  const auto items = work_items(k_min, k_max);
  const int n = static_cast<int>(items.size());

  std::vector<std::optional<std::string>> certs(items.size());
  std::vector<char> fresh(items.size(), 0);
  if (opts.results_path) {
    const auto known = load_results(*opts.results_path, d);
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto it = known.find(items[i].str());
      if (it != known.end()) certs[i] = it->second;
    }
  }

  std::exception_ptr failure;
  bool expired = false;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (certs[idx]) continue;
    bool stop = false;
#pragma omp critical(harness_state)
    {
      if (failure || seconds_since(t0) > opts.wall_seconds) {
        if (!failure) expired = true;
        stop = true;
      }
    }
    if (stop) continue;
    try {
      certs[idx] = certificate_of(d, items[idx], opts.node_budget);
      fresh[idx] = 1;
    } catch (...) {
#pragma omp critical(harness_state)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::ofstream out;
  if (opts.results_path) out.open(*opts.results_path, std::ios::app);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!certs[i]) continue;
    t.classes[*certs[i]].push_back(items[i]);
    if (fresh[i]) {
      ++t.words_classified;
      if (out) {
        const nlohmann::json line = {
            {"d", d}, {"k", items[i].length()}, {"f", items[i].str()}, {"certificate", *certs[i]}};
        out << line.dump() << '\n';
      }
    } else {
      ++t.words_reused;
    }
  }
  t.complete = !expired;
  for (auto& [cert, members] : t.classes) std::sort(members.begin(), members.end());
  if (opts.enforce_equal_lengths) enforce_lengths(t);
  t.seconds = seconds_since(t0);
  return t;
}

IsoClassTable isom_classes_serial(int d, int k_min, int k_max, const HarnessOptions& opts) {
  check_table_args(d, k_min, k_max);
  const auto t0 = Clock::now();
  IsoClassTable t;
  t.d = d;
  t.k_min = k_min;
  t.k_max = k_max;
  for (const Word& f : work_items(k_min, k_max)) {
    t.classes[certificate_of(d, f, opts.node_budget)].push_back(f);
    ++t.words_classified;
  }
  for (auto& [cert, members] : t.classes) std::sort(members.begin(), members.end());
  if (opts.enforce_equal_lengths) enforce_lengths(t);
  t.seconds = seconds_since(t0);
  return t;
}

IsoClassTable isom_classes(int d, const HarnessOptions& opts) {
  if (d < 2 || d > 11) throw std::invalid_argument("isom_classes: d must be in [2, 11]");
  if (d - 1 < 3) {
    IsoClassTable t;
    t.d = d;
    t.k_min = 3;
    t.k_max = d - 1;
    return t;
  }
  return isom_classes(d, 3, d - 1, opts);
}

std::vector<std::pair<Word, Word>> nontrivial_pairs(const IsoClassTable& t) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& [cert, members] : t.classes)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) out.emplace_back(members[i], members[j]);
  std::sort(out.begin(), out.end());
  return out;
}

const char* conjecture_name(ConjectureId id) {
  switch (id) {
    case ConjectureId::DimMinus1: return "dim_minus_1";
    case ConjectureId::TwoThirds: return "two_thirds";
    case ConjectureId::Blocks: return "blocks";
  }
  return "unknown";
}

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json j = {{"conjecture", conjecture_name(r.id)},
                      {"id", static_cast<int>(r.id)},
                      {"d", r.d},
                      {"verdict", r.verdict},
                      {"complete", r.complete},
                      {"classes", r.classes},
                      {"pairs", r.pairs},
                      {"seconds", r.seconds}};
  if (r.counterexample)
    j["counterexample"] = {{"f", r.counterexample->f.str()},
                           {"g", r.counterexample->g.str()},
                           {"d", r.counterexample->d}};
  else
    j["counterexample"] = nullptr;
  return j;
}

namespace {

void check_conjecture_d(int d) {
  if (d < 3 || d > 11) throw std::invalid_argument("conjecture checks need 3 <= d <= 11");
}

ConjectureReport start_report(ConjectureId id, const IsoClassTable& t) {
  ConjectureReport r;
  r.id = id;
  r.d = t.d;
  r.complete = t.complete;
  r.classes = static_cast<std::int64_t>(t.classes.size());
  return r;
}

bool slow_isomorphic(int d, const Word& f, const Word& g) {
  const auto a = build_graph(d, f);
  const auto b = build_graph(d, g);
  const auto m = find_isomorphism_backtrack(a.graph(), b.graph());
  return m && verify_mapping(a.graph(), b.graph(), *m);
}

/// A class pair is about to be reported as a counterexample: confirm with the
/// backtracking oracle that the pair really is isomorphic at t.d.
void confirm_class_pair(const IsoClassTable& t, const Word& f, const Word& g) {
  if (!slow_isomorphic(t.d, f, g))
    throw std::logic_error("canonical certificates put " + f.str() + " and " + g.str() +
                           " in one class but the backtracking oracle disagrees");
}

} // namespace

ConjectureReport check_conjecture_dim_minus_1(const IsoClassTable& t, const HarnessOptions& opts) {
  const auto t0 = Clock::now();
  auto r = start_report(ConjectureId::DimMinus1, t);
  const auto pairs = nontrivial_pairs(t);
  r.pairs = static_cast<std::int64_t>(pairs.size());
  std::map<Word, std::string> lower;
  auto cert = [&](const Word& w) -> const std::string& {
    auto it = lower.find(w);
    if (it == lower.end()) it = lower.emplace(w, certificate_of(t.d - 1, w, opts.node_budget)).first;
    return it->second;
  };
  for (const auto& [f, g] : pairs) {
    if (cert(f) == cert(g)) continue;
    confirm_class_pair(t, f, g);
    if (slow_isomorphic(t.d - 1, f, g))
      throw std::logic_error("certificates differ at d-1 for " + f.str() + ", " + g.str() +
                             " but the backtracking oracle finds an isomorphism");
    r.verdict = false;
    r.counterexample = Counterexample{f, g, t.d - 1};
    break;
  }
  r.seconds = t.seconds + seconds_since(t0);
  return r;
}

ConjectureReport check_conjecture_two_thirds(const IsoClassTable& t, const HarnessOptions&) {
  const auto t0 = Clock::now();
  auto r = start_report(ConjectureId::TwoThirds, t);
  r.pairs = static_cast<std::int64_t>(nontrivial_pairs(t).size());
  for (const auto& [cert, members] : t.classes) {
    if (members.size() < 2) continue;
    if (3 * members.front().length() >= 2 * (t.d + 1)) continue;
    confirm_class_pair(t, members[0], members[1]);
    r.verdict = false;
    r.counterexample = Counterexample{members[0], members[1], t.d};
    break;
  }
  r.seconds = t.seconds + seconds_since(t0);
  return r;
}

ConjectureReport check_conjecture_blocks(const IsoClassTable& t, const HarnessOptions&) {
  const auto t0 = Clock::now();
  auto r = start_report(ConjectureId::Blocks, t);
  r.pairs = static_cast<std::int64_t>(nontrivial_pairs(t).size());
  for (const auto& [cert, members] : t.classes) {
    auto odd = std::find_if(members.begin(), members.end(),
                            [&](const Word& w) { return nu(w) != nu(members.front()); });
    if (odd == members.end()) continue;
    confirm_class_pair(t, members.front(), *odd);
    r.verdict = false;
    r.counterexample = Counterexample{members.front(), *odd, t.d};
    break;
  }
  r.seconds = t.seconds + seconds_since(t0);
  return r;
}

ConjectureReport check_conjecture_dim_minus_1(int d, const HarnessOptions& opts) {
  check_conjecture_d(d);
  return check_conjecture_dim_minus_1(isom_classes(d, opts), opts);
}

ConjectureReport check_conjecture_two_thirds(int d, const HarnessOptions& opts) {
  check_conjecture_d(d);
  return check_conjecture_two_thirds(isom_classes(d, opts), opts);
}

ConjectureReport check_conjecture_blocks(int d, const HarnessOptions& opts) {
  check_conjecture_d(d);
  return check_conjecture_blocks(isom_classes(d, opts), opts);
}

} // namespace fibcube
