#include "fibcube/theorems.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fibcube/counting.hpp"
#include "fibcube/harness.hpp"
#include "fibcube/iso.hpp"

namespace fibcube {

CoordinateMap::CoordinateMap(std::vector<int> target, std::vector<bool> flip)
    : target_(std::move(target)), flip_(std::move(flip)) {
  const int d = dimension();
  if (static_cast<int>(flip_.size()) != d) throw std::invalid_argument("CoordinateMap: mask size mismatch");
  source_.assign(static_cast<std::size_t>(d), 0);
  for (int i = 1; i <= d; ++i) {
    const int t = phi(i);
    if (t < 1 || t > d || source_[static_cast<std::size_t>(t - 1)] != 0)
      throw std::invalid_argument("CoordinateMap: not a permutation of 1..d");
    source_[static_cast<std::size_t>(t - 1)] = i;
  }
}

CoordinateMap CoordinateMap::identity(int d) {
  std::vector<int> t(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) t[static_cast<std::size_t>(i)] = i + 1;
  return CoordinateMap(std::move(t), std::vector<bool>(static_cast<std::size_t>(d), false));
}

std::uint32_t CoordinateMap::apply_code(std::uint32_t x) const {
  const int d = dimension();
  std::uint32_t y = 0;
  for (int t = 1; t <= d; ++t) {
    const int s = source_[static_cast<std::size_t>(t - 1)];
    std::uint32_t bit = (x >> (d - s)) & 1u;
    if (flip_[static_cast<std::size_t>(t - 1)]) bit ^= 1u;
    y |= bit << (d - t);
  }
  return y;
}

Word CoordinateMap::apply(const Word& x) const {
  if (x.length() != dimension()) throw std::invalid_argument("CoordinateMap: word length mismatch");
  return Word(apply_code(x.code()), dimension());
}

CoordinateMap alpha_map(int k, int d) {
  if (k < 2 || d < 2 * k || d > 3 * k - 1)
    throw std::invalid_argument("alpha_map: need k >= 2 and 2k <= d <= 3k-1 (k=" + std::to_string(k) +
                                ", d=" + std::to_string(d) + ")");
  std::vector<int> target(static_cast<std::size_t>(d));
  std::vector<bool> flip(static_cast<std::size_t>(d), false);
  for (int i = 1; i <= d; ++i) {
    int t = i;
    if (i == 2 * k) t = k + 1;
    else if (i >= k + 1 && i <= 2 * k - 1) t = i + 1;
    target[static_cast<std::size_t>(i - 1)] = t;
  }
  flip[static_cast<std::size_t>(k)] = true;  // landing position k+1 of u_{2k}
  return CoordinateMap(std::move(target), std::move(flip));
}

CoordinateMap psi_map(const Word& f, const Word& g, int d) {
  if (d < 2 || f.length() != d - 1 || g.length() != d - 1)
    throw std::invalid_argument("psi_map: need |f| = |g| = d-1 and d >= 2");
  const auto from = bit_change_indices(f);
  const auto to = bit_change_indices(g);
  if (from.size() != to.size()) throw std::invalid_argument("psi_map: nu(f) != nu(g)");

  std::vector<int> target(static_cast<std::size_t>(d), 0);
  target[0] = 1;
  target[static_cast<std::size_t>(d - 1)] = d;
  for (std::size_t j = 0; j < from.size(); ++j) target[static_cast<std::size_t>(from[j] - 1)] = to[j];
  // remaining middle positions, order-preserving
  std::vector<int> rest_from, rest_to;
  for (int t = 2; t <= d - 1; ++t) {
    if (!std::binary_search(from.begin(), from.end(), t)) rest_from.push_back(t);
    if (!std::binary_search(to.begin(), to.end(), t)) rest_to.push_back(t);
  }
  for (std::size_t j = 0; j < rest_from.size(); ++j) target[static_cast<std::size_t>(rest_from[j] - 1)] = rest_to[j];

  const Word c = f.append(f.bit(f.length()));
  const Word c2 = g.append(g.bit(g.length()));
  std::vector<bool> flip(static_cast<std::size_t>(d), false);
  for (int i = 1; i <= d; ++i) {
    const int t = target[static_cast<std::size_t>(i - 1)];
    flip[static_cast<std::size_t>(t - 1)] = c.bit(i) != c2.bit(t);
  }
  return CoordinateMap(std::move(target), std::move(flip));
}

std::optional<std::vector<int>> induced_vertex_map(const CoordinateMap& m, const AvoidanceGraph& from,
                                                   const AvoidanceGraph& to) {
  if (m.dimension() != from.dimension() || m.dimension() != to.dimension())
    throw std::invalid_argument("induced_vertex_map: dimension mismatch");
  std::vector<int> out(static_cast<std::size_t>(from.order()));
  for (int v = 0; v < from.order(); ++v) {
    const auto image = to.index_of(Word(m.apply_code(from.codes()[static_cast<std::size_t>(v)]), m.dimension()));
    if (!image) return std::nullopt;
    out[static_cast<std::size_t>(v)] = *image;
  }
  return out;
}

TheoremReport verify_theorem_3k1(int k, int d) {
  if (k < 2 || d < 1 || d > 3 * k - 1 || d > AvoidanceGraph::kMaxDimension)
    throw std::invalid_argument("verify_theorem_3k1: need k >= 2 and 1 <= d <= min(3k-1, 14)");
  const Word f = Word::zeros(k) + Word::ones(k);
  const Word g = Word::zeros(k + 1) + Word::ones(k - 1);
  const auto gf = build_graph(d, f);
  const auto gg = build_graph(d, g);
  const bool trivial = d < 2 * k;
  const CoordinateMap m = trivial ? CoordinateMap::identity(d) : alpha_map(k, d);

  TheoremReport r;
  r.evidence = {{"k", k}, {"d", d}, {"f", f.str()}, {"g", g.str()},
                {"regime", trivial ? "trivial" : "alpha"},
                {"vertices", {gf.order(), gg.order()}}};
  const auto vm = induced_vertex_map(m, gf, gg);
  const bool lands = vm.has_value();
  const bool mapping_ok = lands && verify_mapping(gf.graph(), gg.graph(), *vm);
  const bool certs_equal = canonical_certificate(gf.graph()) == canonical_certificate(gg.graph());
  r.evidence["map_lands_in_target"] = lands;
  r.evidence["mapping_verified"] = mapping_ok;
  r.evidence["certificates_equal"] = certs_equal;
  if (mapping_ok != certs_equal) r.evidence["internal_inconsistency"] = true;
  if (!lands) {
    for (int v = 0; v < gf.order(); ++v) {
      const Word w = m.apply(gf.word(v));
      if (!gg.contains(w)) {
        r.evidence["counterexample"] = {{"vertex", gf.word(v).str()}, {"image", w.str()}};
        break;
      }
    }
  }
  r.pass = mapping_ok && certs_equal;
  return r;
}

TheoremReport verify_theorem_blocks(int d) {
  if (d < 2 || d > 11) throw std::invalid_argument("verify_theorem_blocks: d must be in [2, 11]");
  const int len = d - 1;
  const int count = 1 << len;
  std::vector<Word> words;
  for (int c = 0; c < count; ++c) words.emplace_back(static_cast<std::uint32_t>(c), len);

  std::vector<std::optional<AvoidanceGraph>> graphs(static_cast<std::size_t>(count));
  std::vector<std::string> certs(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      graphs[static_cast<std::size_t>(i)].emplace(d, words[static_cast<std::size_t>(i)]);
      certs[static_cast<std::size_t>(i)] = canonical_certificate(graphs[static_cast<std::size_t>(i)]->graph());
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  TheoremReport r;
  r.pass = true;
  std::int64_t iso_pairs = 0, non_iso_pairs = 0;
  for (int i = 0; i < count && r.pass; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const Word& f = words[static_cast<std::size_t>(i)];
      const Word& g = words[static_cast<std::size_t>(j)];
      const auto& gf = *graphs[static_cast<std::size_t>(i)];
      const auto& gg = *graphs[static_cast<std::size_t>(j)];
      if (nu(f) == nu(g)) {
        ++iso_pairs;
        const auto vm = induced_vertex_map(psi_map(f, g, d), gf, gg);
        if (!vm || !verify_mapping(gf.graph(), gg.graph(), *vm)) {
          r.pass = false;
          r.evidence["counterexample"] = {{"f", f.str()}, {"g", g.str()}, {"reason", "psi is not an isomorphism"}};
          break;
        }
      } else {
        ++non_iso_pairs;
        if (certs[static_cast<std::size_t>(i)] == certs[static_cast<std::size_t>(j)]) {
          r.pass = false;
          r.evidence["counterexample"] = {
              {"f", f.str()}, {"g", g.str()}, {"reason", "different nu but equal certificates"}};
          break;
        }
      }
    }
  }
  r.evidence["d"] = d;
  r.evidence["words"] = count;
  r.evidence["nu_equal_pairs_checked"] = iso_pairs;
  r.evidence["nu_unequal_pairs_checked"] = non_iso_pairs;
  return r;
}

TheoremReport verify_theorem_length(int d) {
  if (d < 1 || d > 11) throw std::invalid_argument("verify_theorem_length: d must be in [1, 11]");
  TheoremReport r;
  r.pass = true;
  r.evidence["d"] = d;
  HarnessOptions opts;
  opts.enforce_equal_lengths = false;
  const auto table = isom_classes(d, 1, d, opts);
  r.evidence["classes"] = table.classes.size();
  for (const auto& [cert, members] : table.classes) {
    for (const Word& w : members) {
      if (w.length() != members.front().length()) {
        r.pass = false;
        r.evidence["counterexample"] = {{"f", members.front().str()}, {"g", w.str()}};
        break;
      }
    }
    if (!r.pass) break;
  }
  for (int k = 1; k < d && r.pass; ++k) {
    if (!verify_count_chain(d, k)) {
      r.pass = false;
      r.evidence["chain_failure_k"] = k;
    }
  }
  r.evidence["count_chain_checked_up_to_k"] = d - 1;
  return r;
}

} // namespace fibcube
