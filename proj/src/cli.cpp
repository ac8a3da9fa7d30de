#include "fibcube/cli.hpp"

#include <omp.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibcube/counting.hpp"
#include "fibcube/cube.hpp"
#include "fibcube/harness.hpp"
#include "fibcube/iso.hpp"
#include "fibcube/theorems.hpp"
#include "fibcube/word.hpp"

namespace fibcube {

namespace {

using ojson = nlohmann::ordered_json;

// Objects get ": " and ", ", arrays stay tight: {"coeffs": [1,0,0,1], "at2": 9}
void emit(const ojson& j, std::ostream& os) {
  if (j.is_object()) {
    os << '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ", ";
      first = false;
      os << ojson(it.key()).dump() << ": ";
      emit(it.value(), os);
    }
    os << '}';
  } else if (j.is_array()) {
    os << '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ',';
      emit(j[i], os);
    }
    os << ']';
  } else {
    os << j.dump();
  }
}

void print(std::ostream& out, const ojson& j) {
  emit(j, out);
  out << '\n';
}

ojson ordered(const nlohmann::json& j) { return ojson::parse(j.dump()); }

std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Failure : std::runtime_error {
  std::string kind;
  Failure(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
};

void need(bool ok, const std::string& msg) {
  if (!ok) throw Failure("validation", msg);
}

int report_error(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& msg) {
  print(out, ojson{{"error", msg}, {"kind", kind}});
  err << "fibcube: " << msg << '\n';
  return kExitFailure;
}

struct Globals {
  int jobs = 0;
  std::optional<std::int64_t> budget;
};

std::int64_t budget_of(const Globals& g) { return g.budget ? *g.budget : default_node_budget(); }

int cmd_count(std::ostream& out, int d, const std::string& f, bool oracle) {
  const Word w = Word::parse(f);
  std::uint64_t n = 0;
  if (oracle) {
    need(d >= 0 && d <= 24, "count --oracle: d must be in [0, 24]");
    n = brute_count(d, w);
  } else {
    need(d >= 0 && d <= 62, "count: d must be in [0, 62]");
    n = count_avoiders(d, w);
  }
  print(out, ojson{{"n", n}});
  return kExitOk;
}

int cmd_poly(std::ostream& out, const std::string& f) {
  const auto p = autocorrelation(Word::parse(f));
  print(out, ojson{{"coeffs", p.coeffs}, {"at2", eval_at_two(p)}});
  return kExitOk;
}

int cmd_build(std::ostream& out, int d, const std::string& f, bool graph6, const std::string& path) {
  need(d >= 1 && d <= AvoidanceGraph::kMaxDimension, "build: d must be in [1, 14]");
  std::optional<Word> w;
  if (!f.empty()) w = Word::parse(f);
  const auto g = build_graph(d, w);
  if (graph6) {
    const std::string line = to_graph6(g.graph()) + '\n';
    if (path.empty()) {
      out << line;
    } else {
      std::ofstream file(path, std::ios::binary);
      need(static_cast<bool>(file), "build: cannot open " + path);
      file << line;
      print(out, ojson{{"written", path}, {"vertices", g.order()}});
    }
    return kExitOk;
  }
  ojson j = {{"d", d},
             {"f", w ? ojson(w->str()) : ojson(nullptr)},
             {"vertices", g.order()},
             {"edges", g.graph().size()},
             {"bipartite", is_bipartite(g.graph())},
             {"max_common_neighbors", max_common_neighbors(g.graph())}};
  if (w) j["nu"] = nu(*w);
  print(out, j);
  return kExitOk;
}

int cmd_iso(std::ostream& out, const Globals& gl, int d, const std::string& f, const std::string& g) {
  need(d >= 1 && d <= AvoidanceGraph::kMaxDimension, "iso: d must be in [1, 14]");
  const auto a = build_graph(d, Word::parse(f));
  const auto b = build_graph(d, Word::parse(g));
  const auto ca = canonical_form(a.graph(), budget_of(gl));
  const auto cb = canonical_form(b.graph(), budget_of(gl));
  const auto m = are_isomorphic(a.graph(), b.graph(), budget_of(gl));
  ojson mapping = nullptr;
  if (m) {
    mapping = ojson::object();
    for (int v = 0; v < a.order(); ++v) mapping[a.word(v).str()] = b.word((*m)[static_cast<std::size_t>(v)]).str();
  }
  print(out, ojson{{"isomorphic", m.has_value()},
                   {"d", d},
                   {"f", f},
                   {"g", g},
                   {"vertices", {a.order(), b.order()}},
                   {"edges", {a.graph().size(), b.graph().size()}},
                   {"certificates", {ca.certificate, cb.certificate}},
                   {"search_nodes", {ca.stats.nodes, cb.stats.nodes}},
                   {"mapping", mapping}});
  return m ? kExitOk : kExitNegative;
}

int cmd_verify(std::ostream& out, const std::string& theorem, int d, std::optional<int> k) {
  TheoremReport r;
  if (theorem == "length") {
    r = verify_theorem_length(d);
  } else if (theorem == "3k1") {
    need(k.has_value(), "verify --theorem 3k1 requires --k");
    r = verify_theorem_3k1(*k, d);
  } else {
    r = verify_theorem_blocks(d);
  }
  print(out, ojson{{"theorem", theorem}, {"verdict", r.pass ? "PASS" : "FAIL"}, {"evidence", ordered(r.evidence)}});
  return r.pass ? kExitOk : kExitNegative;
}

HarnessOptions harness_options(const Globals& gl, double wall, const std::string& results) {
  HarnessOptions o;
  o.node_budget = budget_of(gl);
  o.wall_seconds = wall;
  if (!results.empty()) o.results_path = results;
  return o;
}

int cmd_classes(std::ostream& out, const Globals& gl, int d, std::optional<int> kmin, std::optional<int> kmax,
                bool certificates, double wall, const std::string& results) {
  need(d >= 2 && d <= 11, "classes: d must be in [2, 11]");
  const int lo = kmin.value_or(3);
  const int hi = kmax.value_or(d - 1);
  need(lo >= 1 && hi <= d, "classes: need 1 <= kmin and kmax <= d");
  auto opts = harness_options(gl, wall, results);
  opts.enforce_equal_lengths = false;
  const auto t = isom_classes(d, lo, hi, opts);
  ojson classes = ojson::array();
  for (const auto& [cert, members] : t.classes) {
    ojson words = ojson::array();
    for (const Word& w : members) words.push_back(w.str());
    ojson c = {{"size", members.size()}, {"words", words}, {"digest", digest(cert)}};
    if (certificates) c["certificate"] = cert;
    classes.push_back(c);
  }
  print(out, ojson{{"d", d},
                   {"kmin", lo},
                   {"kmax", hi},
                   {"complete", t.complete},
                   {"words_classified", t.words_classified},
                   {"words_reused", t.words_reused},
                   {"class_count", t.classes.size()},
                   {"seconds", t.seconds},
                   {"classes", classes}});
  return t.complete ? kExitOk : kExitFailure;
}

int cmd_conjecture(std::ostream& out, const Globals& gl, int id, int dmin, int dmax, double wall,
                   const std::string& results) {
  need(dmin >= 3 && dmax <= 11 && dmin <= dmax, "conjecture: need 3 <= dmin <= dmax <= 11");
  const auto opts = harness_options(gl, wall, results);
  int code = kExitOk;
  for (int d = dmin; d <= dmax; ++d) {
    const auto t = isom_classes(d, opts);
    ConjectureReport r;
    switch (static_cast<ConjectureId>(id)) {
      case ConjectureId::DimMinus1: r = check_conjecture_dim_minus_1(t, opts); break;
      case ConjectureId::TwoThirds: r = check_conjecture_two_thirds(t, opts); break;
      case ConjectureId::Blocks: r = check_conjecture_blocks(t, opts); break;
    }
    print(out, ordered(to_json(r)));
    out.flush();
    if (!r.verdict) code = kExitNegative;
    else if (!r.complete && code == kExitOk) code = kExitFailure;
  }
  return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Fibonacci cube toolkit", "fibcube"};
  app.require_subcommand(1);
  Globals gl;
  std::int64_t budget = 0;
  app.add_option("--jobs", gl.jobs, "worker threads (default: all logical CPUs)")->check(CLI::NonNegativeNumber);
  auto* budget_opt =
      app.add_option("--budget", budget, "search-node budget per canonicalization (default: FIBCUBE_BUDGET or 1e7)")
          ->check(CLI::PositiveNumber);

  int d = 0;
  std::string f, g, theorem, path, results;
  bool oracle = false, graph6 = false, stats = false, certificates = false;
  std::optional<int> k, kmin, kmax;
  int id = 0, dmin = 3, dmax = 0;
  double wall = 1800.0;

  auto* count = app.add_subcommand("count", "number of length-d words avoiding f");
  count->add_option("--d", d)->required();
  count->add_option("--f", f)->required();
  count->add_flag("--oracle", oracle, "enumerate all 2^d words instead");

  auto* poly = app.add_subcommand("poly", "autocorrelation polynomial of f");
  poly->add_option("--f", f)->required();

  auto* build = app.add_subcommand("build", "construct Q_d(f)");
  build->add_option("--d", d)->required();
  build->add_option("--f", f, "forbidden factor (omit for the full cube)");
  auto* g6 = build->add_flag("--graph6", graph6, "emit graph6");
  build->add_flag("--stats", stats, "emit summary statistics (default)")->excludes(g6);
  build->add_option("--out", path, "write graph6 to this file")->needs(g6);

  auto* iso = app.add_subcommand("iso", "decide Q_d(f) ~ Q_d(g)");
  iso->add_option("--d", d)->required();
  iso->add_option("--f", f)->required();
  iso->add_option("--g", g)->required();

  auto* verify = app.add_subcommand("verify", "machine-check a theorem at one dimension");
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"length", "3k1", "blocks"}));
  verify->add_option("--d", d)->required();
  verify->add_option("--k", k);

  auto* classes = app.add_subcommand("classes", "isomorphism classes of Q_d(f) over a length range");
  classes->add_option("--d", d)->required();
  classes->add_option("--kmin", kmin, "shortest factor length (default 3)");
  classes->add_option("--kmax", kmax, "longest factor length (default d-1)");
  classes->add_flag("--certificates", certificates, "include full certificates");
  classes->add_option("--wall-seconds", wall)->check(CLI::PositiveNumber);
  classes->add_option("--results", results, "append-only JSON-lines cache");

  auto* conj = app.add_subcommand("conjecture", "check a conjecture for dmin..dmax, one JSON line per d");
  conj->add_option("--id", id)->required()->check(CLI::IsMember({1, 2, 3}));
  conj->add_option("--dmax", dmax)->required();
  conj->add_option("--dmin", dmin);
  conj->add_option("--wall-seconds", wall)->check(CLI::PositiveNumber);
  conj->add_option("--results", results, "append-only JSON-lines cache");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return report_error(out, err, "usage", e.what());
  }
  if (*budget_opt) gl.budget = budget;
  if (gl.jobs > 0) omp_set_num_threads(gl.jobs);

  try {
    if (*count) return cmd_count(out, d, f, oracle);
    if (*poly) return cmd_poly(out, f);
    if (*build) return cmd_build(out, d, f, graph6, path);
    if (*iso) return cmd_iso(out, gl, d, f, g);
    if (*verify) return cmd_verify(out, theorem, d, k);
    if (*classes) return cmd_classes(out, gl, d, kmin, kmax, certificates, wall, results);
    if (*conj) return cmd_conjecture(out, gl, id, dmin, dmax, wall, results);
  } catch (const Failure& e) {
    return report_error(out, err, e.kind, e.what());
  } catch (const BudgetExceeded& e) {
    return report_error(out, err, "budget", e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(out, err, "validation", e.what());
  } catch (const std::out_of_range& e) {
    return report_error(out, err, "validation", e.what());
  } catch (const std::exception& e) {
    return report_error(out, err, "internal", e.what());
  }
  return report_error(out, err, "usage", "no subcommand");
}

} // namespace fibcube
