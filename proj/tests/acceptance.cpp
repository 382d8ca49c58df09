// Acceptance run: one PASS/FAIL line per criterion. Criterion 10 is reported
// but never fails the run.
//
//   acceptance [--skip-stretch] [--jobs N]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "gridknot/bounds.hpp"
#include "gridknot/census.hpp"
#include "gridknot/determinant.hpp"
#include "gridknot/realizer.hpp"
#include "gridknot/simplify.hpp"
#include "oracle.hpp"

using namespace gridknot;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int jobs = 1;

// "n: lo-hi lo-hi ..." on one line.
std::string oneline(const GridDiagram& d) {
  std::string t = to_text(d);
  while (!t.empty() && t.back() == '\n') t.pop_back();
  const auto nl = t.find('\n');
  return t.substr(0, nl) + ": " + t.substr(nl + 1);
}

std::vector<CromwellMove> exterior_moves(const GridDiagram& d) {
  std::vector<CromwellMove> out;
  for (const auto& m : available_moves(d)) {
    if (is_exterior(m) && m.kind != MoveKind::Divide) out.push_back(m);
  }
  return out;
}

std::vector<GridDiagram> census_knots(int n) {
  CensusFilter f;
  f.knots_only = true;
  CensusOptions o;
  o.jobs = jobs;
  return enumerate(n, f, {}, o).representatives;
}

// Collects failures, keeping the first few for the report.
struct Failures {
  int count = 0;
  std::string first;
  void add(const std::string& what) {
    if (std::getenv("ACCEPTANCE_VERBOSE")) std::fprintf(stderr, "%s\n", what.c_str());
    if (count++ < 3) first += (first.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    return {count == 0, count == 0 ? summary : std::to_string(count) + " violations: " + first};
  }
};

Outcome max_stats_exact() {
  std::ostringstream s;
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    const MaxStats m = max_stats(n, jobs);
    ok = ok && m.crossings == max_crossings_bound(n) && m.total_length == max_length_bound(n);
    s << "n=" << n << ":(" << m.crossings << "," << m.total_length << ") ";
  }
  return {ok, s.str()};
}

Outcome extremal_attains() {
  Failures f;
  for (int n = 2; n <= 12; ++n) {
    const GridDiagram d = extremal_diagram(n);
    if (crossing_count(d) != max_crossings_bound(n)) f.add("crossings at n=" + std::to_string(n));
    if (length_stats(d).total_all != max_length_bound(n)) f.add("length at n=" + std::to_string(n));
  }
  const GridDiagram e = extremal_diagram(8);
  return f.done("n=8: " + std::to_string(crossing_count(e)) + " crossings, length " +
                std::to_string(length_stats(e).total_all));
}

Outcome small_census() {
  CensusOptions o;
  o.jobs = 1;
  std::ostringstream s;
  bool ok = true;
  for (int n = 2; n <= 7; ++n) {
    const auto r = verify_theorem2(n, o);
    ok = ok && r.holds && r.census.trivial_stuck_count == 0;
    s << r.census.trivial_stuck_count << (n < 7 ? "," : "");
  }
  return {ok, "stuck trivial counts n=2..7: " + s.str()};
}

Outcome census_eight() {
  CensusOptions o;
  o.jobs = jobs;
  const auto r = verify_theorem2(8, o);
  const auto& reps = r.census.representatives;
  const bool both = std::all_of(r.admits_both_exterior.begin(), r.admits_both_exterior.end(),
                                [](bool b) { return b; });
  const bool needs = std::any_of(r.needs_exterior.begin(), r.needs_exterior.end(),
                                 [](bool b) { return b; });
  std::string detail = std::to_string(reps.size()) + " orbits";
  if (!reps.empty()) detail += ", first " + oneline(reps.front());
  return {r.holds && !reps.empty() && both && needs, detail};
}

Outcome formulas() {
  const int expected[2][3] = {{156, 78, 79}, {8, 4, 5}};
  const int sizes[2] = {8, 3};
  const BoundKind kinds[3] = {BoundKind::ExteriorExchange, BoundKind::ExteriorMerge, BoundKind::Rotation};
  std::ostringstream s;
  bool ok = true;
  for (int i = 0; i < 2; ++i) {
    s << "n=" << sizes[i] << ":";
    for (int k = 0; k < 3; ++k) {
      const int v = theorem3_bound(sizes[i], kinds[k]);
      ok = ok && v == expected[i][k];
      s << (k ? "/" : "") << v;
    }
    s << " ";
  }
  return {ok, s.str()};
}

Outcome sigma_consistent() {
  Failures f;
  int moves = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : census_knots(n)) {
      for (const auto& m : exterior_moves(d)) {
        ++moves;
        const Theorem3Report r = verify_theorem3(d, m);
        for (const auto& j : r.jumps) {
          if (j.sigma_strong() > j.sigma_simple()) f.add("strong > simple at " + describe(m) + " on " + oneline(d));
        }
        if (!r.holds || r.total > r.bound) f.add("total over bound at " + describe(m) + " on " + oneline(d));
      }
    }
  }
  return f.done(std::to_string(moves) + " moves checked");
}

Outcome realizer_sound() {
  Failures f;
  int traces = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& d : oracle::all_grids(n)) {
      if (!is_knot(d)) continue;
      for (const auto& m : exterior_moves(d)) {
        ++traces;
        const std::string where = describe(m) + " on " + oneline(d);
        const RealizationTrace t = realize(d, m);
        if (replay(t).code() != to_planar(apply(d, m)).canonicalized().code()) f.add("not equal: " + where);
        int budget = 0;
        for (size_t j = 0; j < t.jumps.size(); ++j) {
          const SigmaBreakdown& s = t.jumps[j];
          const int jj = static_cast<int>(j);
          budget += s.sigma_simple();
          const int r1 = t.count(ReidemeisterKind::R1_create, jj) + t.count(ReidemeisterKind::R1_delete, jj);
          if (t.sweep_count(ReidemeisterKind::R3, jj) != s.V) f.add("R3 != V: " + where);
          if (t.count(ReidemeisterKind::R3, jj) > s.V) f.add("R3 > V: " + where);
          if (s.E_boundary == 0 && r1 != 0) f.add("R1 with no boundary edge: " + where);
        }
        if (static_cast<int>(t.moves.size()) > budget) f.add("over budget: " + where);
      }
    }
  }
  return f.done(std::to_string(traces) + " traces");
}

Outcome simplify_sound() {
  Failures f;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const GridDiagram d = scramble(seed, 1 + static_cast<int>(seed % 20));
    const SearchReport r = is_trivial(d);
    if (r.verdict != Verdict::Trivial || !r.witness) {
      f.add("seed " + std::to_string(seed) + " not trivial");
    } else if (replay_witness(*r.witness) != GridDiagram::trivial()) {
      f.add("seed " + std::to_string(seed) + " witness does not replay");
    }
  }
  std::string found;
  for (const auto& d : census_knots(5)) {
    if (knot_determinant(d) != 3) continue;
    SearchOptions every_merge;
    every_merge.greedy_merges = false;
    const SearchReport r = is_trivial(d, {}, every_merge);
    if (r.verdict != Verdict::NotTrivial) f.add("determinant 3 grid called trivial");
    found = oneline(d) + " NotTrivial after " + std::to_string(r.states_visited) + " states";
    break;
  }
  if (found.empty()) f.add("no determinant 3 grid at n=5");
  return f.done("10000 scrambles trivial; " + found);
}

Outcome properties() {
  Failures f;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& d : oracle::all_grids(n)) {
      const bool knot = oracle::components(d) == 1;
      const auto det = knot ? knot_determinant(d) : 0;
      for (const auto& m : available_moves(d)) {
        const GridDiagram r = apply(d, m);
        if (apply(r, inverse(m, d)) != d) f.add("inverse of " + describe(m));
        if (knot && knot_determinant(r) != det) f.add("determinant changed by " + describe(m));
      }
      const GridDiagram c = canonical_form(d).diagram;
      if (canonical_form(c).diagram != c || !is_canonical(c)) f.add("canonical form not idempotent");
    }
  }
  for (int n = 3; n <= 6; ++n) {
    CensusFilter pruned;
    pruned.knots_only = pruned.stuck_only = true;
    CensusFilter post;
    post.knots_only = true;
    post.custom = [](const GridDiagram& d) { return is_stuck(d); };
    if (enumerate(n, pruned).representatives != enumerate(n, post).representatives) {
      f.add("pruning differs at n=" + std::to_string(n));
    }
  }
  std::set<std::vector<Span>> orbits;
  for (int n = 2; n <= 4; ++n) {
    const auto all = oracle::all_grids(n);
    orbits.clear();
    std::uint64_t knots = 0;
    for (const auto& d : all) {
      orbits.insert(canonical_form(d).diagram.columns());
      if (oracle::components(d) == 1) ++knots;
    }
    const auto r = enumerate(n, {});
    CensusFilter kf;
    kf.knots_only = true;
    if (r.raw_count != all.size() || r.orbit_count != orbits.size() || enumerate(n, kf).raw_count != knots) {
      f.add("oracle counts differ at n=" + std::to_string(n));
    }
  }
  CensusFilter kf;
  kf.knots_only = true;
  const auto one = oracle::all_grids(2).size();
  const auto six = enumerate(3, kf).raw_count;
  if (one != 1 || six != 6) f.add("reference counts");
  return f.done("n=2: " + std::to_string(one) + " diagram, n=3: " + std::to_string(six) + " knot diagrams");
}

Outcome only_exterior_horizontal() {
  CensusOptions o;
  o.jobs = jobs;
  const auto d = find_only_exterior_horizontal(9, o);
  if (!d) return {false, "none found at n=9"};
  return {true, "found " + oneline(*d)};
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = true;
  jobs = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--skip-stretch")) stretch = false;
    if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::max(1, std::atoi(argv[++i]));
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"maximum crossings and length n=2..6", max_stats_exact},
      {"extremal diagrams n=2..12", extremal_attains},
      {"no stuck trivial knot for n<=7", small_census},
      {"stuck trivial knots at n=8", census_eight},
      {"Reidemeister bound formulas", formulas},
      {"sigma consistency n<=6", sigma_consistent},
      {"realizer soundness and budget n<=5", realizer_sound},
      {"simplification soundness", simplify_sound},
      {"property suites", properties},
      {"only the exterior horizontal exchange at n=9 (stretch)", only_exterior_horizontal},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const bool gating = i + 1 < criteria.size();
    if (!gating && !stretch) {
      std::printf("SKIP %2zu %s\n", i + 1, criteria[i].first);
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s [%.1fs]: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok && gating) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
