#include <doctest.h>

#include <cstdio>
#include <set>

#include "gridknot/census.hpp"
#include "gridknot/determinant.hpp"
#include "oracle.hpp"

using namespace gridknot;

TEST_CASE("census counts match the naive oracle") {
  CHECK(enumerate(2, {}).raw_count == 1);
  CensusFilter knots;
  knots.knots_only = true;
  CHECK(enumerate(3, knots).raw_count == 6);
  for (int n = 2; n <= 5; ++n) {
    const auto all = oracle::all_grids(n);
    std::set<std::vector<Span>> orbits;
    std::uint64_t knot_raw = 0;
    for (const auto& d : all) {
      orbits.insert(canonical_form(d).diagram.columns());
      if (oracle::components(d) == 1) ++knot_raw;
    }
    const auto r = enumerate(n, {});
    CHECK(r.raw_count == all.size());
    CHECK(r.orbit_count == orbits.size());
    CHECK(enumerate(n, knots).raw_count == knot_raw);
  }
}

TEST_CASE("raw counts follow the known sequence") {
  // number of n x n 0/1 matrices with two ones in each row and column
  const std::uint64_t expected[] = {1, 6, 90, 2040, 67950};
  for (int n = 2; n <= 6; ++n) CHECK(enumerate(n, {}).raw_count == expected[n - 2]);
}

TEST_CASE("streamed diagrams are canonical and unique") {
  std::set<std::vector<Span>> seen;
  std::uint64_t raw = 0;
  const auto r = enumerate(5, {}, [&](const GridDiagram& d) {
    CHECK(is_canonical(d));
    CHECK(seen.insert(d.columns()).second);
    raw += orbit_size(d);
  });
  CHECK(raw == r.raw_count);
  CHECK(seen.size() == r.accepted);
}

TEST_CASE("pruned stuck enumeration equals filtering afterwards") {
  for (int n = 3; n <= 6; ++n) {
    CensusFilter pruned;
    pruned.knots_only = pruned.stuck_only = true;
    CensusFilter post;
    post.knots_only = true;
    post.custom = [](const GridDiagram& d) { return is_stuck(d); };
    const auto a = enumerate(n, pruned);
    const auto b = enumerate(n, post);
    CAPTURE(n);
    CHECK(a.representatives == b.representatives);
    CHECK(a.accepted == b.stuck_count);
  }
  // and against the brute-force list
  for (int n = 3; n <= 5; ++n) {
    std::set<std::vector<Span>> expected;
    for (const auto& d : oracle::all_grids(n)) {
      if (oracle::components(d) == 1 && is_stuck(d)) expected.insert(canonical_form(d).diagram.columns());
    }
    CensusFilter pruned;
    pruned.knots_only = pruned.stuck_only = true;
    std::set<std::vector<Span>> got;
    for (const auto& d : enumerate(n, pruned).representatives) got.insert(d.columns());
    CHECK(got == expected);
  }
}

TEST_CASE("maximum statistics equal the closed-form bounds") {
  for (int n = 2; n <= 6; ++n) {
    const auto m = max_stats(n);
    CAPTURE(n);
    CHECK(m.crossings == max_crossings_bound(n));
    CHECK(m.total_length == max_length_bound(n));
  }
  CHECK(max_stats(4).crossings == 4);
  CHECK(max_stats(5).total_length == 24);
}

TEST_CASE("worker count does not change the result") {
  CensusFilter f;
  f.knots_only = true;
  CensusOptions two;
  two.jobs = 3;
  const auto a = enumerate(6, f);
  const auto b = enumerate(6, f, {}, two);
  CHECK(a.representatives == b.representatives);
  CHECK(a.raw_count == b.raw_count);
}

TEST_CASE("checkpoints resume to the same result") {
  const std::string path = "census_checkpoint_test.jsonl";
  std::remove(path.c_str());
  CensusFilter f;
  f.knots_only = f.stuck_only = true;
  CensusOptions o;
  o.checkpoint = path;
  const auto first = enumerate(7, f, {}, o);
  const auto resumed = enumerate(7, f, {}, o);
  CHECK(first.representatives == resumed.representatives);
  CHECK(first.raw_count == resumed.raw_count);
  CHECK(first.representatives == enumerate(7, f).representatives);
  std::remove(path.c_str());
}

TEST_CASE("no small stuck trivial knots") {
  for (int n = 2; n <= 7; ++n) {
    const auto r = verify_theorem2(n);
    CHECK(r.holds);
    CHECK(r.census.trivial_stuck_count == 0);
  }
  CHECK_THROWS_AS(enumerate(1, {}), Error);
}
