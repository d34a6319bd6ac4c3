#include "doctest.h"
#include "oracles.hpp"
#include "osborn/enumerator.hpp"
#include "osborn/errors.hpp"
#include "osborn/filter.hpp"
#include "osborn/loop_io.hpp"

using namespace osborn;

TEST_CASE("normalized counts match the row-permutation oracle") {
  const std::size_t expected[] = {1, 1, 1, 4, 56, 9408};
  for (int n = 1; n <= 6; ++n) {
    EnumSpec s;
    s.order = n;
    const auto loops = enumerate_loops(s, n == 6 ? 4 : 1);
    CHECK(loops.size() == expected[n - 1]);
    if (n <= 5) CHECK(oracle::count_normalized(n) == expected[n - 1]);
  }
}

TEST_CASE("enumeration is normalized, sorted, duplicate free and deterministic") {
  EnumSpec s;
  s.order = 5;
  const auto a = enumerate_loops(s, 1);
  const auto b = enumerate_loops(s, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i].identity() == 0);
    for (Elem k = 0; k < 5; ++k) CHECK(a[i].multiply(0, k) == k);
    CHECK(read_loop_string(loop_to_string(a[i])) == a[i]);
    if (i) CHECK(a[i - 1].rows() < a[i].rows());
  }
}

TEST_CASE("all identity positions") {
  EnumSpec s;
  s.order = 3;
  s.normalized = false;
  const auto loops = enumerate_loops(s);
  CHECK(loops.size() == 3);
  for (std::size_t i = 0; i < loops.size(); ++i) CHECK(loops[i].identity() == i);
}

TEST_CASE("limits and bounds") {
  EnumSpec s;
  s.order = 7;
  CHECK_THROWS_AS(check_enum_bounds(s), BoundExceeded);
  s.limit = 3;
  CHECK(enumerate_loops(s).size() == 3);
  s.order = 9;
  CHECK_THROWS_AS(enumerate_loops(s), BoundExceeded);
  s.order = 4;
  s.limit = 0;
  CHECK(enumerate_loops(s).empty());
}

TEST_CASE("filter counts") {
  EnumSpec s;
  s.order = 5;
  const FilterSummary none = filter_count(s);
  CHECK(none.matches.size() == 56);
  CHECK(none.tallies.empty());

  s.filters = {LoopFilter::nonassociative};
  s.order = 4;
  CHECK(filter_count(s).tallies[0].count == 0);  // every order-4 loop is a group

  s.order = 5;
  s.filters = {LoopFilter::osborn, LoopFilter::nonassociative};
  const FilterSummary f = filter_count(s);
  std::size_t osb = 0, both = 0;
  EnumSpec all;
  all.order = 5;
  for (const auto& L : enumerate_loops(all)) {
    const bool o = oracle::osborn(oracle::rows_of(L));
    osb += o;
    both += o && !is_associative(L);
  }
  CHECK(f.tallies[0].count == osb);
  CHECK(f.tallies[2].label == "all");
  CHECK(f.tallies[2].count == both);
  CHECK(f.matches.size() == both);

  s.filters = {LoopFilter::osborn};
  s.limit = 1;
  const FilterSummary first = filter_count(s);
  REQUIRE(first.matches.size() == 1);
  CHECK(oracle::osborn(oracle::rows_of(first.matches[0])));
}

TEST_CASE("filter names") {
  for (auto f : {LoopFilter::osborn, LoopFilter::nonassociative, LoopFilter::nontrivial_aum,
                 LoopFilter::holomorph_osborn_all_subgroups, LoopFilter::holomorph_osborn_some_subgroup})
    CHECK(parse_filter(filter_name(f)) == f);
  CHECK_THROWS_AS(parse_filter("moufang"), InputError);
}
