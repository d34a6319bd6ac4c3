#include "doctest.h"
#include "oracles.hpp"
#include "osborn/autotopy.hpp"
#include "osborn/catalog.hpp"
#include "osborn/enumerator.hpp"
#include "osborn/errors.hpp"
#include "osborn/holomorph.hpp"

using namespace osborn;

namespace {

std::vector<oracle::Map> maps_of(const PermGroup& g) {
  std::vector<oracle::Map> out;
  for (const auto& p : g.elements()) out.emplace_back(p.image().begin(), p.image().end());
  return out;
}

}  // namespace

TEST_CASE("holomorph table matches the pairwise definition") {
  for (std::size_t n = 1; n <= 5; ++n) {
    EnumSpec s;
    s.order = n;
    for (const auto& L : enumerate_loops(s)) {
      for (const auto& A : all_subgroups(automorphism_group(L))) {
        const HolomorphLoop H = build_holomorph(L, A);
        CHECK(H.table().order() == A.order() * n);
        CHECK(oracle::rows_of(H.table()) == oracle::holomorph(oracle::rows_of(L), maps_of(A)));
      }
    }
  }
}

TEST_CASE("trivial-A holomorph is isomorphic to the loop") {
  for (const auto& [name, L] : catalog::group_suite()) {
    const HolomorphLoop H = build_holomorph(L, PermGroup(L.order()));
    CHECK(loops_isomorphic(H.table(), L).has_value());
  }
}

TEST_CASE("holomorph of a group is a group") {
  for (const auto& [name, L] : catalog::group_suite()) {
    if (L.order() > 6) continue;  // |AUM| * n stays small
    CAPTURE(name);
    CHECK(is_associative(build_holomorph(L, automorphism_group(L)).table()));
  }
  // Hol(Z3) is S3
  CHECK(loops_isomorphic(build_holomorph(catalog::cyclic(3), automorphism_group(catalog::cyclic(3))).table(),
                         catalog::symmetric3()));
}

TEST_CASE("generated subgroups") {
  const LoopTable z5 = catalog::cyclic(5);
  const PermGroup A = subgroup_closure(z5, {parse_perm_literal("1,3,5,2,4")});
  CHECK(A.order() == 4);
  CHECK(build_holomorph(z5, A).table().order() == 20);
  try {
    subgroup_closure(z5, {parse_perm_literal("1,2,3,4,5"), parse_perm_literal("1,3,2,4,5")});
    FAIL("expected NotAnAutomorphism");
  } catch (const NotAnAutomorphism& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("pair coordinates") {
  const LoopTable z3 = catalog::cyclic(3);
  const HolomorphLoop H = build_holomorph(z3, automorphism_group(z3));
  CHECK(H.index_of(1, 2) == 5);
  CHECK(H.pair_of(4) == std::pair<std::size_t, Elem>{1, 1});
  CHECK(H.table().identity() == 0);
}
