#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "osborn/catalog.hpp"
#include "osborn/errors.hpp"
#include "osborn/loop_io.hpp"
#include "osborn/nuclei.hpp"
#include "osborn/perm.hpp"
#include "osborn/perm_group.hpp"

using namespace osborn;

namespace {
const char* kZ4 = "# cyclic of order 4\n4\n1 2 3 4\n2 3 4 1\n3 4 1 2\n4 1 2 3\n";
}

TEST_CASE("perm composition is postfix") {
  const Perm p = parse_perm_literal("2,3,1");  // 1->2->3->1
  const Perm q = parse_perm_literal("2,1,3");
  // apply p first, then q
  for (Elem x = 0; x < 3; ++x) CHECK((p * q)(x) == q(p(x)));
  CHECK(perm_literal(p.then(p.inverse())) == "1,2,3");
  CHECK((p * p * p).is_identity());
  CHECK_THROWS_AS(parse_perm_literal("1,1,2"), ParseError);
  CHECK_THROWS_AS(parse_perm_literal("1,x"), ParseError);
  CHECK_THROWS_AS(p * Perm::identity(4), PointCountMismatch);
}

TEST_CASE("perm group closure and canonical order") {
  const PermGroup g = PermGroup::generated_by(4, {parse_perm_literal("2,3,4,1"), parse_perm_literal("2,1,3,4")});
  CHECK(g.order() == 24);
  CHECK(g[0].is_identity());
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  CHECK(g.is_closed());
  // subgroups of Sym(3): 1 + 3 + 1 + 1
  const PermGroup s3 = PermGroup::generated_by(3, {parse_perm_literal("2,3,1"), parse_perm_literal("2,1,3")});
  CHECK(all_subgroups(s3).size() == 6);
}

TEST_CASE("Z4 file: parse, properties, round trip") {
  const LoopTable L = read_loop_string(kZ4);
  CHECK(L.order() == 4);
  CHECK(L.identity() == 0);
  CHECK(is_associative(L));
  CHECK(is_commutative(L));
  CHECK(L.left_inverse(1) == 3);
  CHECK(L.right_inverse(1) == 3);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) {
      CHECK(L.multiply(x, L.left_divide(x, y)) == y);
      CHECK(L.multiply(L.right_divide(y, x), x) == y);
    }
  CHECK(read_loop_string(loop_to_string(L, {"again"})) == L);
  CHECK(L == catalog::cyclic(4));
}

TEST_CASE("malformed files are diagnosed with a location") {
  CHECK_THROWS_AS(read_loop_string("3\n1 2 3\n2 3 1\n"), RaggedInput);
  CHECK_THROWS_AS(read_loop_string("2\n1 2\n2 x\n"), ParseError);
  CHECK_THROWS_AS(read_loop_string("2\n1 2\n2 3\n"), InputError);
  try {
    read_loop_string("3\n1 2 3\n2 3 1\n3 1 1\n");
    FAIL("expected NotLatinSquare");
  } catch (const NotLatinSquare& e) {
    CHECK(e.axis() == NotLatinSquare::Axis::row);
    CHECK(e.line() == 2);
  }
  // Latin square without identity
  CHECK_THROWS_AS(read_loop_string("3\n1 3 2\n3 2 1\n2 1 3\n"), NoIdentity);
}

TEST_CASE("identity need not be the first element") {
  // Z2 with identity labelled 2
  const LoopTable L = read_loop_string("2\n2 1\n1 2\n");
  CHECK(L.identity() == 1);
  CHECK(L.left_inverse(0) == 0);
}

TEST_CASE("stream with separators") {
  std::istringstream in("1\n1\n---\n2\n1 2\n2 1\n");
  const auto loops = read_loop_stream(in);
  REQUIRE(loops.size() == 2);
  CHECK(loops[1].order() == 2);
}

TEST_CASE("catalog groups are associative and their nuclei are full") {
  for (const auto& [name, L] : catalog::group_suite()) {
    CAPTURE(name);
    CHECK(is_associative(L));
    const NucleiReport r = nuclei_report(L);
    CHECK(r.nucleus == ElementSet::full(L.order()));
    CHECK(oracle::nucleus(oracle::rows_of(L)).size() == L.order());
  }
  CHECK(catalog::quaternion().order() == 8);
  CHECK_FALSE(is_commutative(catalog::quaternion()));
  CHECK(center(catalog::quaternion()).size() == 2);
  CHECK(center(catalog::symmetric3()).size() == 1);
  CHECK(center(catalog::dihedral4()).size() == 2);
}

TEST_CASE("nuclei of a nonassociative loop agree with the brute-force oracle") {
  // smallest nonassociative loop family: order 5
  const LoopTable L = read_loop_string("5\n1 2 3 4 5\n2 1 4 5 3\n3 5 1 2 4\n4 3 5 1 2\n5 4 2 3 1\n");
  CHECK_FALSE(is_associative(L));
  const auto expect = oracle::nucleus(oracle::rows_of(L));
  const NucleiReport r = nuclei_report(L);
  std::vector<int> got(r.nucleus.members().begin(), r.nucleus.members().end());
  CHECK(got == expect);
  CHECK(r.nucleus == r.n_lambda.intersect(r.n_rho).intersect(r.n_mu));
  CHECK(r.center == r.nucleus.intersect(r.centrum));
  CHECK(is_closed_subset(L, r.nucleus));
}
