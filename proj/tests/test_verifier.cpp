#include "doctest.h"
#include "oracles.hpp"
#include "osborn/autotopy.hpp"
#include "osborn/catalog.hpp"
#include "osborn/enumerator.hpp"
#include "osborn/errors.hpp"
#include "osborn/replay.hpp"
#include "osborn/report.hpp"
#include "osborn/verifier.hpp"

using namespace osborn;

namespace {

const CheckResult& find(const CheckBundle& b, const std::string& name) {
  for (const auto& c : b)
    if (c.name == name) return c;
  FAIL("no check named " << name);
  return b.front();
}

Status verdict(const TheoremReport& r, const std::string& key) {
  for (const auto& [k, s] : r.verdicts)
    if (k == key) return s;
  FAIL("no verdict " << key);
  return Status::skipped;
}

}  // namespace

TEST_CASE("groups are Osborn and their holomorphs too") {
  for (const auto& [name, L] : catalog::group_suite()) {
    CAPTURE(name);
    const CheckBundle b = osborn_check(L, OsbornVariant::all);
    REQUIRE(b.size() == 4);
    for (const auto& c : b) CHECK(c.holds());
    if (L.order() > 6) continue;
    const Verifier v(L, automorphism_group(L));
    CHECK(v.holomorph_osborn_direct().holds());
    CHECK(v.eq4().holds());
    CHECK(v.cor32().holds());
    CHECK(find(v.thm34(), "thm34").holds());
  }
}

TEST_CASE("the three Osborn forms agree on every loop of order <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    EnumSpec s;
    s.order = n;
    for (const auto& L : enumerate_loops(s, 4)) {
      const CheckBundle b = osborn_check(L, OsbornVariant::all);
      CHECK(b[0].status == b[1].status);
      CHECK(b[0].status == b[2].status);
      CHECK(b[3].holds());
      if (n <= 5) CHECK(b[0].holds() == oracle::osborn(oracle::rows_of(L)));
    }
  }
}

TEST_CASE("with trivial A, eq4 reduces to the second Osborn form") {
  EnumSpec s;
  s.order = 5;
  for (const auto& L : enumerate_loops(s)) {
    const Verifier v(L, PermGroup(5));
    const bool eq2 = osborn_check(L, OsbornVariant::eq2)[0].holds();
    CHECK(v.eq4().holds() == eq2);
    CHECK(v.holomorph_osborn_direct().holds() == eq2);
  }
}

TEST_CASE("failure witnesses replay through multiply and left_divide") {
  EnumSpec s;
  s.order = 5;
  std::size_t replayed = 0;
  for (const auto& L : enumerate_loops(s)) {
    for (const auto& A : all_subgroups(automorphism_group(L))) {
      const TheoremReport r = full_report(L, A);
      for (const auto& c : r.checks) {
        if (!c.fails()) continue;
        REQUIRE(c.witness.has_value());
        CHECK_MESSAGE(replay_witness(L, A, *c.witness), c.name);
        ++replayed;
      }
    }
  }
  CHECK(replayed > 0);
}

TEST_CASE("a non-Osborn loop reports a concrete witness") {
  EnumSpec s;
  s.order = 5;
  s.filters = {};
  const auto loops = enumerate_loops(s);
  const auto it = std::find_if(loops.begin(), loops.end(),
                               [](const LoopTable& L) { return !oracle::osborn(oracle::rows_of(L)); });
  REQUIRE(it != loops.end());
  const TheoremReport r = full_report(*it, PermGroup(5));
  CHECK_FALSE(r.passed());
  CHECK(verdict(r, "osborn") == Status::fails);
  CHECK(verdict(r, "lemma33") == Status::skipped);
  CHECK(r.errors.empty());
  const CheckResult& eq1 = r.checks.front();
  REQUIRE(eq1.witness);
  const Witness& w = *eq1.witness;
  CHECK(w.lhs != w.rhs);
  CHECK(replay_witness(*it, PermGroup(5), w));
  // a tampered witness must not replay
  Witness bad = w;
  bad.rhs = bad.lhs;
  CHECK_FALSE(replay_witness(*it, PermGroup(5), bad));
}

TEST_CASE("equivalence chain on groups with every subgroup") {
  for (std::size_t n : {3, 4, 5}) {
    const LoopTable L = catalog::cyclic(n);
    for (const auto& A : all_subgroups(automorphism_group(L))) {
      const TheoremReport r = full_report(L, A);
      // thm39 and thm310 are excluded: see the Z3 case below
      for (const auto& [k, st] : r.verdicts)
        if (k != "thm39" && k != "thm310") CHECK_MESSAGE(st == Status::holds, k);
    }
  }
}

TEST_CASE("Z3 with its full automorphism group: the thm39 equality does not hold") {
  // P, Lambda, Phi and Psi of an abelian group all equal the translation
  // group, so their intersection has order 3 while |A| = 2.
  const LoopTable L = catalog::cyclic(3);
  const Verifier v(L, automorphism_group(L));
  const RegularSets& r = v.regular();
  CHECK(intersect(intersect(r.p_set, r.lambda_set), intersect(r.phi_set, r.psi_set)).order() == 3);
  const CheckBundle b = v.thm39();
  const CheckResult& eq = find(b, "thm39.equality");
  CHECK(eq.fails());
  REQUIRE(eq.witness);
  CHECK(replay_witness(L, v.group(), *eq.witness));
}

TEST_CASE("selected families, budget and JSON stability") {
  const LoopTable L = catalog::cyclic(4);
  const PermGroup A = automorphism_group(L);
  const TheoremReport r = full_report(L, A, {"eq4", "thm34"});
  CHECK(r.passed());
  CHECK(verdict(r, "eq4") == Status::holds);
  CHECK(verdict(r, "thm34") == Status::holds);
  CHECK_THROWS_AS(full_report(L, A, {"nonsense"}), InputError);

  VerifierOptions tight;
  tight.holomorph_budget = 4;
  CHECK_THROWS_AS(Verifier(L, A, tight).holomorph_osborn_direct(), BudgetExceeded);

  VerifierOptions par;
  par.jobs = 4;
  CHECK(dump(to_json(full_report(L, A))) == dump(to_json(full_report(L, A, {}, par))));
}
