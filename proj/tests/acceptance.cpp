// Acceptance suite: one PASS/FAIL line per criterion, thresholds pinned
// below.  Exit status is nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "osborn/autotopy.hpp"
#include "osborn/catalog.hpp"
#include "osborn/enumerator.hpp"
#include "osborn/holomorph.hpp"
#include "osborn/nuclei.hpp"
#include "osborn/replay.hpp"
#include "osborn/report.hpp"
#include "osborn/sweep.hpp"
#include "osborn/verifier.hpp"

using namespace osborn;

namespace {

constexpr double kGroupSuiteSeconds = 5.0;
constexpr double kSweepSeconds = 600.0;       // criteria 2-4: "minutes"
constexpr double kOrderSixSeconds = 300.0;    // criterion 7: "minutes"
constexpr std::size_t kMaxOrder = 5;          // corpus orders 1..5
constexpr std::size_t kAllSubgroupsUpTo = 5;  // superset of the required pairs
constexpr unsigned kWorkers = 4;              // k > 1 for criterion 10

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first reason
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("criterion %2d: %s  %s -- %s\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

Status verdict(const TheoremReport& r, const std::string& key) {
  for (const auto& [k, s] : r.verdicts)
    if (k == key) return s;
  return Status::skipped;
}

std::string pair_name(const CorpusEntry& e) { return e.loop_id + "/" + e.group_id; }

oracle::Map to_map(const Perm& p) { return {p.image().begin(), p.image().end()}; }

std::set<oracle::Map> to_maps(const PermGroup& g) {
  std::set<oracle::Map> out;
  for (const auto& p : g.elements()) out.insert(to_map(p));
  return out;
}

std::vector<LoopTable> loops_up_to(std::size_t n) {
  std::vector<LoopTable> out;
  for (std::size_t k = 1; k <= n; ++k) {
    EnumSpec s;
    s.order = k;
    for (auto& L : enumerate_loops(s, kWorkers)) out.push_back(std::move(L));
  }
  return out;
}

}  // namespace

int main() {
  // 1. group sanity suite
  {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t groups = 0;
    for (const auto& [name, L] : catalog::group_suite()) {
      ++groups;
      for (const auto& c : osborn_check(L, OsbornVariant::all))
        if (!c.holds()) o.fail(name + ": " + c.name + " fails");
      if (!(nuclei_report(L).nucleus == ElementSet::full(L.order()))) o.fail(name + ": nucleus not full");
      const PermGroup aum = automorphism_group(L);
      VerifierOptions opt;
      opt.holomorph_budget = 4096;
      if (!Verifier(L, aum, opt).holomorph_osborn_direct().holds())
        o.fail(name + ": holomorph of full AUM is not Osborn");
    }
    const double s = since(t0);
    if (s >= kGroupSuiteSeconds) o.fail("took " + std::to_string(s) + " s");
    if (o.pass) o.detail = std::to_string(groups) + " groups in " + std::to_string(s) + " s";
    report(1, "group sanity suite", o);
  }

  // corpus shared by criteria 2-4, 8-10
  const auto t_sweep = Clock::now();
  const CorpusSpec spec{1, kMaxOrder, kAllSubgroupsUpTo};
  const auto corpus = build_corpus(spec, kWorkers);
  const auto reports = run_sweep(corpus, {}, kWorkers);
  const double sweep_s = since(t_sweep);
  const std::string pairs = std::to_string(corpus.size()) + " (L, A) pairs";

  // 2. eq4 <=> direct <=> cor32
  {
    Outcome o;
    std::size_t h = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& r = reports[i];
      const Status d = verdict(r, "holomorph-osborn");
      h += d == Status::holds;
      if (d == Status::skipped) o.fail(pair_name(corpus[i]) + ": direct check skipped");
      if (verdict(r, "eq4") != d || verdict(r, "cor32") != d) o.fail(pair_name(corpus[i]) + ": disagreement");
    }
    if (sweep_s >= kSweepSeconds) o.fail("sweep took " + std::to_string(sweep_s) + " s");
    if (o.pass)
      o.detail = pairs + ", " + std::to_string(h) + " H-Osborn, full agreement, " + std::to_string(sweep_s) + " s";
    report(2, "eq4 / direct / cor32 equivalence", o);
  }

  // 3. thm34 conjunction <=> direct
  {
    Outcome o;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if (verdict(reports[i], "thm34") != verdict(reports[i], "holomorph-osborn"))
        o.fail(pair_name(corpus[i]) + ": thm34 disagrees with the direct check");
    if (o.pass) o.detail = pairs + ", full agreement";
    report(3, "thm34 equivalence", o);
  }

  // 4. consequences where the holomorph is Osborn
  {
    Outcome o;
    std::size_t hyp = 0, broken = 0;
    std::map<std::string, std::size_t> failing;
    std::string first;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& r = reports[i];
      for (const auto& c : r.checks)
        if (!c.mismatches.empty() && c.name.rfind("diagram.", 0) != 0)
          o.fail(pair_name(corpus[i]) + ": domain mismatch outside the diagram suite in " + c.name);
      if (verdict(r, "holomorph-osborn") != Status::holds) continue;
      ++hyp;
      bool bad = false;
      for (const auto& c : r.checks) {
        const bool consequence = c.name.rfind("osborn.", 0) != 0 && c.name.rfind("holomorph.", 0) != 0 &&
                                 c.name != "eq4" && c.name != "cor32" && c.name.rfind("thm34", 0) != 0;
        if (!consequence) continue;
        if (c.status != Status::holds) {
          bad = true;
          ++failing[c.name];
          if (first.empty())
            first = pair_name(corpus[i]) + " " + c.name + (c.witness ? ": " + describe(*c.witness) : "");
        }
      }
      broken += bad;
    }
    if (broken) {
      std::string names;
      for (const auto& [k, v] : failing) names += (names.empty() ? "" : ", ") + k + " x" + std::to_string(v);
      o.fail(std::to_string(broken) + " of " + std::to_string(hyp) + " H-Osborn pairs break a consequence (" +
             names + "); first: " + first);
    }
    if (o.pass) o.detail = std::to_string(hyp) + " H-Osborn pairs, all consequences hold";
    report(4, "consequence sweep", o);
  }

  // 5. regular sets against the Sym(n) x Sym(n) oracle; nucleus maps
  {
    Outcome o;
    const auto loops = loops_up_to(5);
    for (std::size_t i = 0; i < loops.size(); ++i) {
      const LoopTable& L = loops[i];
      const std::string id = "loop " + std::to_string(i + 1) + " of order " + std::to_string(L.order());
      const RegularSets r = regular_sets(L);
      const oracle::Regular ref = oracle::regular(oracle::rows_of(L));
      if (to_maps(r.p_set) != ref.p || to_maps(r.lambda_set) != ref.lambda || to_maps(r.phi_set) != ref.phi ||
          to_maps(r.psi_set) != ref.psi)
        o.fail(id + ": regular sets differ from the oracle");
      const NucleiReport nr = nuclei_report(L);
      for (IsoMap m : {IsoMap::psi, IsoMap::delta, IsoMap::sigma, IsoMap::beta, IsoMap::phi}) {
        try {
          nucleus_iso(L, r, nr, m);
        } catch (const std::exception& e) {
          o.fail(id + ": " + iso_map_name(m) + ": " + e.what());
        }
      }
    }
    if (o.pass) o.detail = std::to_string(loops.size()) + " loops of order <= 5, exact";
    report(5, "regular-set oracle equivalence", o);
  }

  // 6. autotopism search against the double-permutation oracle
  {
    Outcome o;
    const auto loops = loops_up_to(4);
    for (std::size_t i = 0; i < loops.size(); ++i) {
      std::set<std::vector<oracle::Map>> got;
      for (const auto& t : autotopism_group(loops[i])) got.insert({to_map(t.a), to_map(t.b), to_map(t.c)});
      if (got != oracle::autotopisms(oracle::rows_of(loops[i])))
        o.fail("loop " + std::to_string(i + 1) + " of order " + std::to_string(loops[i].order()));
    }
    if (o.pass) o.detail = std::to_string(loops.size()) + " loops of order <= 4, exact";
    report(6, "autotopism search soundness", o);
  }

  // 7. enumeration counts
  {
    Outcome o;
    const std::size_t expected[] = {1, 1, 1, 4, 56, 9408};
    std::string counts;
    double six = 0;
    for (int n = 1; n <= 6; ++n) {
      const auto t0 = Clock::now();
      EnumSpec s;
      s.order = n;
      const std::size_t got = enumerate_loops(s, kWorkers).size();
      if (n == 6) six = since(t0);
      const std::size_t ref = oracle::count_normalized(n);
      counts += (n > 1 ? "," : "") + std::to_string(got);
      if (got != expected[n - 1] || ref != expected[n - 1])
        o.fail("order " + std::to_string(n) + ": " + std::to_string(got) + " enumerated, " + std::to_string(ref) +
               " by the oracle");
    }
    if (six >= kOrderSixSeconds) o.fail("order 6 took " + std::to_string(six) + " s");
    if (o.pass) o.detail = "counts " + counts + ", order 6 in " + std::to_string(six) + " s";
    report(7, "enumeration counts", o);
  }

  // 8. holomorph identities
  {
    Outcome o;
    for (const auto& e : corpus) {
      const HolomorphLoop H = build_holomorph(e.loop, e.group);
      if (H.table().order() != e.group.order() * e.loop.order()) o.fail(pair_name(e) + ": |H| != |A||L|");
      if (e.group.order() == 1 && !loops_isomorphic(H.table(), e.loop))
        o.fail(pair_name(e) + ": trivial holomorph not isomorphic to L");
    }
    std::size_t groups = 0;
    for (const auto& [name, L] : catalog::group_suite()) {
      ++groups;
      if (!is_associative(build_holomorph(L, automorphism_group(L)).table()))
        o.fail(name + ": holomorph not associative");
    }
    if (o.pass) o.detail = pairs + " and " + std::to_string(groups) + " group holomorphs";
    report(8, "holomorph identities", o);
  }

  // 9. witness replay
  {
    Outcome o;
    std::size_t replayed = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (const auto& c : reports[i].checks) {
        if (!c.fails()) continue;
        if (!c.witness) {
          o.fail(pair_name(corpus[i]) + ": " + c.name + " fails without a witness");
          continue;
        }
        ++replayed;
        if (!replay_witness(corpus[i].loop, corpus[i].group, *c.witness))
          o.fail(pair_name(corpus[i]) + ": " + c.name + " witness does not replay");
      }
    if (o.pass) o.detail = std::to_string(replayed) + " witnesses replayed";
    report(9, "witness replay", o);
  }

  // 10. determinism across worker counts
  {
    Outcome o;
    const std::string one = dump(sweep_json(spec, run_sweep(build_corpus(spec, 1), {}, 1)));
    const std::string many = dump(sweep_json(spec, reports));
    if (one != many) o.fail("sweep JSON differs between 1 and " + std::to_string(kWorkers) + " workers");
    EnumSpec s;
    s.order = 6;
    if (enumerate_loops(s, 1) != enumerate_loops(s, kWorkers)) o.fail("order-6 enumeration differs");
    if (o.pass) o.detail = std::to_string(one.size()) + " bytes identical, order-6 enumeration identical";
    report(10, "determinism", o);
  }

  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
