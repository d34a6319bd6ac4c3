#include "osborn/sweep.hpp"

#include <map>

#include "osborn/autotopy.hpp"
#include "osborn/enumerator.hpp"
#include "osborn/parallel.hpp"

namespace osborn {

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec, unsigned jobs) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = spec.min_order; n <= spec.max_order; ++n) {
    EnumSpec es;
    es.order = n;
    const auto loops = enumerate_loops(es, jobs);
    std::vector<std::vector<CorpusEntry>> slots(loops.size());
    parallel_for(loops.size(), jobs, [&](std::size_t i) {
      const LoopTable& L = loops[i];
      const std::string id = "n" + std::to_string(n) + "-" + std::to_string(i + 1);
      const PermGroup aum = automorphism_group(L);
      std::vector<PermGroup> groups;
      if (n <= spec.all_subgroups_up_to) {
        groups = all_subgroups(aum);
      } else {
        groups.push_back(PermGroup(n));
        if (aum.order() > 1) groups.push_back(aum);
      }
      for (std::size_t k = 0; k < groups.size(); ++k) {
        std::string gid = groups[k].order() == 1   ? "trivial"
                          : groups[k] == aum ? "aum"
                                             : "sub" + std::to_string(k + 1);
        slots[i].push_back({id, L, gid, groups[k]});
      }
    });
    for (auto& s : slots)
      for (auto& e : s) out.push_back(std::move(e));
  }
  return out;
}

std::vector<TheoremReport> run_sweep(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::string>& families, unsigned jobs,
                                     std::size_t budget) {
  std::vector<TheoremReport> reports(corpus.size());
  VerifierOptions opt;
  opt.holomorph_budget = budget;
  opt.jobs = 1;
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    reports[i] = full_report(corpus[i].loop, corpus[i].group, families, opt);
    reports[i].loop_id = corpus[i].loop_id;
    reports[i].group_id = corpus[i].group_id;
  });
  return reports;
}

Json sweep_json(const CorpusSpec& spec, const std::vector<TheoremReport>& reports) {
  Json j;
  Json cs;
  cs["minOrder"] = spec.min_order;
  cs["maxOrder"] = spec.max_order;
  cs["allSubgroupsUpTo"] = spec.all_subgroups_up_to;
  j["corpus"] = std::move(cs);

  // verdict -> status -> count, in first-seen verdict order
  std::vector<std::string> order;
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::size_t passed = 0, with_errors = 0, with_findings = 0;
  for (const auto& r : reports) {
    passed += r.passed();
    with_errors += !r.errors.empty();
    with_findings += !r.findings.empty();
    for (const auto& [k, s] : r.verdicts) {
      if (!counts.count(k)) order.push_back(k);
      ++counts[k][status_name(s)];
    }
  }
  Json summary;
  summary["pairs"] = reports.size();
  summary["passed"] = passed;
  summary["withErrors"] = with_errors;
  summary["withFindings"] = with_findings;
  Json verdicts = Json::object();
  for (const auto& k : order) {
    Json c;
    for (const char* s : {"holds", "fails", "skipped"}) c[s] = counts[k][s];
    verdicts[k] = std::move(c);
  }
  summary["verdicts"] = std::move(verdicts);
  j["summary"] = std::move(summary);

  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  j["reports"] = std::move(arr);
  return j;
}

}  // namespace osborn
