#ifndef OSBORN_SWEEP_HPP
#define OSBORN_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "osborn/report.hpp"
#include "osborn/verifier.hpp"

namespace osborn {

struct CorpusEntry {
  std::string loop_id;   // "n5-17": 17th normalized loop of order 5
  LoopTable loop;
  std::string group_id;  // "trivial", "aum" or "sub<k>" in subgroup order
  PermGroup group;
};

struct CorpusSpec {
  std::size_t min_order = 1;
  std::size_t max_order = 5;
  /// Orders up to this bound pair each loop with every subgroup of its
  /// automorphism group; larger orders use only the trivial and full ones.
  std::size_t all_subgroups_up_to = 5;
};

/// Normalized loops of the requested orders, each paired with subgroups of
/// its automorphism group, in (order, loop index, subgroup index) order.
std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec, unsigned jobs = 1);

/// full_report for every entry; entries are spread over `jobs` workers and
/// each report is computed single-threaded, so output is worker-independent.
std::vector<TheoremReport> run_sweep(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::string>& families = {},
                                     unsigned jobs = 1, std::size_t budget = 512);

/// Counts per verdict plus the reports themselves.
Json sweep_json(const CorpusSpec& spec, const std::vector<TheoremReport>& reports);

}  // namespace osborn

#endif  // OSBORN_SWEEP_HPP
