#ifndef OSBORN_FILTER_HPP
#define OSBORN_FILTER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "osborn/enumerator.hpp"
#include "osborn/report.hpp"

namespace osborn {

/// Evaluates one named predicate.  The holomorph filters run the direct
/// Osborn scan on every (nontrivial) subgroup of AUM(L) and may throw
/// BudgetExceeded.
bool passes_filter(const LoopTable& L, LoopFilter f, std::size_t budget = 512);

struct FilterTally {
  std::string label;  // filter name, or "all" for the conjunction
  std::size_t count = 0;
  std::optional<LoopTable> first;
  std::size_t first_index = 0;  // 0-based position in enumeration order
};

struct FilterSummary {
  std::size_t order = 0;
  bool normalized = true;
  /// Tables examined; equals the full count unless a limit stopped early.
  std::size_t examined = 0;
  bool exhaustive = true;
  /// One tally per filter, then the conjunction when there are several.
  std::vector<FilterTally> tallies;
  /// Tables passing every filter, in enumeration order, capped by the limit.
  std::vector<LoopTable> matches;
};

/// Counts every filter (and their conjunction) over the spec's tables and
/// records the first witness of each.  Witnesses are written out, read back
/// and re-checked before being returned.
FilterSummary filter_count(const EnumSpec& spec, unsigned jobs = 1, std::size_t budget = 512);

Json to_json(const FilterSummary& s);

}  // namespace osborn

#endif  // OSBORN_FILTER_HPP
