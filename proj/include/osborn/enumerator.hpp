#ifndef OSBORN_ENUMERATOR_HPP
#define OSBORN_ENUMERATOR_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "osborn/loop_table.hpp"

namespace osborn {

enum class LoopFilter {
  osborn,
  nonassociative,
  nontrivial_aum,
  holomorph_osborn_all_subgroups,
  holomorph_osborn_some_subgroup,
};

std::string filter_name(LoopFilter f);
/// Throws InputError on unknown names.
LoopFilter parse_filter(const std::string& name);

struct EnumSpec {
  std::size_t order = 1;
  /// Identity fixed at 0.  When false, every identity position is emitted.
  bool normalized = true;
  std::vector<LoopFilter> filters;
  std::optional<std::size_t> limit;
};

/// Largest order accepted without a limit, and with one.
inline constexpr std::size_t kFullSweepBound = 6;
inline constexpr std::size_t kLimitedSweepBound = 8;

/// Throws BoundExceeded if the spec is outside the sweep bounds.
void check_enum_bounds(const EnumSpec& spec);

/// Streams every loop of the given order with identity 0 (equivalently,
/// every reduced Latin square) in lexicographic order of the row-major
/// table.  Return false from `visit` to stop.
void enumerate_normalized(std::size_t order,
                          const std::function<bool(const LoopTable&)>& visit);

/// All tables emitted by `spec` (filters ignored), in canonical order.  The
/// search is split on the second row across `jobs` workers and merged back
/// into sequential order.
std::vector<LoopTable> enumerate_loops(const EnumSpec& spec, unsigned jobs = 1);

}  // namespace osborn

#endif  // OSBORN_ENUMERATOR_HPP
