#ifndef OSBORN_HOLOMORPH_HPP
#define OSBORN_HOLOMORPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "osborn/loop_table.hpp"
#include "osborn/perm_group.hpp"

namespace osborn {

/// Group generated by automorphisms of L.  Throws NotAnAutomorphism naming
/// the first offending generator, or ClosureBoundExceeded.
PermGroup subgroup_closure(const LoopTable& L, const std::vector<Perm>& gens,
                           std::size_t cap = 1u << 16);

/// The A-holomorph on A x L with (a, x) o (b, y) = (ab, xb * y), materialised
/// as a LoopTable.  Pair (g, x) lives at flat index g * n + x, where g is the
/// position of the automorphism in the canonical order of A (identity first).
class HolomorphLoop {
 public:
  HolomorphLoop(const LoopTable& base, PermGroup group);

  const LoopTable& table() const { return table_; }
  const PermGroup& group() const { return group_; }
  std::size_t base_order() const { return n_; }

  Elem index_of(std::size_t g, Elem x) const { return static_cast<Elem>(g * n_ + x); }
  std::pair<std::size_t, Elem> pair_of(Elem h) const { return {h / n_, h % n_}; }

 private:
  std::size_t n_;
  PermGroup group_;
  LoopTable table_;
};

/// Asserts A ≤ AUM(L) (std::invalid_argument otherwise) and builds H.
HolomorphLoop build_holomorph(const LoopTable& L, const PermGroup& A);

}  // namespace osborn

#endif  // OSBORN_HOLOMORPH_HPP
