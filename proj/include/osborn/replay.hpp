#ifndef OSBORN_REPLAY_HPP
#define OSBORN_REPLAY_HPP

#include "osborn/loop_table.hpp"
#include "osborn/perm_group.hpp"
#include "osborn/verifier.hpp"

namespace osborn {

/// Re-evaluates a recorded witness using only L.multiply and L.left_divide
/// (right division and inverses are found by search; holomorph products
/// are formed from the pair definition over L and A).  True when the
/// violation reproduces with the recorded sides.
bool replay_witness(const LoopTable& L, const PermGroup& A, const Witness& w);

}  // namespace osborn

#endif  // OSBORN_REPLAY_HPP
