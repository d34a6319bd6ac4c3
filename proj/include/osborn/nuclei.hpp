#ifndef OSBORN_NUCLEI_HPP
#define OSBORN_NUCLEI_HPP

#include "osborn/loop_table.hpp"

namespace osborn {

/// N_lambda: x with x(yz) = (xy)z for all y, z.
ElementSet left_nucleus(const LoopTable& L);
/// N_rho: x with (zy)x = z(yx) for all y, z.
ElementSet right_nucleus(const LoopTable& L);
/// N_mu: x with (zx)y = z(xy) for all y, z.
ElementSet middle_nucleus(const LoopTable& L);
/// C: elements commuting with everything.
ElementSet centrum(const LoopTable& L);
/// Z = N ∩ C.
ElementSet center(const LoopTable& L);

struct NucleiReport {
  ElementSet n_lambda;
  ElementSet n_rho;
  ElementSet n_mu;
  ElementSet nucleus;
  ElementSet centrum;
  ElementSet center;
};

/// Computes all six sets and asserts each nucleus is a subloop containing e
/// (throws std::logic_error otherwise, which means a corrupted table).
NucleiReport nuclei_report(const LoopTable& L);

/// True when `s` contains e and is closed under multiplication.
bool is_closed_subset(const LoopTable& L, const ElementSet& s);

}  // namespace osborn

#endif  // OSBORN_NUCLEI_HPP
