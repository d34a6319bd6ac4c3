#ifndef OSBORN_CATALOG_HPP
#define OSBORN_CATALOG_HPP

#include <string>
#include <vector>

#include "osborn/loop_table.hpp"

namespace osborn::catalog {

LoopTable cyclic(std::size_t n);
LoopTable klein_four();
/// Sym(3) acting on three points, elements in canonical Perm order.
LoopTable symmetric3();
/// Symmetries of the square (order 8).
LoopTable dihedral4();
/// Quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
LoopTable quaternion();

/// Cayley table of a closed set of permutations under the postfix product.
LoopTable from_permutation_group(std::vector<Perm> elements);

struct NamedLoop {
  std::string name;
  LoopTable table;
};

/// Z_2..Z_8, Klein four, S_3, D_4 and Q_8.
std::vector<NamedLoop> group_suite();

}  // namespace osborn::catalog

#endif  // OSBORN_CATALOG_HPP
