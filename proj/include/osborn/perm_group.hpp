#ifndef OSBORN_PERM_GROUP_HPP
#define OSBORN_PERM_GROUP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "osborn/perm.hpp"

namespace osborn {

/// A finite group of permutations held as its canonically sorted element
/// list (identity first, then lexicographic).
class PermGroup {
 public:
  /// Trivial group of degree n.
  explicit PermGroup(std::size_t degree = 0);

  /// Takes an already closed set; throws std::invalid_argument otherwise.
  static PermGroup from_elements(std::vector<Perm> elements,
                                 std::vector<Perm> generators = {});

  /// Smallest group containing `generators`.  Throws ClosureBoundExceeded
  /// if the group outgrows `cap` elements.
  static PermGroup generated_by(std::size_t degree, std::vector<Perm> generators,
                                std::size_t cap = 1u << 20);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& operator[](std::size_t i) const { return elements_[i]; }

  bool contains(const Perm& p) const;
  std::optional<std::size_t> index_of(const Perm& p) const;

  /// Closure under products and inverses, checked exhaustively.
  bool is_closed() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

/// Every subgroup of `g`, sorted by (order, element lists).  Intended for
/// the small automorphism groups met in corpus sweeps.
std::vector<PermGroup> all_subgroups(const PermGroup& g);

/// Elements common to both groups, as a group.
PermGroup intersect(const PermGroup& a, const PermGroup& b);

}  // namespace osborn

#endif  // OSBORN_PERM_GROUP_HPP
