#ifndef OSBORN_LOOP_TABLE_HPP
#define OSBORN_LOOP_TABLE_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "osborn/perm.hpp"

namespace osborn {

/// Sorted, duplicate-free subset of {0, ..., n-1}.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t n, std::vector<Elem> members);

  static ElementSet full(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Elem>& members() const { return members_; }
  bool contains(Elem x) const;

  ElementSet intersect(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> members_;
};

/// A finite loop stored as a validated Cayley table.
///
/// Immutable after construction.  Divisions and one-sided inverses are
/// tabulated once so every query is a lookup.
class LoopTable {
 public:
  std::size_t order() const { return n_; }
  Elem identity() const { return e_; }

  Elem multiply(Elem x, Elem y) const { return mul_[x * n_ + y]; }
  /// x \ y: the unique z with x * z == y.
  Elem left_divide(Elem x, Elem y) const { return ldiv_[x * n_ + y]; }
  /// x / y: the unique z with z * y == x.
  Elem right_divide(Elem x, Elem y) const { return rdiv_[x * n_ + y]; }
  /// x^lambda with x^lambda * x == e.
  Elem left_inverse(Elem x) const { return right_divide(e_, x); }
  /// x^rho with x * x^rho == e.
  Elem right_inverse(Elem x) const { return left_divide(x, e_); }

  /// L_x : y -> x * y.
  Perm left_translation(Elem x) const;
  /// R_x : y -> y * x.
  Perm right_translation(Elem x) const;

  /// Row-major product table.
  std::span<const Elem> cells() const { return mul_; }
  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

 private:
  friend LoopTable validate_loop(const std::vector<std::vector<Elem>>& raw);
  friend LoopTable validate_loop_cells(std::size_t n, std::vector<Elem> cells);

  std::size_t n_ = 0;
  Elem e_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> ldiv_;
  std::vector<Elem> rdiv_;
};

/// Checks the Latin property, locates the identity and builds the divisions.
/// Throws RaggedInput, NotLatinSquare or NoIdentity.
LoopTable validate_loop(const std::vector<std::vector<Elem>>& raw);
LoopTable validate_loop_cells(std::size_t n, std::vector<Elem> cells);

/// A triple (x, y, z) with (xy)z != x(yz).
using Triple = std::array<Elem, 3>;

/// Lexicographically first non-associating triple, or nullopt when the loop
/// is a group.
std::optional<Triple> first_nonassociative_triple(const LoopTable& L);
inline bool is_associative(const LoopTable& L) {
  return !first_nonassociative_triple(L).has_value();
}

bool is_commutative(const LoopTable& L);

/// Calls `visit` on every isomorphism f : a -> b (f(xy) = f(x)f(y)) in
/// lexicographic order of image sequences; stop early by returning false.
void for_each_isomorphism(const LoopTable& a, const LoopTable& b,
                          const std::function<bool(const Perm&)>& visit);

/// First isomorphism a -> b, or nullopt.  Orders must match.
std::optional<Perm> loops_isomorphic(const LoopTable& a, const LoopTable& b);

}  // namespace osborn

#endif  // OSBORN_LOOP_TABLE_HPP
