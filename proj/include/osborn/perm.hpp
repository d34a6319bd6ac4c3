#ifndef OSBORN_PERM_HPP
#define OSBORN_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace osborn {

/// Dense element index of a finite loop.
using Elem = std::uint32_t;

/// A bijection on {0, ..., n-1}.
///
/// Maps act on the right, as in the loop literature: the product `p * q`
/// applies `p` first and then `q`, so `(p * q)(x) == q(p(x))`.  Every triple
/// builder in the library composes through this one operator, which keeps
/// translation products such as R_a R_b L_c in the order they are written.
class Perm {
 public:
  Perm() = default;

  /// Throws std::invalid_argument if `image` is not a permutation.
  explicit Perm(std::vector<Elem> image);

  static Perm identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Elem operator()(Elem x) const { return image_[x]; }
  Elem operator[](Elem x) const { return image_[x]; }
  std::span<const Elem> image() const { return image_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Postfix product: apply *this, then `next`.
  Perm then(const Perm& next) const;

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for I.
  std::string cycle_string() const;

  friend Perm operator*(const Perm& p, const Perm& q) { return p.then(q); }
  friend bool operator==(const Perm&, const Perm&) = default;
  /// Lexicographic on image sequences; the canonical order everywhere.
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.image_ <=> b.image_;
  }

 private:
  struct Trusted {};
  Perm(std::vector<Elem> image, Trusted) : image_(std::move(image)) {}

  std::vector<Elem> image_;
};

/// True when `image` lists each of 0..n-1 exactly once.
bool is_permutation_image(std::span<const Elem> image);

/// Parses a 1-based comma separated image list such as "1,3,2".
Perm parse_perm_literal(const std::string& text);

/// Inverse of parse_perm_literal.
std::string perm_literal(const Perm& p);

}  // namespace osborn

template <>
struct std::hash<osborn::Perm> {
  std::size_t operator()(const osborn::Perm& p) const noexcept;
};

#endif  // OSBORN_PERM_HPP
