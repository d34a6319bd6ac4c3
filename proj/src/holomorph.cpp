#include "osborn/holomorph.hpp"

#include <stdexcept>
#include <string>

#include "osborn/autotopy.hpp"
#include "osborn/errors.hpp"

namespace osborn {

namespace {

bool is_automorphism(const LoopTable& L, const Perm& p) {
  return p.size() == L.order() && !autotopism_violation(L, p, p, p);
}

}  // namespace

PermGroup subgroup_closure(const LoopTable& L, const std::vector<Perm>& gens,
                           std::size_t cap) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != L.order())
      throw NotAnAutomorphism(i, "generator " + std::to_string(i + 1) + " has degree " +
                                     std::to_string(gens[i].size()) + ", expected " +
                                     std::to_string(L.order()));
    if (!is_automorphism(L, gens[i]))
      throw NotAnAutomorphism(i, "generator " + std::to_string(i + 1) + " (" +
                                     perm_literal(gens[i]) + ") is not an automorphism");
  }
  return PermGroup::generated_by(L.order(), gens, cap);
}

HolomorphLoop::HolomorphLoop(const LoopTable& base, PermGroup group)
    : n_(base.order()), group_(std::move(group)) {
  const std::size_t m = group_.order();
  const std::size_t order = m * n_;
  // product index table of A under the postfix product
  std::vector<std::size_t> gmul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto idx = group_.index_of(group_[a] * group_[b]);
      if (!idx) throw std::logic_error("automorphism set is not closed");
      gmul[a * m + b] = *idx;
    }
  std::vector<Elem> cells(order * order);
  for (std::size_t a = 0; a < m; ++a)
    for (Elem x = 0; x < n_; ++x)
      for (std::size_t b = 0; b < m; ++b) {
        const Elem xb = group_[b](x);
        for (Elem y = 0; y < n_; ++y) {
          const std::size_t lhs = a * n_ + x, rhs = b * n_ + y;
          cells[lhs * order + rhs] =
              static_cast<Elem>(gmul[a * m + b] * n_ + base.multiply(xb, y));
        }
      }
  // A failure here is an implementation bug, so let it propagate loudly.
  table_ = validate_loop_cells(order, std::move(cells));
}

HolomorphLoop build_holomorph(const LoopTable& L, const PermGroup& A) {
  if (A.degree() != L.order())
    throw std::invalid_argument("automorphism group degree differs from loop order");
  for (const auto& a : A.elements())
    if (!is_automorphism(L, a))
      throw std::invalid_argument("group element " + perm_literal(a) +
                                  " is not an automorphism");
  return HolomorphLoop(L, A);
}

}  // namespace osborn
