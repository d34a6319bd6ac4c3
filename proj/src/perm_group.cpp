#include "osborn/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "osborn/errors.hpp"

namespace osborn {

PermGroup::PermGroup(std::size_t degree)
    : degree_(degree), elements_{Perm::identity(degree)} {}

PermGroup PermGroup::from_elements(std::vector<Perm> elements,
                                   std::vector<Perm> generators) {
  if (elements.empty()) throw std::invalid_argument("empty permutation group");
  PermGroup g(elements.front().size());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generators);
  if (!g.is_closed()) throw std::invalid_argument("permutation set is not a group");
  return g;
}

PermGroup PermGroup::generated_by(std::size_t degree, std::vector<Perm> generators,
                                  std::size_t cap) {
  std::set<Perm> found{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  for (const auto& g : generators)
    if (g.size() != degree)
      throw PointCountMismatch("generator degree differs from group degree");
  // In a finite group the closure under right multiplication by generators
  // already contains all inverses.
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        Perm q = p * g;
        if (found.insert(q).second) {
          if (found.size() > cap)
            throw ClosureBoundExceeded("generated group exceeds " +
                                       std::to_string(cap) + " elements");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  PermGroup out(degree);
  out.elements_.assign(found.begin(), found.end());
  out.generators_ = std::move(generators);
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_closed() const {
  if (elements_.empty() || !elements_.front().is_identity()) return false;
  for (const auto& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements_)
      if (!contains(a * b)) return false;
  }
  return true;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  std::vector<PermGroup> frontier{PermGroup(g.degree())};
  seen.insert(frontier.front().elements());
  while (!frontier.empty()) {
    std::vector<PermGroup> next;
    for (const auto& h : frontier) {
      out.push_back(h);
      for (const auto& x : g.elements()) {
        if (h.contains(x)) continue;
        auto gens = h.generators();
        gens.push_back(x);
        PermGroup k = PermGroup::generated_by(g.degree(), gens);
        if (seen.insert(k.elements()).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

PermGroup intersect(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return PermGroup::from_elements(std::move(common));
}

}  // namespace osborn
