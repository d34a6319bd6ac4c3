#include "osborn/nuclei.hpp"

#include <stdexcept>

namespace osborn {

namespace {

template <typename Pred>
ElementSet scan(const LoopTable& L, Pred associates) {
  const auto n = static_cast<Elem>(L.order());
  std::vector<Elem> members;
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    for (Elem y = 0; y < n && ok; ++y)
      for (Elem z = 0; z < n && ok; ++z) ok = associates(a, y, z);
    if (ok) members.push_back(a);
  }
  return ElementSet(L.order(), std::move(members));
}

}  // namespace

ElementSet left_nucleus(const LoopTable& L) {
  return scan(L, [&](Elem a, Elem y, Elem z) {
    return L.multiply(a, L.multiply(y, z)) == L.multiply(L.multiply(a, y), z);
  });
}

ElementSet right_nucleus(const LoopTable& L) {
  return scan(L, [&](Elem a, Elem y, Elem z) {
    return L.multiply(L.multiply(z, y), a) == L.multiply(z, L.multiply(y, a));
  });
}

ElementSet middle_nucleus(const LoopTable& L) {
  return scan(L, [&](Elem a, Elem y, Elem z) {
    return L.multiply(L.multiply(z, a), y) == L.multiply(z, L.multiply(a, y));
  });
}

ElementSet centrum(const LoopTable& L) {
  const auto n = static_cast<Elem>(L.order());
  std::vector<Elem> members;
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = L.multiply(a, x) == L.multiply(x, a);
    if (ok) members.push_back(a);
  }
  return ElementSet(L.order(), std::move(members));
}

ElementSet center(const LoopTable& L) {
  return left_nucleus(L)
      .intersect(right_nucleus(L))
      .intersect(middle_nucleus(L))
      .intersect(centrum(L));
}

bool is_closed_subset(const LoopTable& L, const ElementSet& s) {
  if (!s.contains(L.identity())) return false;
  for (Elem a : s.members())
    for (Elem b : s.members())
      if (!s.contains(L.multiply(a, b))) return false;
  return true;
}

NucleiReport nuclei_report(const LoopTable& L) {
  NucleiReport r;
  r.n_lambda = left_nucleus(L);
  r.n_rho = right_nucleus(L);
  r.n_mu = middle_nucleus(L);
  r.nucleus = r.n_lambda.intersect(r.n_rho).intersect(r.n_mu);
  r.centrum = centrum(L);
  r.center = r.nucleus.intersect(r.centrum);
  for (const ElementSet* s : {&r.n_lambda, &r.n_rho, &r.n_mu, &r.nucleus})
    if (!is_closed_subset(L, *s))
      throw std::logic_error("computed nucleus is not a subloop");
  return r;
}

}  // namespace osborn
