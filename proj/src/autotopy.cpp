#include "osborn/autotopy.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "osborn/errors.hpp"
#include "osborn/parallel.hpp"

namespace osborn {

std::optional<std::pair<Elem, Elem>> autotopism_violation(const LoopTable& L,
                                                          const Perm& a,
                                                          const Perm& b,
                                                          const Perm& c) {
  const std::size_t n = L.order();
  if (a.size() != n || b.size() != n || c.size() != n)
    throw PointCountMismatch("triple degree does not match loop order");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (L.multiply(a(x), b(y)) != c(L.multiply(x, y))) return std::pair{x, y};
  return std::nullopt;
}

bool is_autotopism(const LoopTable& L, const AutotopismTriple& t) {
  return !autotopism_violation(L, t.a, t.b, t.c).has_value();
}

namespace {

// Calls f on every permutation of {0..n-1} whose first image is `head`.
template <typename F>
void for_each_perm_with_head(std::size_t n, Elem head, F&& f) {
  std::vector<Elem> image(n);
  image[0] = head;
  std::size_t k = 1;
  for (Elem v = 0; v < n; ++v)
    if (v != head) image[k++] = v;
  do {
    f(image);
  } while (std::next_permutation(image.begin() + 1, image.end()));
}

template <typename F>
void for_each_perm(std::size_t n, F&& f) {
  std::vector<Elem> image(n);
  std::iota(image.begin(), image.end(), Elem{0});
  do {
    f(image);
  } while (std::next_permutation(image.begin(), image.end()));
}

// Asserts that a sorted set of triples is a group: pick a generating subset
// greedily, then check the set is stable under right multiplication by each
// generator and has exactly the size of the generated group.
void assert_triple_group(const std::vector<AutotopismTriple>& sorted) {
  auto contains = [&](const AutotopismTriple& t) {
    return std::binary_search(sorted.begin(), sorted.end(), t);
  };
  if (sorted.empty()) throw std::logic_error("autotopism set is empty");
  const std::size_t n = sorted.front().a.size();
  const AutotopismTriple id{Perm::identity(n), Perm::identity(n), Perm::identity(n)};
  if (!contains(id)) throw std::logic_error("autotopism set lacks identity");

  std::vector<AutotopismTriple> gens;
  std::set<AutotopismTriple> generated{id};
  for (const auto& t : sorted) {
    if (generated.count(t)) continue;
    gens.push_back(t);
    std::vector<AutotopismTriple> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<AutotopismTriple> next;
      for (const auto& p : frontier)
        for (const auto& g : gens) {
          auto q = p.then(g);
          if (!contains(q)) throw std::logic_error("autotopism set not closed");
          if (generated.insert(q).second) next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
  }
  if (generated.size() != sorted.size())
    throw std::logic_error("autotopism set is not a group");
  for (const auto& g : gens)
    if (!contains(g.inverse())) throw std::logic_error("autotopism set lacks inverse");
}

}  // namespace

std::vector<AutotopismTriple> autotopism_group(const LoopTable& L,
                                               const SearchLimits& limits) {
  const std::size_t n = L.order();
  if (n > limits.autotopism_order)
    throw SearchBoundExceeded(n, limits.autotopism_order);
  const Elem e = L.identity();

  std::vector<std::vector<AutotopismTriple>> slots(n);
  parallel_for(n, limits.jobs, [&](std::size_t head) {
    std::vector<Elem> c_img(n), b_img(n);
    for_each_perm_with_head(n, static_cast<Elem>(head), [&](const std::vector<Elem>& a_img) {
      const Elem ea = a_img[e];
      for (Elem b0 = 0; b0 < n; ++b0) {
        // y = e gives xC = xA * eB; x = e gives yB = eA \ yC.
        for (Elem x = 0; x < n; ++x) c_img[x] = L.multiply(a_img[x], b0);
        for (Elem y = 0; y < n; ++y) b_img[y] = L.left_divide(ea, c_img[y]);
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
          for (Elem y = 0; y < n && ok; ++y)
            ok = L.multiply(a_img[x], b_img[y]) == c_img[L.multiply(x, y)];
        if (ok) slots[head].push_back({Perm(a_img), Perm(b_img), Perm(c_img)});
      }
    });
  });

  std::vector<AutotopismTriple> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  for (const auto& t : out) {
    // Determination soundness, both substitutions.
    if (t.c != t.a * L.right_translation(t.b(e)) ||
        t.c != t.b * L.left_translation(t.a(e)))
      throw std::logic_error("autotopism violates determination rule");
  }
  assert_triple_group(out);
  return out;
}

std::vector<AutotopismTriple> autotopism_group_oracle(const LoopTable& L,
                                                      const SearchLimits& limits) {
  const std::size_t n = L.order();
  if (n > limits.oracle_order) throw SearchBoundExceeded(n, limits.oracle_order);
  const Elem e = L.identity();
  std::vector<Perm> sym;
  for_each_perm(n, [&](const std::vector<Elem>& img) { sym.emplace_back(img); });
  std::vector<AutotopismTriple> out;
  for (const auto& a : sym)
    for (const auto& b : sym) {
      Perm c = b * L.left_translation(a(e));
      if (!autotopism_violation(L, a, b, c)) out.push_back({a, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup automorphism_group(const LoopTable& L, const SearchLimits& limits) {
  if (L.order() > limits.automorphism_order)
    throw SearchBoundExceeded(L.order(), limits.automorphism_order);
  std::vector<Perm> found;
  for_each_isomorphism(L, L, [&](const Perm& f) {
    found.push_back(f);
    return true;
  });
  return PermGroup::from_elements(std::move(found));
}

PermGroup autotopic_bijections(const std::vector<AutotopismTriple>& aut) {
  std::vector<Perm> firsts;
  for (const auto& t : aut) firsts.push_back(t.a);
  return PermGroup::from_elements(std::move(firsts));
}

std::optional<Perm> RegularSets::adjoint_of(const Perm& u) const {
  auto it = std::lower_bound(adjoint_pairs.begin(), adjoint_pairs.end(), u,
                             [](const auto& pr, const Perm& key) { return pr.first < key; });
  if (it == adjoint_pairs.end() || it->first != u) return std::nullopt;
  return it->second;
}

std::optional<Perm> RegularSets::adjoint_preimage(const Perm& v) const {
  for (const auto& [u, adj] : adjoint_pairs)
    if (adj == v) return u;
  return std::nullopt;
}

namespace {

RegularSets assemble(std::vector<Perm> p, std::vector<Perm> lambda,
                     std::vector<std::pair<Perm, Perm>> pairs) {
  RegularSets r;
  std::sort(pairs.begin(), pairs.end());
  std::vector<Perm> phi, psi;
  for (const auto& [u, v] : pairs) {
    phi.push_back(u);
    psi.push_back(v);
  }
  r.p_set = PermGroup::from_elements(std::move(p));
  r.lambda_set = PermGroup::from_elements(std::move(lambda));
  r.phi_set = PermGroup::from_elements(std::move(phi));
  r.psi_set = PermGroup::from_elements(std::move(psi));
  if (r.phi_set.order() != pairs.size() || r.psi_set.order() != pairs.size())
    throw std::logic_error("adjoint map is not a bijection");
  r.adjoint_pairs = std::move(pairs);
  return r;
}

}  // namespace

RegularSets regular_sets(const LoopTable& L) {
  const auto n = static_cast<Elem>(L.order());
  const Perm id = Perm::identity(n);
  std::vector<Perm> p, lambda;
  std::vector<std::pair<Perm, Perm>> pairs;
  for (Elem a = 0; a < n; ++a) {
    Perm ra = L.right_translation(a);
    Perm la = L.left_translation(a);
    if (!autotopism_violation(L, id, ra, ra)) p.push_back(ra);
    if (!autotopism_violation(L, la, id, la)) lambda.push_back(la);
    if (!autotopism_violation(L, ra, la.inverse(), id)) pairs.emplace_back(ra, la);
  }
  return assemble(std::move(p), std::move(lambda), std::move(pairs));
}

RegularSets regular_sets_oracle(const LoopTable& L, const SearchLimits& limits) {
  const std::size_t n = L.order();
  if (n > limits.oracle_order) throw SearchBoundExceeded(n, limits.oracle_order);
  const Perm id = Perm::identity(n);
  std::vector<Perm> sym;
  for_each_perm(n, [&](const std::vector<Elem>& img) { sym.emplace_back(img); });
  std::vector<Perm> p, lambda;
  std::vector<std::pair<Perm, Perm>> pairs;
  for (const auto& u : sym) {
    if (!autotopism_violation(L, id, u, u)) p.push_back(u);
    if (!autotopism_violation(L, u, id, u)) lambda.push_back(u);
    for (const auto& v : sym)
      if (!autotopism_violation(L, u, v, id)) pairs.emplace_back(u, v.inverse());
  }
  return assemble(std::move(p), std::move(lambda), std::move(pairs));
}

std::string iso_map_name(IsoMap m) {
  switch (m) {
    case IsoMap::psi: return "psi";
    case IsoMap::delta: return "delta";
    case IsoMap::phi: return "phi";
    case IsoMap::sigma: return "sigma";
    case IsoMap::beta: return "beta";
  }
  return "?";
}

std::optional<Elem> NucleusIsoWitness::element_image(const Perm& u) const {
  auto it = std::lower_bound(element_graph.begin(), element_graph.end(), u,
                             [](const auto& pr, const Perm& key) { return pr.first < key; });
  if (it == element_graph.end() || it->first != u) return std::nullopt;
  return it->second;
}

std::optional<Perm> NucleusIsoWitness::perm_image(const Perm& u) const {
  auto it = std::lower_bound(perm_graph.begin(), perm_graph.end(), u,
                             [](const auto& pr, const Perm& key) { return pr.first < key; });
  if (it == perm_graph.end() || it->first != u) return std::nullopt;
  return it->second;
}

NucleusIsoWitness nucleus_iso(const LoopTable& L, const RegularSets& sets,
                              const NucleiReport& nuclei, IsoMap map) {
  NucleusIsoWitness w;
  w.map = map;
  const Elem e = L.identity();
  const std::string name = iso_map_name(map);

  if (map == IsoMap::phi) {
    w.domain = sets.phi_set;
    w.variance = Variance::contravariant;
    for (const auto& u : w.domain.elements()) {
      auto adj = sets.adjoint_of(u);
      if (!adj) throw IsoViolation(name + ": " + u.cycle_string() + " has no adjoint");
      w.perm_graph.emplace_back(u, *adj);
    }
    std::vector<Perm> image;
    for (const auto& [u, v] : w.perm_graph) image.push_back(v);
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
      throw IsoViolation(name + ": adjoint map is not injective");
    if (image != sets.psi_set.elements())
      throw IsoViolation(name + ": image differs from Psi");
    for (const auto& [u, fu] : w.perm_graph)
      for (const auto& [v, fv] : w.perm_graph) {
        auto fuv = w.perm_image(u * v);
        if (!fuv) throw IsoViolation(name + ": domain not closed");
        if (*fuv != fv * fu)
          throw IsoViolation(name + ": (" + u.cycle_string() + ")(" + v.cycle_string() +
                             ") breaks the adjoint product law");
        if (*fuv != fu * fv) w.covariant_law_holds = false;
      }
    return w;
  }

  const ElementSet* target = nullptr;
  switch (map) {
    case IsoMap::psi:
      w.domain = sets.p_set;
      target = &nuclei.n_rho;
      w.variance = Variance::covariant;
      break;
    case IsoMap::delta:
      w.domain = sets.lambda_set;
      target = &nuclei.n_lambda;
      w.variance = Variance::contravariant;
      break;
    case IsoMap::sigma:
      w.domain = sets.phi_set;
      target = &nuclei.n_mu;
      w.variance = Variance::covariant;
      break;
    case IsoMap::beta:
      w.domain = sets.psi_set;
      target = &nuclei.n_mu;
      w.variance = Variance::contravariant;
      break;
    case IsoMap::phi:
      break;
  }
  for (const auto& u : w.domain.elements()) w.element_graph.emplace_back(u, u(e));
  std::vector<Elem> image;
  for (const auto& [u, x] : w.element_graph) image.push_back(x);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    throw IsoViolation(name + ": map is not injective");
  if (image != target->members())
    throw IsoViolation(name + ": image differs from the matching nucleus");
  for (const auto& [u, fu] : w.element_graph)
    for (const auto& [v, fv] : w.element_graph) {
      auto fuv = w.element_image(u * v);
      if (!fuv) throw IsoViolation(name + ": domain not closed");
      const Elem expected =
          w.variance == Variance::covariant ? L.multiply(fu, fv) : L.multiply(fv, fu);
      if (*fuv != expected)
        throw IsoViolation(name + ": (" + u.cycle_string() + ")(" + v.cycle_string() +
                           ") breaks the product law");
      if (*fuv != L.multiply(fu, fv)) w.covariant_law_holds = false;
    }
  return w;
}

}  // namespace osborn
