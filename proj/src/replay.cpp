#include "osborn/replay.hpp"

#include <stdexcept>

namespace osborn {

namespace {

// Everything below multiply and left_divide is recovered by search.
struct BaseOps {
  const LoopTable& L;
  const PermGroup& A;

  Elem e() const { return L.identity(); }
  Elem mul(Elem a, Elem b) const { return L.multiply(a, b); }
  Elem ldiv(Elem a, Elem b) const { return L.left_divide(a, b); }
  Elem rdiv(Elem a, Elem b) const {
    for (Elem z = 0; z < L.order(); ++z)
      if (L.multiply(z, b) == a) return z;
    throw std::logic_error("right division has no solution");
  }
  Elem lam(Elem x) const { return rdiv(e(), x); }
  Elem rho(Elem x) const { return ldiv(x, e()); }
  Elem act(std::size_t g, Elem x) const { return A[g](x); }
  Elem act_inv(std::size_t g, Elem x) const {
    for (Elem t = 0; t < L.order(); ++t)
      if (A[g](t) == x) return t;
    throw std::logic_error("group element is not a bijection");
  }
};

// (a, x) o (b, y) = (ab, x b * y) with flat index g * n + x.
struct PairOps {
  const LoopTable& L;
  const PermGroup& A;

  std::size_t size() const { return A.order() * L.order(); }
  Elem e() const { return static_cast<Elem>(L.identity()); }  // (I, e): I is index 0
  Elem mul(Elem h, Elem k) const {
    const std::size_t n = L.order();
    const std::size_t a = h / n, b = k / n;
    const Elem x = h % n, y = k % n;
    auto ab = A.index_of(A[a] * A[b]);
    if (!ab) throw std::logic_error("automorphism set is not closed");
    return static_cast<Elem>(*ab * n + L.multiply(A[b](x), y));
  }
  Elem ldiv(Elem a, Elem b) const {
    for (Elem z = 0; z < size(); ++z)
      if (mul(a, z) == b) return z;
    throw std::logic_error("left division has no solution");
  }
  Elem rdiv(Elem a, Elem b) const {
    for (Elem z = 0; z < size(); ++z)
      if (mul(z, b) == a) return z;
    throw std::logic_error("right division has no solution");
  }
  Elem lam(Elem x) const { return rdiv(e(), x); }
  Elem rho(Elem x) const { return ldiv(x, e()); }
  Elem act(std::size_t, Elem) const { throw std::logic_error("no action on the holomorph"); }
  Elem act_inv(std::size_t, Elem) const { throw std::logic_error("no action on the holomorph"); }
};

bool in_range(const LoopTable& L, const PermGroup& A, const Witness& w) {
  const std::size_t bound = w.in_holomorph ? A.order() * L.order() : L.order();
  for (const auto& c : {w.x, w.y, w.z, w.subject})
    if (c && *c >= bound) return false;
  for (const auto& g : {w.alpha, w.phi})
    if (g && *g >= A.order()) return false;
  return true;
}

}  // namespace

bool replay_witness(const LoopTable& L, const PermGroup& A, const Witness& w) {
  if (!in_range(L, A, w)) return false;

  if (w.identity == Identity::diagram) {
    // Composite-map failures are not pointwise; rebuild the maps from the
    // table and ask for the same equality again.
    const auto cut = w.detail.find(" at ");
    if (cut == std::string::npos) return false;
    const std::string name = "diagram." + w.detail.substr(0, cut);
    Verifier v(L, A);
    for (const auto& r : v.diagram_suite())
      if (r.name == name) return r.fails();
    return false;
  }

  if (w.in_holomorph) {
    PairOps ops{L, A};
    auto [l, r] = evaluate(w.identity, ops, w.point());
    return l != r && l == w.lhs && r == w.rhs;
  }

  BaseOps ops{L, A};
  const Point p = w.point();
  if (w.subject_form != SubjectForm::none) {
    Elem s = 0;
    switch (w.subject_form) {
      case SubjectForm::c: s = ops.mul(ops.act(p.alpha, p.x), ops.rho(p.x)); break;
      case SubjectForm::d: s = ops.mul(ops.lam(p.x), ops.act_inv(p.phi, p.x)); break;
      case SubjectForm::d_forward: s = ops.mul(ops.lam(p.x), ops.act(p.phi, p.x)); break;
      case SubjectForm::none: break;
    }
    if (!w.subject || *w.subject != s) return false;
  }
  if (w.identity == Identity::perm_automorphism && !w.perm) return false;
  auto [l, r] = evaluate(w.identity, ops, p);
  return l != r && l == w.lhs && r == w.rhs;
}

}  // namespace osborn
