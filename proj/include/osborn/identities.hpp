#ifndef OSBORN_IDENTITIES_HPP
#define OSBORN_IDENTITIES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "osborn/perm.hpp"

namespace osborn {

/// Every pointwise equation the verifier scans.  Each one is written once,
/// below, against an abstract set of loop operations, so that scans and
/// witness replays evaluate the same formula through different back ends.
///
/// Shorthand used in the comments: xa = x alpha, xp = x phi^{-1},
/// c = xa * x^rho, d = x^lambda * xp, s = the witness subject element,
/// V(w) = (w / x) * xp and W(w) = x((x \ w) / x * xp).
enum class Identity {
  osborn_eq1,    // x(yz*x) = (x^l \ y) * zx
  osborn_eq2,    // x(yz*x) = x(yx^l * x) * zx
  osborn_eq3,    // x(yz*x) = x(yx * x^r) * zx
  eq4,           // xa(yz * xp) = xa(yx^l * x) * z xp
  cor32,         // autotopism (R_{x^l} R_x L_xa, R_xp, R_xp L_xa) at (y, z)
  lemma33_a,     // (L_x^-1 L_xa, I, L_x^-1 L_xa) at (y, z)
  lemma33_b,     // (I, R_x^-1 R_xp, L_x^-1 R_x^-1 R_xp L_x) at (y, z)
  left_c,        // (L_c, I, L_c) at (y, z)
  right_v,       // (I, V, V) at (y, z)
  conj_w,        // (I, W, W) at (y, z)
  right_d,       // (I, R_d, R_d) at (y, z)
  mu_c,          // (R_c, L_c^-1, I) at (y, z)
  mu_d,          // (R_d, L_d^-1, I) at (y, z)
  thm34_iii,     // c x = xa
  thm34_iv,      // x d = xp
  lemma35_1a,    // c(xy) = xa y
  lemma35_1b,    // x (xa)^r = c^r
  lemma35_1c,    // c x = xa
  lemma35_2a,    // (x * yx) d = x(y xp)
  lemma35_2b,    // (xp)^l x = d^l
  lemma35_3a,    // yx * d = y xp
  lemma35_3b,    // x d = xp
  lemma35_4a,    // x(y/x * xp) = (xy)/x * xp
  lemma35_4b,    // x(x^r/x * xp) = d
  perm_a,        // L_x^-1 L_xa = L_c at y
  perm_b1,       // R_x^-1 R_xp = L_x^-1 R_x^-1 R_xp L_x at y
  perm_b2,       // R_x^-1 R_xp = R_d at y
  perm_c,        // R_x^-1 R_xp = R_c at y
  elem_b,        // d = x(x^r/x * xp)
  nucleus_left,    // s(yz) = (sy)z
  nucleus_right,   // (zy)s = z(ys)
  nucleus_middle,  // (zs)y = z(sy)
  commutes,        // s y = y s
  alpha_in_p,      // (I, alpha, alpha) at (y, z)
  alpha_in_lambda, // (alpha, I, alpha) at (y, z)
  alpha_in_phi,    // (alpha, L_{e alpha}^-1, I) at (y, z)
  alpha_left_translation,     // alpha(y) = (e alpha) y
  alpha_right_translation,    // alpha(y * e alpha) = y, i.e. alpha = R^-1_{e alpha}
  perm_automorphism,          // explicit map U: U(yz) = U(y)U(z)
  diagram,                    // composite-map equality; not pointwise
};

std::string identity_name(Identity id);
std::optional<Identity> parse_identity(const std::string& name);

/// Coordinates of one instance of an identity.
struct Point {
  Elem x = 0;
  Elem y = 0;
  Elem z = 0;
  std::size_t alpha = 0;
  std::size_t phi = 0;
  Elem subject = 0;
  const Perm* perm = nullptr;
};

/// Evaluates both sides of `id` at `p`.  `Ops` provides e(), mul, ldiv,
/// rdiv, lam, rho, act(g, x) and act_inv(g, x).
template <typename Ops>
std::pair<Elem, Elem> evaluate(Identity id, const Ops& o, const Point& p) {
  const Elem x = p.x, y = p.y, z = p.z, s = p.subject;
  auto m = [&](Elem a, Elem b) { return o.mul(a, b); };
  auto xa = [&] { return o.act(p.alpha, x); };
  auto xp = [&] { return o.act_inv(p.phi, x); };
  auto c = [&] { return m(xa(), o.rho(x)); };
  auto d = [&] { return m(o.lam(x), xp()); };
  auto V = [&](Elem w) { return m(o.rdiv(w, x), xp()); };
  auto W = [&](Elem w) { return m(x, m(o.rdiv(o.ldiv(x, w), x), xp())); };

  switch (id) {
    case Identity::osborn_eq1:
      return {m(x, m(m(y, z), x)), m(o.ldiv(o.lam(x), y), m(z, x))};
    case Identity::osborn_eq2:
      return {m(x, m(m(y, z), x)), m(m(x, m(m(y, o.lam(x)), x)), m(z, x))};
    case Identity::osborn_eq3:
      return {m(x, m(m(y, z), x)), m(m(x, m(m(y, x), o.rho(x))), m(z, x))};
    case Identity::eq4:
      return {m(xa(), m(m(y, z), xp())), m(m(xa(), m(m(y, o.lam(x)), x)), m(z, xp()))};
    case Identity::cor32:
      return {m(m(xa(), m(m(y, o.lam(x)), x)), m(z, xp())), m(xa(), m(m(y, z), xp()))};
    case Identity::lemma33_a:
      return {m(m(xa(), o.ldiv(x, y)), z), m(xa(), o.ldiv(x, m(y, z)))};
    case Identity::lemma33_b:
      return {m(y, V(z)), W(m(y, z))};
    case Identity::left_c:
      return {m(m(c(), y), z), m(c(), m(y, z))};
    case Identity::right_v:
      return {m(y, V(z)), V(m(y, z))};
    case Identity::conj_w:
      return {m(y, W(z)), W(m(y, z))};
    case Identity::right_d:
      return {m(y, m(z, d())), m(m(y, z), d())};
    case Identity::mu_c:
      return {m(m(y, c()), o.ldiv(c(), z)), m(y, z)};
    case Identity::mu_d:
      return {m(m(y, d()), o.ldiv(d(), z)), m(y, z)};
    case Identity::thm34_iii:
    case Identity::lemma35_1c:
      return {m(c(), x), xa()};
    case Identity::thm34_iv:
    case Identity::lemma35_3b:
      return {m(x, d()), xp()};
    case Identity::lemma35_1a:
      return {m(c(), m(x, y)), m(xa(), y)};
    case Identity::lemma35_1b:
      return {m(x, o.rho(xa())), o.rho(c())};
    case Identity::lemma35_2a:
      return {m(m(x, m(y, x)), d()), m(x, m(y, xp()))};
    case Identity::lemma35_2b:
      return {m(o.lam(xp()), x), o.lam(d())};
    case Identity::lemma35_3a:
      return {m(m(y, x), d()), m(y, xp())};
    case Identity::lemma35_4a:
      return {m(x, m(o.rdiv(y, x), xp())), m(o.rdiv(m(x, y), x), xp())};
    case Identity::lemma35_4b:
      return {m(x, m(o.rdiv(o.rho(x), x), xp())), d()};
    case Identity::perm_a:
      return {m(xa(), o.ldiv(x, y)), m(c(), y)};
    case Identity::perm_b1:
      return {V(y), W(y)};
    case Identity::perm_b2:
      return {V(y), m(y, d())};
    case Identity::perm_c:
      return {V(y), m(y, c())};
    case Identity::elem_b:
      return {d(), m(x, m(o.rdiv(o.rho(x), x), xp()))};
    case Identity::nucleus_left:
      return {m(s, m(y, z)), m(m(s, y), z)};
    case Identity::nucleus_right:
      return {m(m(z, y), s), m(z, m(y, s))};
    case Identity::nucleus_middle:
      return {m(m(z, s), y), m(z, m(s, y))};
    case Identity::commutes:
      return {m(s, y), m(y, s)};
    case Identity::alpha_in_p:
      return {m(y, o.act(p.alpha, z)), o.act(p.alpha, m(y, z))};
    case Identity::alpha_in_lambda:
      return {m(o.act(p.alpha, y), z), o.act(p.alpha, m(y, z))};
    case Identity::alpha_in_phi:
      return {m(o.act(p.alpha, y), o.ldiv(o.act(p.alpha, o.e()), z)), m(y, z)};
    case Identity::alpha_left_translation:
      return {o.act(p.alpha, y), m(o.act(p.alpha, o.e()), y)};
    case Identity::alpha_right_translation:
      return {o.act(p.alpha, m(y, o.act(p.alpha, o.e()))), y};
    case Identity::perm_automorphism: {
      const Perm& u = *p.perm;
      return {u(m(y, z)), m(u(y), u(z))};
    }
    case Identity::diagram:
      break;
  }
  throw std::logic_error("identity has no pointwise form: " + identity_name(id));
}

}  // namespace osborn

#endif  // OSBORN_IDENTITIES_HPP
