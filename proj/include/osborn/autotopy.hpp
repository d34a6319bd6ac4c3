#ifndef OSBORN_AUTOTOPY_HPP
#define OSBORN_AUTOTOPY_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osborn/loop_table.hpp"
#include "osborn/nuclei.hpp"
#include "osborn/perm_group.hpp"

namespace osborn {

/// (A, B, C) with xA * yB = (x * y)C for all x, y.
struct AutotopismTriple {
  Perm a;
  Perm b;
  Perm c;

  /// Componentwise postfix product.
  AutotopismTriple then(const AutotopismTriple& next) const {
    return {a * next.a, b * next.b, c * next.c};
  }
  AutotopismTriple inverse() const { return {a.inverse(), b.inverse(), c.inverse()}; }

  friend bool operator==(const AutotopismTriple&, const AutotopismTriple&) = default;
  friend auto operator<=>(const AutotopismTriple&, const AutotopismTriple&) = default;
};

struct SearchLimits {
  /// Largest order accepted by the n!·n autotopism search.
  std::size_t autotopism_order = 8;
  /// Largest order accepted by the automorphism backtracking search.
  std::size_t automorphism_order = 64;
  /// Largest order accepted by the Sym(n) brute-force oracles.
  std::size_t oracle_order = 5;
  unsigned jobs = 1;
};

/// First (x, y) with xA * yB != (xy)C, or nullopt when the triple is an
/// autotopism.  Throws PointCountMismatch on degree mismatch.
std::optional<std::pair<Elem, Elem>> autotopism_violation(const LoopTable& L,
                                                          const Perm& a,
                                                          const Perm& b,
                                                          const Perm& c);
bool is_autotopism(const LoopTable& L, const AutotopismTriple& t);

/// AUT(L) via the determination rule C = A R_{eB}, B = C L_{eA}^{-1}:
/// n!·n candidates (A, eB).  Sorted; closure is asserted before returning.
std::vector<AutotopismTriple> autotopism_group(const LoopTable& L,
                                               const SearchLimits& limits = {});

/// Naive route: every (A, B) in Sym(n) x Sym(n), C solved from x = e.
std::vector<AutotopismTriple> autotopism_group_oracle(const LoopTable& L,
                                                      const SearchLimits& limits = {});

/// AUM(L) by backtracking over point images with product propagation.
PermGroup automorphism_group(const LoopTable& L, const SearchLimits& limits = {});

/// Sigma(L): first components of AUT(L).
PermGroup autotopic_bijections(const std::vector<AutotopismTriple>& aut);

/// The groups of rho-, lambda- and mu-regular bijections.
struct RegularSets {
  PermGroup p_set;       // U with (I, U, U) in AUT
  PermGroup lambda_set;  // U with (U, I, U) in AUT
  PermGroup phi_set;     // U with (U, U'^{-1}, I) in AUT for some U'
  PermGroup psi_set;     // the adjoints U'
  /// (U, U') sorted by U; the triple (U, U'^{-1}, I) is an autotopism.
  std::vector<std::pair<Perm, Perm>> adjoint_pairs;

  std::optional<Perm> adjoint_of(const Perm& u) const;
  /// Inverse of the adjoint map: U with U' == v.
  std::optional<Perm> adjoint_preimage(const Perm& v) const;
};

/// Candidates R_a (rho), L_b (lambda) and (R_c, L_c) (mu) over every
/// element, each verified as an autotopism.  Any rho-regular U equals
/// R_{eU}, any lambda-regular U equals L_{eU}, and any mu-regular pair is
/// (R_{eU}, L_{eU}), so the candidate list is complete.
RegularSets regular_sets(const LoopTable& L);

/// Brute force over Sym(n) (and Sym(n) x Sym(n) for the adjoint pairs).
RegularSets regular_sets_oracle(const LoopTable& L, const SearchLimits& limits = {});

enum class IsoMap { psi, delta, phi, sigma, beta };
std::string iso_map_name(IsoMap m);

/// How a map interacts with the postfix product: covariant maps satisfy
/// f(UV) = f(U)f(V); contravariant ones f(UV) = f(V)f(U).
enum class Variance { covariant, contravariant };

/// Graph of one of the maps U -> eU (psi, delta, sigma, beta) or U -> U'
/// (phi), with its bijectivity and structure law verified.
struct NucleusIsoWitness {
  IsoMap map;
  PermGroup domain;
  /// (U, eU) for psi, delta, sigma, beta; sorted by U.
  std::vector<std::pair<Perm, Elem>> element_graph;
  /// (U, U') for phi; sorted by U.
  std::vector<std::pair<Perm, Perm>> perm_graph;
  Variance variance = Variance::covariant;
  /// Whether f(UV) = f(U)f(V) holds literally.
  bool covariant_law_holds = true;

  std::optional<Elem> element_image(const Perm& u) const;
  std::optional<Perm> perm_image(const Perm& u) const;
};

/// Evaluates the named map and asserts it is a bijection onto N_rho (psi),
/// N_lambda (delta), N_mu (sigma, beta) or Psi (phi) that respects products
/// in its variance (psi, sigma covariant; delta, beta, phi contravariant).
/// Throws IsoViolation with a witness description otherwise.
NucleusIsoWitness nucleus_iso(const LoopTable& L, const RegularSets& sets,
                              const NucleiReport& nuclei, IsoMap map);

}  // namespace osborn

#endif  // OSBORN_AUTOTOPY_HPP
