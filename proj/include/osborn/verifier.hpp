#ifndef OSBORN_VERIFIER_HPP
#define OSBORN_VERIFIER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "osborn/autotopy.hpp"
#include "osborn/holomorph.hpp"
#include "osborn/identities.hpp"
#include "osborn/loop_table.hpp"
#include "osborn/nuclei.hpp"
#include "osborn/perm_group.hpp"

namespace osborn {

/// Which derived element a witness subject stands for.
enum class SubjectForm { none, c, d, d_forward };
/// "x_alpha*x_rho", "x_lambda*x_phi_inv", "x_lambda*x_phi".
std::string subject_form_name(SubjectForm f);

/// One concrete violation.  Only the coordinates the identity uses are set;
/// group coordinates are indices into the canonical order of A.
struct Witness {
  Identity identity = Identity::osborn_eq1;
  /// Coordinates are flat indices of the A-holomorph rather than of L.
  bool in_holomorph = false;
  std::optional<Elem> x, y, z;
  std::optional<std::size_t> alpha, phi;
  std::optional<Elem> subject;
  SubjectForm subject_form = SubjectForm::none;
  std::optional<Perm> perm;
  Elem lhs = 0;
  Elem rhs = 0;
  std::string detail;

  Point point() const;
};

struct DomainMismatch {
  std::string equality;
  std::string map;
  std::string point;  // e.g. "L_3", 1-based
};

enum class Status { holds, fails, skipped };
std::string status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::holds;
  std::optional<Witness> witness;
  std::uint64_t scanned = 0;
  /// Skip reason, or a finding worth reporting next to the verdict.
  std::string note;
  std::vector<DomainMismatch> mismatches;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }
};

using CheckBundle = std::vector<CheckResult>;

/// Osborn identity selector for osborn_check.
enum class OsbornVariant { eq1, eq2, eq3, all };

/// Scans x(yz*x) against the chosen right-hand side over all (x, y, z).
/// `all` yields the three verdicts followed by an "osborn.agree" entry.
CheckBundle osborn_check(const LoopTable& L, OsbornVariant v, unsigned jobs = 1);

struct VerifierOptions {
  /// Largest |H| accepted by the direct O(|H|^3) scan.
  std::size_t holomorph_budget = 512;
  unsigned jobs = 1;
};

/// Every check for one pair (L, A), A <= AUM(L).  Derived data (nuclei,
/// regular sets, the holomorph) is computed once; the H-Osborn verdict is
/// cached after the first direct scan.
class Verifier {
 public:
  Verifier(const LoopTable& L, const PermGroup& A, VerifierOptions options = {});

  const LoopTable& loop() const { return L_; }
  const PermGroup& group() const { return A_; }
  const NucleiReport& nuclei() const { return nuclei_; }
  const RegularSets& regular() const { return sets_; }

  /// Throws BudgetExceeded when |A| * n exceeds the budget.
  CheckResult holomorph_osborn_direct() const;
  CheckResult eq4() const;
  CheckResult cor32() const;
  CheckBundle lemma33() const;
  /// (i)-(iv) then the conjunction "thm34".
  CheckBundle thm34() const;
  CheckBundle lemma35() const;
  CheckBundle lemma37() const;
  CheckBundle cor38() const;
  CheckBundle thm39() const;
  CheckBundle thm310() const;
  CheckBundle diagram_suite() const;

  bool loop_is_osborn() const;
  bool holomorph_is_osborn() const;

 private:
  struct Dims {
    bool alpha = false, phi = false, y = false, z = false;
  };
  struct Member {
    std::string label;
    const PermGroup* set;
    Identity witness;
    Dims dims;  // only alpha / phi are read
    std::function<Perm(Elem, std::size_t, std::size_t)> build;
  };

  CheckResult scan(const std::string& name, Identity id, Dims d) const;
  CheckResult triple_scan(const std::string& name, Identity id, Dims d,
                          const std::function<AutotopismTriple(Elem, std::size_t,
                                                               std::size_t)>& build) const;
  CheckResult membership_scan(const std::string& name, const std::vector<Member>& items) const;
  std::optional<Witness> point_witness(Identity id, Point p, Dims d) const;
  std::optional<Witness> nucleus_witness(Elem s) const;
  std::optional<Witness> center_witness(Elem s) const;
  std::optional<std::string> hypothesis_gap() const;

  const LoopTable& L_;
  PermGroup A_;
  VerifierOptions options_;
  std::vector<Perm> inverses_;
  NucleiReport nuclei_;
  RegularSets sets_;
  mutable std::optional<bool> l_osborn_;
  mutable std::optional<CheckResult> direct_;
};

/// Check families accepted by full_report and `verify --checks`.
const std::vector<std::string>& check_families();

struct TheoremReport {
  std::string loop_id;
  std::string group_id;
  std::size_t order = 0;
  std::size_t group_order = 0;
  std::vector<CheckResult> checks;
  /// Family verdicts in check_families() order.
  std::vector<std::pair<std::string, Status>> verdicts;
  /// Broken consistency constraints (equivalences, implications).
  std::vector<std::string> errors;
  /// Non-fatal observations such as Osborn-form disagreement.
  std::vector<std::string> findings;

  /// No non-skipped check fails.
  bool passed() const;
};

/// Runs the selected families (all when empty) in dependency order and
/// asserts the consistency constraints between them.
TheoremReport full_report(const LoopTable& L, const PermGroup& A,
                          const std::vector<std::string>& families = {},
                          VerifierOptions options = {});

}  // namespace osborn

#endif  // OSBORN_VERIFIER_HPP
