#include "osborn/report.hpp"

#include <sstream>

namespace osborn {

namespace {

Json one(std::size_t v) { return v + 1; }

}  // namespace

Json to_json(const ElementSet& s) {
  Json out = Json::array();
  for (Elem x : s.members()) out.push_back(one(x));
  return out;
}

Json to_json(const NucleiReport& r) {
  Json j;
  j["nLambda"] = to_json(r.n_lambda);
  j["nRho"] = to_json(r.n_rho);
  j["nMu"] = to_json(r.n_mu);
  j["nucleus"] = to_json(r.nucleus);
  j["centrum"] = to_json(r.centrum);
  j["center"] = to_json(r.center);
  return j;
}

Json to_json(const Perm& p) { return perm_literal(p); }

Json to_json(const PermGroup& g) {
  Json j;
  j["order"] = g.order();
  Json els = Json::array();
  for (const auto& p : g.elements()) els.push_back(to_json(p));
  j["elements"] = std::move(els);
  return j;
}

Json to_json(const AutotopismTriple& t) {
  return Json::array({to_json(t.a), to_json(t.b), to_json(t.c)});
}

Json to_json(const RegularSets& r) {
  Json j;
  j["P"] = to_json(r.p_set);
  j["Lambda"] = to_json(r.lambda_set);
  j["Phi"] = to_json(r.phi_set);
  j["Psi"] = to_json(r.psi_set);
  Json pairs = Json::array();
  for (const auto& [u, v] : r.adjoint_pairs) pairs.push_back(Json::array({to_json(u), to_json(v)}));
  j["adjoints"] = std::move(pairs);
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["identity"] = identity_name(w.identity);
  j["space"] = w.in_holomorph ? "holomorph" : "loop";
  if (w.x) j["x"] = one(*w.x);
  if (w.y) j["y"] = one(*w.y);
  if (w.z) j["z"] = one(*w.z);
  if (w.alpha) j["alpha"] = one(*w.alpha);
  if (w.phi) j["phi"] = one(*w.phi);
  if (w.subject) j["subject"] = one(*w.subject);
  if (w.subject_form != SubjectForm::none) j["subjectForm"] = subject_form_name(w.subject_form);
  if (w.perm) j["perm"] = to_json(*w.perm);
  if (w.identity != Identity::diagram) {
    j["lhs"] = one(w.lhs);
    j["rhs"] = one(w.rhs);
  }
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = status_name(c.status);
  j["scanned"] = c.scanned;
  if (!c.note.empty()) j["note"] = c.note;
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (!c.mismatches.empty()) {
    Json arr = Json::array();
    for (const auto& m : c.mismatches) {
      Json e;
      e["equality"] = m.equality;
      e["map"] = m.map;
      e["point"] = m.point;
      arr.push_back(std::move(e));
    }
    j["domainMismatches"] = std::move(arr);
  }
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["loop"] = r.loop_id;
  j["order"] = r.order;
  j["group"] = r.group_id;
  j["groupOrder"] = r.group_order;
  j["passed"] = r.passed();
  Json v = Json::object();
  for (const auto& [k, s] : r.verdicts) v[k] = status_name(s);
  j["verdicts"] = std::move(v);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["errors"] = r.errors;
  j["findings"] = r.findings;
  return j;
}

Json loop_rows_json(const LoopTable& L) {
  Json rows = Json::array();
  for (const auto& row : L.rows()) {
    Json jr = Json::array();
    for (Elem v : row) jr.push_back(one(v));
    rows.push_back(std::move(jr));
  }
  return rows;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string describe(const Witness& w) {
  std::ostringstream out;
  out << identity_name(w.identity);
  if (w.in_holomorph) out << " in H";
  auto coord = [&](const char* name, auto v) {
    if (v) out << ' ' << name << '=' << (*v + 1);
  };
  coord("x", w.x);
  coord("y", w.y);
  coord("z", w.z);
  coord("alpha", w.alpha);
  coord("phi", w.phi);
  coord("s", w.subject);
  if (w.subject_form != SubjectForm::none) out << " (s = " << subject_form_name(w.subject_form) << ')';
  if (w.perm) out << " U=[" << perm_literal(*w.perm) << ']';
  if (w.identity != Identity::diagram) out << ": " << (w.lhs + 1) << " != " << (w.rhs + 1);
  if (!w.detail.empty()) out << " [" << w.detail << ']';
  return out.str();
}

std::string text_summary(const TheoremReport& r) {
  std::ostringstream out;
  out << "loop " << (r.loop_id.empty() ? "-" : r.loop_id) << " (order " << r.order << "), group "
      << (r.group_id.empty() ? "-" : r.group_id) << " (order " << r.group_order << ")\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << status_name(c.status);
    if (c.witness) out << " -- " << describe(*c.witness);
    if (!c.note.empty()) out << " (" << c.note << ')';
    out << '\n';
  }
  for (const auto& f : r.findings) out << "finding: " << f << '\n';
  for (const auto& e : r.errors) out << "error: " << e << '\n';
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace osborn
