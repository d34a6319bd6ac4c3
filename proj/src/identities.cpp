#include "osborn/identities.hpp"

#include <array>
#include <utility>

namespace osborn {

namespace {

constexpr std::array<std::pair<Identity, const char*>, 40> kNames{{
    {Identity::osborn_eq1, "osborn.eq1"},
    {Identity::osborn_eq2, "osborn.eq2"},
    {Identity::osborn_eq3, "osborn.eq3"},
    {Identity::eq4, "eq4"},
    {Identity::cor32, "cor32"},
    {Identity::lemma33_a, "lemma33_a"},
    {Identity::lemma33_b, "lemma33_b"},
    {Identity::left_c, "left_c"},
    {Identity::right_v, "right_v"},
    {Identity::conj_w, "conj_w"},
    {Identity::right_d, "right_d"},
    {Identity::mu_c, "mu_c"},
    {Identity::mu_d, "mu_d"},
    {Identity::thm34_iii, "thm34_iii"},
    {Identity::thm34_iv, "thm34_iv"},
    {Identity::lemma35_1a, "lemma35_1a"},
    {Identity::lemma35_1b, "lemma35_1b"},
    {Identity::lemma35_1c, "lemma35_1c"},
    {Identity::lemma35_2a, "lemma35_2a"},
    {Identity::lemma35_2b, "lemma35_2b"},
    {Identity::lemma35_3a, "lemma35_3a"},
    {Identity::lemma35_3b, "lemma35_3b"},
    {Identity::lemma35_4a, "lemma35_4a"},
    {Identity::lemma35_4b, "lemma35_4b"},
    {Identity::perm_a, "perm_a"},
    {Identity::perm_b1, "perm_b1"},
    {Identity::perm_b2, "perm_b2"},
    {Identity::perm_c, "perm_c"},
    {Identity::elem_b, "elem_b"},
    {Identity::nucleus_left, "nucleus_left"},
    {Identity::nucleus_right, "nucleus_right"},
    {Identity::nucleus_middle, "nucleus_middle"},
    {Identity::commutes, "commutes"},
    {Identity::alpha_in_p, "alpha_in_p"},
    {Identity::alpha_in_lambda, "alpha_in_lambda"},
    {Identity::alpha_in_phi, "alpha_in_phi"},
    {Identity::alpha_left_translation, "alpha_left_translation"},
    {Identity::alpha_right_translation, "alpha_right_translation"},
    {Identity::perm_automorphism, "perm_automorphism"},
    {Identity::diagram, "diagram"},
}};

}  // namespace

std::string identity_name(Identity id) {
  for (const auto& [k, v] : kNames)
    if (k == id) return v;
  return "?";
}

std::optional<Identity> parse_identity(const std::string& name) {
  for (const auto& [k, v] : kNames)
    if (name == v) return k;
  return std::nullopt;
}

}  // namespace osborn
