#include "osborn/filter.hpp"

#include <stdexcept>

#include "osborn/autotopy.hpp"
#include "osborn/errors.hpp"
#include "osborn/loop_io.hpp"
#include "osborn/parallel.hpp"
#include "osborn/verifier.hpp"

namespace osborn {

namespace {

bool holomorph_osborn(const LoopTable& L, const PermGroup& A, std::size_t budget) {
  VerifierOptions opt;
  opt.holomorph_budget = budget;
  return Verifier(L, A, opt).holomorph_is_osborn();
}

// Second opinion for an emitted witness, through a different route where
// one exists: the table is re-read from its file form first.
void recheck(const LoopTable& original, LoopFilter f) {
  const LoopTable L = read_loop_string(loop_to_string(original));
  if (!(L == original)) throw std::logic_error("witness does not survive a file round trip");
  bool ok = false;
  switch (f) {
    case LoopFilter::osborn:
      ok = osborn_check(L, OsbornVariant::eq1)[0].holds();
      break;
    case LoopFilter::nonassociative: {
      auto t = first_nonassociative_triple(L);
      ok = t && L.multiply(L.multiply((*t)[0], (*t)[1]), (*t)[2]) !=
                    L.multiply((*t)[0], L.multiply((*t)[1], (*t)[2]));
      break;
    }
    case LoopFilter::nontrivial_aum: {
      const PermGroup aum = automorphism_group(L);
      ok = aum.order() > 1 && !autotopism_violation(L, aum[1], aum[1], aum[1]);
      break;
    }
    case LoopFilter::holomorph_osborn_all_subgroups:
    case LoopFilter::holomorph_osborn_some_subgroup: {
      // decided through the eq4 criterion rather than the direct scan
      bool all = true, some = false;
      for (const auto& A : all_subgroups(automorphism_group(L))) {
        const bool h = Verifier(L, A).eq4().holds();
        all = all && h;
        if (A.order() > 1) some = some || h;
      }
      ok = f == LoopFilter::holomorph_osborn_all_subgroups ? all : some;
      break;
    }
  }
  if (!ok) throw std::logic_error("witness for filter '" + filter_name(f) + "' failed re-check");
}

}  // namespace

bool passes_filter(const LoopTable& L, LoopFilter f, std::size_t budget) {
  switch (f) {
    case LoopFilter::osborn: return osborn_check(L, OsbornVariant::eq1)[0].holds();
    case LoopFilter::nonassociative: return !is_associative(L);
    case LoopFilter::nontrivial_aum: return automorphism_group(L).order() > 1;
    case LoopFilter::holomorph_osborn_all_subgroups: {
      for (const auto& A : all_subgroups(automorphism_group(L)))
        if (!holomorph_osborn(L, A, budget)) return false;
      return true;
    }
    case LoopFilter::holomorph_osborn_some_subgroup: {
      for (const auto& A : all_subgroups(automorphism_group(L)))
        if (A.order() > 1 && holomorph_osborn(L, A, budget)) return true;
      return false;
    }
  }
  return false;
}

FilterSummary filter_count(const EnumSpec& spec, unsigned jobs, std::size_t budget) {
  check_enum_bounds(spec);
  FilterSummary out;
  out.order = spec.order;
  out.normalized = spec.normalized;
  const std::size_t nf = spec.filters.size();
  auto label = [&](std::string name) {
    FilterTally t;
    t.label = std::move(name);
    out.tallies.push_back(std::move(t));
  };
  for (auto f : spec.filters) label(filter_name(f));
  if (nf > 1) label("all");
  const std::size_t cap = spec.limit.value_or(SIZE_MAX);

  auto tally = [&](const LoopTable& L, std::size_t index, const std::vector<char>& verdict) {
    bool all = true;
    for (std::size_t i = 0; i < nf; ++i) {
      all = all && verdict[i];
      if (!verdict[i]) continue;
      auto& t = out.tallies[i];
      if (t.count++ == 0) t.first = L, t.first_index = index;
    }
    if (nf > 1 && all) {
      auto& t = out.tallies.back();
      if (t.count++ == 0) t.first = L, t.first_index = index;
    }
    if (all && out.matches.size() < cap) out.matches.push_back(L);
  };

  if (spec.order <= kFullSweepBound) {
    // exhaustive: every table is examined even when the output is capped
    EnumSpec all = spec;
    all.limit.reset();
    const auto tables = enumerate_loops(all, jobs);
    std::vector<std::vector<char>> verdicts(tables.size(), std::vector<char>(nf));
    parallel_for(tables.size(), jobs, [&](std::size_t i) {
      for (std::size_t k = 0; k < nf; ++k)
        verdicts[i][k] = passes_filter(tables[i], spec.filters[k], budget);
    });
    for (std::size_t i = 0; i < tables.size(); ++i) tally(tables[i], i, verdicts[i]);
    out.examined = tables.size();
  } else {
    // beyond the full-sweep bound: stream until `limit` matches are found
    if (!spec.normalized) throw BoundExceeded("orders above 6 are enumerated normalized only");
    out.exhaustive = false;
    enumerate_normalized(spec.order, [&](const LoopTable& L) {
      std::vector<char> v(nf);
      for (std::size_t k = 0; k < nf; ++k) v[k] = passes_filter(L, spec.filters[k], budget);
      tally(L, out.examined++, v);
      return out.matches.size() < cap;
    });
  }

  for (std::size_t i = 0; i < nf; ++i)
    if (out.tallies[i].first) recheck(*out.tallies[i].first, spec.filters[i]);
  if (nf > 1 && out.tallies.back().first)
    for (auto f : spec.filters) recheck(*out.tallies.back().first, f);
  return out;
}

Json to_json(const FilterSummary& s) {
  Json j;
  j["order"] = s.order;
  j["normalized"] = s.normalized;
  j["examined"] = s.examined;
  j["exhaustive"] = s.exhaustive;
  Json tallies = Json::array();
  for (const auto& t : s.tallies) {
    Json e;
    e["filter"] = t.label;
    e["count"] = t.count;
    if (t.first) {
      e["firstIndex"] = t.first_index + 1;
      e["first"] = loop_rows_json(*t.first);
    }
    tallies.push_back(std::move(e));
  }
  j["filters"] = std::move(tallies);
  j["emitted"] = s.matches.size();
  return j;
}

}  // namespace osborn
