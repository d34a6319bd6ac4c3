#ifndef OSBORN_REPORT_HPP
#define OSBORN_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "osborn/autotopy.hpp"
#include "osborn/loop_table.hpp"
#include "osborn/nuclei.hpp"
#include "osborn/perm_group.hpp"
#include "osborn/verifier.hpp"

namespace osborn {

// JSON views.  Keys keep insertion order and every element or group index
// is shown 1-based, so equal inputs serialise to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const ElementSet& s);
Json to_json(const NucleiReport& r);
Json to_json(const Perm& p);  // "1,3,2"
Json to_json(const PermGroup& g);
Json to_json(const AutotopismTriple& t);
Json to_json(const RegularSets& r);
Json to_json(const Witness& w);
Json to_json(const CheckResult& c);
Json to_json(const TheoremReport& r);
Json loop_rows_json(const LoopTable& L);

/// Pretty JSON text with a trailing newline.
std::string dump(const Json& j);

/// Human-readable summary: one line per check, witnesses spelled out.
std::string text_summary(const TheoremReport& r);
std::string describe(const Witness& w);

}  // namespace osborn

#endif  // OSBORN_REPORT_HPP
