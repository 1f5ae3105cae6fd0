#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "altlink/analysis.hpp"
#include "altlink/diagram.hpp"
#include "altlink/seifert.hpp"
#include "altlink/states.hpp"

namespace altlink {

// All emitters use ordered maps so output key order is the insertion order
// below; combined with dump_json this makes every report byte-reproducible.
using ordered_json = nlohmann::ordered_json;

// {schema, crossings:[{id, slots, sign}], arcs, faces:[{id, boundary, color}],
//  components, signs}
ordered_json diagram_json(const LinkDiagram& d);

// {schema, s, c, c_plus, c_minus, r, r_plus, r_minus, alternative,
//  spaces:[{regions, crossings, sign}]}
ordered_json census_json(const SpaceCensus& census);

// Bare array [{assignment:[[crossing, region, quadrant],...], fil, gr}];
// fil and gr are rendered as half-integer strings ("1", "-3/2").
ordered_json states_json(const std::vector<KauffmanState>& states);

// {schema, edge, count, states}
ordered_json enumeration_json(const DecoratedDiagram& dd,
                              const std::vector<KauffmanState>& states);

// {schema, edge, report:{fil_max, gr_max, count, formula_fil_max,
//  formula_gr_max}, states}. The formula fields are null when the diagram is
// not alternative (states then come from exhaustive enumeration).
ordered_json top_states_json(const DecoratedDiagram& dd,
                             const std::vector<KauffmanState>& states, bool alternative);

// TopReport with unset optionals rendered as null.
ordered_json report_json(const TopReport& r);

// {schema, checks:[{name, passed}], all_passed, link_state_sum_agrees?}
ordered_json verification_json(const TopLevelVerification& v);

// dump at indent 2 with a trailing newline; the single serialization point.
std::string dump_json(const ordered_json& j);

} // namespace altlink
