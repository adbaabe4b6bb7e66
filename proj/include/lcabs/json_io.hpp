/*
 * json_io.hpp - JSON schemas for every value that crosses the CLI boundary.
 *
 * Output is deterministic: object keys are sorted by nlohmann::json and all
 * arrays are emitted in lexicographic token order, so emitted files are
 * byte-stable and diff-friendly.
 */

#pragma once

#include <json.hpp>

#include "lcabs/fsm.hpp"
#include "lcabs/interval.hpp"
#include "lcabs/lcomplete.hpp"
#include "lcabs/quantizer.hpp"
#include "lcabs/relations.hpp"
#include "lcabs/simcheck.hpp"
#include "lcabs/windows.hpp"

namespace lcabs {

using nlohmann::json;

json fsm_to_json(const Fsm& m);
Fsm fsm_from_json(const json& j);

json approx_to_json(const ApproxMachine& am);

json windowset_to_json(const WindowSet& ws);
WindowSet windowset_from_json(const json& j);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json interval_to_json(const Interval& iv);
Interval interval_from_json(const json& j);

json intervalset_to_json(const IntervalSet& s);
IntervalSet intervalset_from_json(const json& j);

json quantizer_to_json(const QuantizerSpec& spec);
QuantizerSpec quantizer_from_json(const json& j);

json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j);

json verdict_to_json(const Verdict& v);

json report_to_json(const Theorem1Report& rep);

/// True when the object looks like a quantizer spec rather than a machine.
bool is_quantizer_json(const json& j);

}  // namespace lcabs
