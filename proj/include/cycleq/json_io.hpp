// JSON encodings of schedules, equalization results, search outcomes and
// SCFO protocols.

#pragma once

#include "json.hpp"

#include "cycleq/cards.hpp"
#include "cycleq/equalizer.hpp"
#include "cycleq/oracle.hpp"

namespace cycleq {

using nlohmann::json;

/// {"base_length": n, "delta": "01", "gaps": [{"gap": g, "letters": "..."}]}.
/// Written in normal form; empty gaps are omitted.
json schedule_to_json(const InsertionSchedule& s, const Alphabet& alphabet);

/// Accepts non-normal input (a gap-0 entry) and normalizes it.
/// Throws FormatError on schema violations.
InsertionSchedule schedule_from_json(const json& j, const Alphabet& alphabet);

json equalize_result_to_json(const EqualizeResult& r);

json search_outcome_to_json(const SearchOutcome& o, const Alphabet& alphabet);

/// {"n": 2, "perm": [...], "schedule": {...}, "z0": "...", "z1": "..."}.
json protocol_to_json(const ScfoProtocol& p);
ScfoProtocol protocol_from_json(const json& j);

}  // namespace cycleq
