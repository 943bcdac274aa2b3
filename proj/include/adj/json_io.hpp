#pragma once

#include "adj/algebra.hpp"
#include "adj/bag.hpp"
#include "adj/distribution.hpp"
#include "adj/laws.hpp"
#include "adj/order.hpp"
#include "adj/outcome.hpp"
#include "adj/sim.hpp"

#include "json.hpp"

namespace adj {

// ordered_json keeps insertion order, so emitted documents are byte-stable
using Json = nlohmann::ordered_json;

/// Numbers are exact end to end: integral values travel as JSON integers,
/// anything else as {"num": ..., "den": ...} (int64 when it fits, decimal
/// string otherwise). Non-integer JSON floats are rejected on input.
Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // int | "3/4" | "0.25" | {"num","den"}

/// {"num", "den", "decimal"} with the 12-significant-digit rendering.
Json rational_report_fields(const Rational& r);

/// [{"value": v, "count": n}, ...] in canonical order; parsing also accepts
/// a flat array of items.
Json bag_to_json(const Bag& b);
Bag bag_from_json(const Json& j);

Json interval_to_json(const Interval& iv);
Json outcome_to_json(const Outcome& o);
Outcome outcome_from_json(const Json& j);

/// {"universe": [...], "leq": [[x,y], ...]}; parsing also accepts
/// {"flat": {"omega": v, "universe": [...]}}, {"chain": [...]},
/// {"antichain": [...]}, and {"universe": [...], "cover": [[x,y], ...]}.
Json order_to_json(const OrderRelation& order);
OrderRelation order_from_json(const Json& j);

/// {"weights": [{"value": v, "num": p, "den": q}, ...]}
Json distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const Json& j);
Json outcome_distribution_to_json(const OutcomeDistribution& d);

/// {"lit": v} | {"adj": {"op", "args"}} | {"binop": {"op", "l", "r"}} |
/// {"fun": {"name", "arg"}}
Json term_to_json(const Term& t);
Term term_from_json(const Json& j);

/// Config block for parameterized operators:
/// {"order": <order>, "omega": <value>, "k": <rational>, "tol": <rational>}
AdjudicatorParams params_from_json(const Json& j);

Json conformance_report_to_json(const ConformanceReport& report);
Claims claims_from_json(const Json& j);

Json sim_report_to_json(const SimReport& report);
SimConfig sim_config_from_json(const Json& j);

}  // namespace adj
