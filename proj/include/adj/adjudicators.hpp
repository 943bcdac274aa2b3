#pragma once

#include "adj/bag.hpp"
#include "adj/order.hpp"
#include "adj/outcome.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace adj {

/// Majority vote: Defined(x) iff 2*count(x) > size. Undefined when no value
/// holds a strict majority. At most one such x can exist.
Outcome mv(const Bag& b);

/// mv totalized with the explicit error value: Bottom instead of Undefined.
Outcome mv_err(const Bag& b);

/// First-past-the-post: the unique plurality winner. Ties are Undefined.
Outcome fptp(const Bag& b);

/// Greatest element of the lower bounds of elements(b), when it exists.
/// Throws InputError if the bag strays outside the order's universe.
Outcome glb(const OrderRelation& order, const Bag& b);

/// Partial least upper bound on a flat domain: ignores failing (omega)
/// versions unless all fail, Undefined on two or more distinct proper
/// outcomes.
Outcome plubf(const FlatDomain& domain, const Bag& b);

/// Median: the unique element x of the bag for which the items at or below
/// x and the items at or above x each make up at least half the bag.
/// Undefined when zero or several candidates qualify.
Outcome median(const OrderRelation& order, const Bag& b);

/// Mean of a numeric bag. Always defined, but the result need not be one of
/// the submitted values.
Outcome average(const Bag& b);

/// Mean after dropping outliers (see remove_outliers); never Undefined.
Outcome average_outliers_removed(const Bag& b, const Rational& k);

/// Reads each measurement v as the interval [v - tol, v + tol] and returns
/// the intersection of all of them, or Undefined when they disagree beyond
/// tolerance.
Outcome tolerance_intersection(const Bag& b, const Rational& tol);

/// A named, pure Bag -> Outcome function: the registry currency shared by
/// the law engine, the term algebra, amplification and the CLI.
struct Adjudicator {
    std::string name;
    std::function<Outcome(const Bag&)> fn;

    Outcome operator()(const Bag& b) const { return fn(b); }
};

/// Parameters for the structured operators. `k` defaults to the usual 3 MAD.
struct AdjudicatorParams {
    std::optional<OrderRelation> order;  // glb, median
    std::optional<Value> omega;          // plubf
    Rational k = 3;                      // avg_robust
    std::optional<Rational> tol;         // tol_intersect
};

/// Registry names: mv, mv_err, fptp, glb, plubf, median, avg, avg_robust,
/// tol_intersect, plus "choice" (majority vote as named under choice
/// semantics in the term algebra). Throws ConfigError for unknown names or
/// missing parameters.
Adjudicator make_adjudicator(const std::string& name, const AdjudicatorParams& params = {});

std::vector<std::string> registered_adjudicators();

}  // namespace adj
