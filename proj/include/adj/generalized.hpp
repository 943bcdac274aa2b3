#pragma once

#include "adj/adjudicators.hpp"
#include "adj/bag.hpp"
#include "adj/distribution.hpp"
#include "adj/order.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace adj {

/// Bag-to-bag preprocessor: deletes every omega occurrence, unless that
/// would empty the bag (all versions failing), in which case the bag is
/// returned unchanged.
Bag remove_failures(const FlatDomain& domain, const Bag& b);

/// Bag-to-bag preprocessor: drops values whose absolute deviation from the
/// item-list median exceeds k * MAD (median absolute deviation). MAD = 0
/// removes nothing, and a rule that would empty the bag is not applied.
Bag remove_outliers(const Bag& b, const Rational& k);

/// Composition of a bag-to-bag preprocessor with an adjudicator.
Adjudicator compose(const std::string& name, std::function<Bag(const Bag&)> pre, Adjudicator inner);

/// Non-deterministic choice: the set of possible values. Idempotent, so
/// multiplicity information is deliberately lost.
std::set<Value> nondet_choice(const Bag& b);

/// Probabilistic choice: weight(v) = count(v) / size. Keeps the multiplicity
/// information nondet_choice discards.
Distribution prob_choice(const Bag& b);

/// Equal-weight mixture of distributions.
Distribution mix(const std::vector<Distribution>& ds);

/// Exact outcome distribution of adjudicating a bag of n independent samples
/// of d: every size-n multiset over the support is enumerated with its
/// multinomial weight. No sampling is involved; the Monte Carlo cross-check
/// lives in the sim module.
OutcomeDistribution amplify(const Distribution& d, std::uint64_t n, const Adjudicator& adj);

}  // namespace adj
