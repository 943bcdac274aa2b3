#pragma once

#include "adj/value.hpp"

#include <set>
#include <utility>
#include <vector>

namespace adj {

using ValuePair = std::pair<Value, Value>;

/// Explicit finite partial order: a universe plus the full <= relation as a
/// set of pairs. Explicit pairs (rather than predicates) keep every
/// quantifier in the law engine decidable. Constructors reject relations
/// that are not reflexive, transitive and antisymmetric.
class OrderRelation {
public:
    /// `leq` must already be the full relation, reflexive pairs included.
    static OrderRelation from_pairs(std::set<Value> universe, std::set<ValuePair> leq);

    /// Convenience: reflexive-transitive closure of `cover` is taken first,
    /// then validated (antisymmetry can still fail on cyclic covers).
    static OrderRelation from_cover(std::set<Value> universe, const std::set<ValuePair>& cover);

    /// Total order in the listed sequence.
    static OrderRelation chain(const std::vector<Value>& ascending);

    /// Only the reflexive pairs; all distinct values incomparable.
    static OrderRelation antichain(std::set<Value> universe);

    /// x <= y iff x divides y, over the integers in [lo, hi].
    static OrderRelation divisibility(std::int64_t lo, std::int64_t hi);

    /// The three partial-order axioms, checked by enumeration. Used as the
    /// constructor guard and exposed for direct testing.
    static bool validate(const std::set<Value>& universe, const std::set<ValuePair>& leq);

    bool leq(const Value& x, const Value& y) const { return leq_.count({x, y}) > 0; }
    bool is_linear() const;

    /// { x in universe | for all y in s: x <= y }; may be empty.
    /// Precondition: s is a non-empty subset of the universe.
    std::set<Value> lower_bounds(const std::set<Value>& s) const;

    bool contains(const Value& v) const { return universe_.count(v) > 0; }
    const std::set<Value>& universe() const { return universe_; }
    const std::set<ValuePair>& pairs() const { return leq_; }

private:
    OrderRelation(std::set<Value> universe, std::set<ValuePair> leq)
        : universe_(std::move(universe)), leq_(std::move(leq)) {}

    std::set<Value> universe_;
    std::set<ValuePair> leq_;
};

/// Flat domain: a failure element omega sits below everything, all other
/// values are pairwise incomparable. The implied order over any universe
/// containing omega is x <= y iff x = y or x = omega.
struct FlatDomain {
    Value omega;

    OrderRelation to_order(std::set<Value> universe) const;
};

}  // namespace adj
