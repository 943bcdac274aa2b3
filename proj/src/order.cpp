#include "adj/order.hpp"

#include "adj/errors.hpp"

namespace adj {

bool OrderRelation::validate(const std::set<Value>& universe, const std::set<ValuePair>& leq) {
    for (const auto& [x, y] : leq)
        if (!universe.count(x) || !universe.count(y)) return false;
    for (const auto& x : universe)
        if (!leq.count({x, x})) return false;
    for (const auto& [x, y] : leq) {
        if (x != y && leq.count({y, x})) return false;
        for (const auto& z : universe)
            if (leq.count({y, z}) && !leq.count({x, z})) return false;
    }
    return true;
}

OrderRelation OrderRelation::from_pairs(std::set<Value> universe, std::set<ValuePair> leq) {
    if (universe.empty()) throw InputError("order universe must be non-empty");
    if (!validate(universe, leq))
        throw InputError("relation is not a partial order (reflexivity, transitivity or antisymmetry fails)");
    return OrderRelation(std::move(universe), std::move(leq));
}

OrderRelation OrderRelation::from_cover(std::set<Value> universe, const std::set<ValuePair>& cover) {
    std::set<ValuePair> leq = cover;
    for (const auto& x : universe) leq.insert({x, x});
    // Warshall closure over the finite universe.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [x, y] : std::set<ValuePair>(leq))
            for (const auto& z : universe)
                if (leq.count({y, z}) && !leq.count({x, z})) {
                    leq.insert({x, z});
                    changed = true;
                }
    }
    return from_pairs(std::move(universe), std::move(leq));
}

OrderRelation OrderRelation::chain(const std::vector<Value>& ascending) {
    std::set<Value> universe(ascending.begin(), ascending.end());
    std::set<ValuePair> leq;
    for (std::size_t i = 0; i < ascending.size(); ++i)
        for (std::size_t j = i; j < ascending.size(); ++j) leq.insert({ascending[i], ascending[j]});
    return from_pairs(std::move(universe), std::move(leq));
}

OrderRelation OrderRelation::antichain(std::set<Value> universe) {
    std::set<ValuePair> leq;
    for (const auto& x : universe) leq.insert({x, x});
    return from_pairs(std::move(universe), std::move(leq));
}

OrderRelation OrderRelation::divisibility(std::int64_t lo, std::int64_t hi) {
    if (lo < 1 || hi < lo) throw InputError("divisibility order needs 1 <= lo <= hi");
    std::set<Value> universe;
    std::set<ValuePair> leq;
    for (std::int64_t x = lo; x <= hi; ++x) universe.insert(Value(x));
    for (std::int64_t x = lo; x <= hi; ++x)
        for (std::int64_t y = x; y <= hi; y += x) leq.insert({Value(x), Value(y)});
    return from_pairs(std::move(universe), std::move(leq));
}

bool OrderRelation::is_linear() const {
    for (const auto& x : universe_)
        for (const auto& y : universe_)
            if (!leq(x, y) && !leq(y, x)) return false;
    return true;
}

std::set<Value> OrderRelation::lower_bounds(const std::set<Value>& s) const {
    for (const auto& y : s)
        if (!universe_.count(y)) throw InputError("lower_bounds: value outside the order's universe");
    std::set<Value> out;
    for (const auto& x : universe_) {
        bool below_all = true;
        for (const auto& y : s)
            if (!leq(x, y)) {
                below_all = false;
                break;
            }
        if (below_all) out.insert(x);
    }
    return out;
}

OrderRelation FlatDomain::to_order(std::set<Value> universe) const {
    universe.insert(omega);
    std::set<ValuePair> leq;
    for (const auto& x : universe) {
        leq.insert({x, x});
        leq.insert({omega, x});
    }
    return OrderRelation::from_pairs(std::move(universe), std::move(leq));
}

}  // namespace adj
