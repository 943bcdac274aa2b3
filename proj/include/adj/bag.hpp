#pragma once

#include "adj/value.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace adj {

/// Non-empty finite multiset of values, the carrier of all adjudication.
/// Canonical form: only positive multiplicities are stored, keyed in
/// canonical value order, so structural equality is count-wise equality.
/// Immutable after construction.
class Bag {
public:
    static Bag from_items(const std::vector<Value>& items);
    static Bag from_counts(const std::map<Value, std::uint64_t>& counts);

    /// Multiplicity of v; 0 when absent (the total-function view).
    std::uint64_t count(const Value& v) const;

    /// { v | count(v) > 0 }, never empty.
    std::set<Value> elements() const;

    /// Sum of all multiplicities, always >= 1.
    std::uint64_t size() const { return size_; }

    const std::map<Value, std::uint64_t>& counts() const { return counts_; }

    /// Every item repeated per its multiplicity, in canonical order.
    std::vector<Value> items() const;

    std::string to_string() const;

    friend bool operator==(const Bag& a, const Bag& b) { return a.counts_ == b.counts_; }
    friend bool operator!=(const Bag& a, const Bag& b) { return !(a == b); }
    friend bool operator<(const Bag& a, const Bag& b) { return a.counts_ < b.counts_; }

private:
    Bag(std::map<Value, std::uint64_t> counts, std::uint64_t size)
        : counts_(std::move(counts)), size_(size) {}

    std::map<Value, std::uint64_t> counts_;
    std::uint64_t size_ = 0;
};

/// Additive union: count(result, v) = count(a, v) + count(b, v).
/// Associative and commutative but not idempotent.
Bag bag_union(const Bag& a, const Bag& b);

/// Pushforward along f; multiplicities of colliding images add up, so the
/// size is preserved.
Bag map_values(const Bag& b, const std::function<Value(const Value&)>& f);

}  // namespace adj
