#include "adj/bag.hpp"

#include "adj/errors.hpp"

namespace adj {

Bag Bag::from_items(const std::vector<Value>& items) {
    if (items.empty()) throw InputError("a bag must hold at least one value");
    std::map<Value, std::uint64_t> counts;
    for (const auto& v : items) ++counts[v];
    return Bag(std::move(counts), items.size());
}

Bag Bag::from_counts(const std::map<Value, std::uint64_t>& counts) {
    std::map<Value, std::uint64_t> canonical;
    std::uint64_t size = 0;
    for (const auto& [v, n] : counts) {
        if (n == 0) continue;
        canonical.emplace(v, n);
        size += n;
    }
    if (size == 0) throw InputError("a bag must hold at least one value");
    return Bag(std::move(canonical), size);
}

std::uint64_t Bag::count(const Value& v) const {
    auto it = counts_.find(v);
    return it == counts_.end() ? 0 : it->second;
}

std::set<Value> Bag::elements() const {
    std::set<Value> out;
    for (const auto& [v, n] : counts_) out.insert(v);
    return out;
}

std::vector<Value> Bag::items() const {
    std::vector<Value> out;
    out.reserve(size_);
    for (const auto& [v, n] : counts_)
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(v);
    return out;
}

std::string Bag::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [v, n] : counts_) {
        if (!first) s += ", ";
        first = false;
        s += v.to_string() + ":" + std::to_string(n);
    }
    return s + "}";
}

Bag bag_union(const Bag& a, const Bag& b) {
    std::map<Value, std::uint64_t> counts = a.counts();
    for (const auto& [v, n] : b.counts()) counts[v] += n;
    return Bag::from_counts(counts);
}

Bag map_values(const Bag& b, const std::function<Value(const Value&)>& f) {
    std::map<Value, std::uint64_t> counts;
    for (const auto& [v, n] : b.counts()) counts[f(v)] += n;
    return Bag::from_counts(counts);
}

}  // namespace adj
