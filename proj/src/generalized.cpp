#include "adj/generalized.hpp"

#include "adj/errors.hpp"

#include <algorithm>

namespace adj {

namespace {

// Median of a non-empty sorted list of rationals; mean of the two middle
// items on even length.
Rational sorted_median(const std::vector<Rational>& sorted) {
    std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
}

BigInt factorial(std::uint64_t n) {
    BigInt f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational rational_pow(const Rational& r, std::uint64_t k) {
    Rational out = 1;
    for (std::uint64_t i = 0; i < k; ++i) out *= r;
    return out;
}

}  // namespace

Bag remove_failures(const FlatDomain& domain, const Bag& b) {
    std::map<Value, std::uint64_t> counts;
    for (const auto& [v, n] : b.counts())
        if (v != domain.omega) counts[v] = n;
    if (counts.empty()) return b;
    return Bag::from_counts(counts);
}

Bag remove_outliers(const Bag& b, const Rational& k) {
    if (k <= 0) throw InputError("remove_outliers: k must be positive");
    std::vector<Rational> items;
    items.reserve(b.size());
    for (const auto& [v, n] : b.counts()) {
        if (!v.is_number()) throw InputError("remove_outliers: non-numeric value " + v.to_string());
        for (std::uint64_t i = 0; i < n; ++i) items.push_back(v.number());
    }
    // Bag iteration is canonical, and canonical order on numbers is numeric,
    // so the item list is already sorted.
    Rational med = sorted_median(items);

    std::vector<Rational> deviations;
    deviations.reserve(items.size());
    for (const auto& x : items) deviations.push_back(abs(x - med));
    std::sort(deviations.begin(), deviations.end());
    Rational mad = sorted_median(deviations);
    if (mad == 0) return b;

    Rational threshold = k * mad;
    std::map<Value, std::uint64_t> kept;
    for (const auto& [v, n] : b.counts())
        if (abs(v.number() - med) <= threshold) kept[v] = n;
    if (kept.empty()) return b;  // the rule may not empty the bag
    return Bag::from_counts(kept);
}

Adjudicator compose(const std::string& name, std::function<Bag(const Bag&)> pre, Adjudicator inner) {
    return {name, [pre = std::move(pre), inner = std::move(inner)](const Bag& b) { return inner(pre(b)); }};
}

std::set<Value> nondet_choice(const Bag& b) {
    return b.elements();
}

Distribution prob_choice(const Bag& b) {
    std::map<Value, Rational> weights;
    for (const auto& [v, n] : b.counts()) weights.emplace(v, Rational(n, b.size()));
    return Distribution::from_weights(weights);
}

Distribution mix(const std::vector<Distribution>& ds) {
    if (ds.empty()) throw InputError("mix: need at least one distribution");
    std::map<Value, Rational> weights;
    for (const auto& d : ds)
        for (const auto& [v, p] : d.weights()) weights[v] += p;
    for (auto& [v, p] : weights) p /= Rational(ds.size());
    return Distribution::from_weights(weights);
}

OutcomeDistribution amplify(const Distribution& d, std::uint64_t n, const Adjudicator& adj) {
    if (n == 0) throw InputError("amplify: need at least one sample (bags are non-empty)");

    std::vector<Value> support;
    std::vector<Rational> probs;
    for (const auto& [v, p] : d.weights()) {
        support.push_back(v);
        probs.push_back(p);
    }

    const BigInt n_fact = factorial(n);
    std::map<Outcome, Rational> acc;

    // Walk all count vectors (k_0 .. k_{m-1}) with sum n.
    std::vector<std::uint64_t> counts(support.size(), 0);
    auto emit = [&]() {
        Rational weight(n_fact, 1);
        std::map<Value, std::uint64_t> bag_counts;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (counts[i] == 0) continue;
            weight /= Rational(factorial(counts[i]), 1);
            weight *= rational_pow(probs[i], counts[i]);
            bag_counts[support[i]] = counts[i];
        }
        acc[adj(Bag::from_counts(bag_counts))] += weight;
    };
    std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t idx, std::uint64_t remaining) {
        if (idx + 1 == support.size()) {
            counts[idx] = remaining;
            emit();
            return;
        }
        for (std::uint64_t k = 0; k <= remaining; ++k) {
            counts[idx] = k;
            walk(idx + 1, remaining - k);
        }
    };
    walk(0, n);

    return OutcomeDistribution::from_weights(acc);  // re-checks the weights sum to 1
}

}  // namespace adj
