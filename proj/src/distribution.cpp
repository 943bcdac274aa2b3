#include "adj/distribution.hpp"

#include "adj/errors.hpp"

namespace adj {

Distribution Distribution::from_weights(const std::map<Value, Rational>& weights) {
    std::map<Value, Rational> canonical;
    Rational total = 0;
    for (const auto& [v, p] : weights) {
        if (p < 0) throw InputError("distribution weight of " + v.to_string() + " is negative");
        if (p == 0) continue;
        canonical.emplace(v, p);
        total += p;
    }
    if (canonical.empty()) throw InputError("distribution needs non-empty support");
    if (total != 1) throw InputError("distribution weights sum to " + rational_string(total) + ", expected 1");
    return Distribution(std::move(canonical));
}

Distribution Distribution::point(const Value& v) {
    return Distribution({{v, Rational(1)}});
}

Rational Distribution::weight(const Value& v) const {
    auto it = w_.find(v);
    return it == w_.end() ? Rational(0) : it->second;
}

std::string Distribution::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [v, p] : w_) {
        if (!first) s += ", ";
        first = false;
        s += v.to_string() + ": " + rational_string(p);
    }
    return s + "}";
}

OutcomeDistribution OutcomeDistribution::from_weights(const std::map<Outcome, Rational>& weights) {
    std::map<Outcome, Rational> canonical;
    Rational total = 0;
    for (const auto& [o, p] : weights) {
        if (p < 0) throw InputError("outcome distribution weight of " + o.to_string() + " is negative");
        if (p == 0) continue;
        canonical.emplace(o, p);
        total += p;
    }
    if (canonical.empty()) throw InputError("outcome distribution needs non-empty support");
    if (total != 1)
        throw InputError("outcome distribution weights sum to " + rational_string(total) + ", expected 1");
    return OutcomeDistribution(std::move(canonical));
}

Rational OutcomeDistribution::weight(const Outcome& o) const {
    auto it = w_.find(o);
    return it == w_.end() ? Rational(0) : it->second;
}

std::string OutcomeDistribution::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [o, p] : w_) {
        if (!first) s += ", ";
        first = false;
        s += o.to_string() + ": " + rational_string(p);
    }
    return s + "}";
}

}  // namespace adj
