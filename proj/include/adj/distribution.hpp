#pragma once

#include "adj/outcome.hpp"
#include "adj/value.hpp"

#include <map>
#include <string>

namespace adj {

/// Finitely supported probability distribution over values. Canonical form:
/// every stored weight is a positive exact rational and they sum to 1.
class Distribution {
public:
    static Distribution from_weights(const std::map<Value, Rational>& weights);
    static Distribution point(const Value& v);

    const std::map<Value, Rational>& weights() const { return w_; }
    Rational weight(const Value& v) const;

    std::string to_string() const;

    friend bool operator==(const Distribution& a, const Distribution& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Distribution& a, const Distribution& b) { return !(a == b); }

private:
    explicit Distribution(std::map<Value, Rational> w) : w_(std::move(w)) {}
    std::map<Value, Rational> w_;
};

/// Probability distribution over adjudication outcomes. Undefined/Bottom
/// mass is kept explicit, never renormalized away: "no majority" probability
/// is dependability information.
class OutcomeDistribution {
public:
    static OutcomeDistribution from_weights(const std::map<Outcome, Rational>& weights);

    const std::map<Outcome, Rational>& weights() const { return w_; }
    Rational weight(const Outcome& o) const;

    std::string to_string() const;

    friend bool operator==(const OutcomeDistribution& a, const OutcomeDistribution& b) {
        return a.w_ == b.w_;
    }
    friend bool operator!=(const OutcomeDistribution& a, const OutcomeDistribution& b) {
        return !(a == b);
    }

private:
    explicit OutcomeDistribution(std::map<Outcome, Rational> w) : w_(std::move(w)) {}
    std::map<Outcome, Rational> w_;
};

}  // namespace adj
