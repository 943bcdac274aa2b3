#pragma once

#include "adj/value.hpp"

#include <optional>
#include <string>
#include <variant>

namespace adj {

/// Closed numeric interval [lo, hi], the result shape of tolerance
/// intersection.
struct Interval {
    Rational lo;
    Rational hi;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator<(const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    }
    std::string to_string() const;
};

/// Result of an adjudication. Undefined means the partial operator does not
/// evaluate on this bag; Bottom is the explicit error value, a result in
/// its own right rather than a non-result.
class Outcome {
public:
    enum class Kind { Defined, Undefined, Bottom };
    using Payload = std::variant<Value, Interval>;

    static Outcome defined(Value v) { return Outcome(Kind::Defined, Payload(std::move(v))); }
    static Outcome defined(Interval i) { return Outcome(Kind::Defined, Payload(std::move(i))); }
    static Outcome undefined() { return Outcome(Kind::Undefined, std::nullopt); }
    static Outcome bottom() { return Outcome(Kind::Bottom, std::nullopt); }

    Kind kind() const { return kind_; }
    bool is_defined() const { return kind_ == Kind::Defined; }

    bool has_value() const { return is_defined() && std::holds_alternative<Value>(*payload_); }
    const Value& value() const { return std::get<Value>(*payload_); }

    bool has_interval() const { return is_defined() && std::holds_alternative<Interval>(*payload_); }
    const Interval& interval() const { return std::get<Interval>(*payload_); }

    const Payload& payload() const { return *payload_; }

    std::string to_string() const;

    friend bool operator==(const Outcome& a, const Outcome& b) {
        return a.kind_ == b.kind_ && a.payload_ == b.payload_;
    }
    friend bool operator!=(const Outcome& a, const Outcome& b) { return !(a == b); }

    // Canonical order: Defined(value) < Defined(interval) < Undefined < Bottom.
    friend bool operator<(const Outcome& a, const Outcome& b);

private:
    Outcome(Kind k, std::optional<Payload> p) : kind_(k), payload_(std::move(p)) {}

    Kind kind_;
    std::optional<Payload> payload_;
};

}  // namespace adj
