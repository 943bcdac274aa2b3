#pragma once

#include "adj/rational.hpp"

#include <compare>
#include <string>
#include <variant>

namespace adj {

/// An element of the value universe: either an exact rational number or an
/// opaque symbol. Equality is decidable; the ordering below is a canonical
/// iteration/serialization order, not a semantic one (semantic orders are
/// supplied explicitly as OrderRelation).
class Value {
public:
    Value() : v_(Rational(0)) {}
    Value(Rational r) : v_(std::move(r)) {}
    Value(std::int64_t n) : v_(Rational(n)) {}
    Value(int n) : v_(Rational(n)) {}
    Value(std::string symbol) : v_(std::move(symbol)) {}
    Value(const char* symbol) : v_(std::string(symbol)) {}

    bool is_number() const { return std::holds_alternative<Rational>(v_); }
    bool is_symbol() const { return std::holds_alternative<std::string>(v_); }
    const Rational& number() const { return std::get<Rational>(v_); }
    const std::string& symbol() const { return std::get<std::string>(v_); }

    std::string to_string() const;

    friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

    // Numbers sort before symbols; numbers numerically, symbols bytewise.
    friend bool operator<(const Value& a, const Value& b) {
        if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
        if (a.is_number()) return a.number() < b.number();
        return a.symbol() < b.symbol();
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend bool operator>(const Value& a, const Value& b) { return b < a; }
    friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
    friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }

private:
    std::variant<Rational, std::string> v_;
};

}  // namespace adj
