#include "adj/adjudicators.hpp"

#include "adj/errors.hpp"
#include "adj/generalized.hpp"

#include <algorithm>

namespace adj {

namespace {

void require_numeric(const Bag& b, const char* op) {
    for (const auto& [v, n] : b.counts())
        if (!v.is_number()) throw InputError(std::string(op) + ": non-numeric value " + v.to_string());
}

void require_in_universe(const OrderRelation& order, const Bag& b, const char* op) {
    for (const auto& [v, n] : b.counts())
        if (!order.contains(v)) throw InputError(std::string(op) + ": value " + v.to_string() + " outside the order's universe");
}

}  // namespace

Outcome mv(const Bag& b) {
    for (const auto& [v, n] : b.counts())
        if (2 * n > b.size()) return Outcome::defined(v);
    return Outcome::undefined();
}

Outcome mv_err(const Bag& b) {
    Outcome o = mv(b);
    return o.is_defined() ? o : Outcome::bottom();
}

Outcome fptp(const Bag& b) {
    const Value* best = nullptr;
    std::uint64_t best_count = 0;
    bool unique = false;
    for (const auto& [v, n] : b.counts()) {
        if (n > best_count) {
            best = &v;
            best_count = n;
            unique = true;
        } else if (n == best_count) {
            unique = false;
        }
    }
    if (unique) return Outcome::defined(*best);
    return Outcome::undefined();
}

Outcome glb(const OrderRelation& order, const Bag& b) {
    require_in_universe(order, b, "glb");
    std::set<Value> lbs = order.lower_bounds(b.elements());
    for (const auto& z : lbs) {
        bool greatest = true;
        for (const auto& l : lbs)
            if (!order.leq(l, z)) {
                greatest = false;
                break;
            }
        if (greatest) return Outcome::defined(z);
    }
    return Outcome::undefined();
}

Outcome plubf(const FlatDomain& domain, const Bag& b) {
    std::optional<Value> proper;
    bool multiple = false;
    for (const auto& [v, n] : b.counts()) {
        if (v == domain.omega) continue;
        if (proper) multiple = true;
        proper = v;
    }
    if (multiple) return Outcome::undefined();
    if (proper) return Outcome::defined(*proper);
    return Outcome::defined(domain.omega);  // all versions failing
}

Outcome median(const OrderRelation& order, const Bag& b) {
    require_in_universe(order, b, "median");
    std::optional<Value> candidate;
    for (const auto& [x, nx] : b.counts()) {
        std::uint64_t below = 0, above = 0;
        for (const auto& [y, ny] : b.counts()) {
            if (order.leq(y, x)) below += ny;
            if (order.leq(x, y)) above += ny;
        }
        if (2 * below >= b.size() && 2 * above >= b.size()) {
            if (candidate) return Outcome::undefined();  // candidate not unique
            candidate = x;
        }
    }
    if (candidate) return Outcome::defined(*candidate);
    return Outcome::undefined();
}

Outcome average(const Bag& b) {
    require_numeric(b, "average");
    Rational sum = 0;
    for (const auto& [v, n] : b.counts()) sum += v.number() * Rational(n);
    return Outcome::defined(Value(sum / Rational(b.size())));
}

Outcome average_outliers_removed(const Bag& b, const Rational& k) {
    return average(remove_outliers(b, k));
}

Outcome tolerance_intersection(const Bag& b, const Rational& tol) {
    if (tol < 0) throw InputError("tolerance_intersection: negative tolerance");
    require_numeric(b, "tolerance_intersection");
    std::optional<Rational> lo, hi;
    for (const auto& [v, n] : b.counts()) {
        Rational l = v.number() - tol, h = v.number() + tol;
        if (!lo || l > *lo) lo = l;
        if (!hi || h < *hi) hi = h;
    }
    if (*lo > *hi) return Outcome::undefined();
    return Outcome::defined(Interval{*lo, *hi});
}

Adjudicator make_adjudicator(const std::string& name, const AdjudicatorParams& params) {
    auto need_order = [&]() -> OrderRelation {
        if (!params.order) throw ConfigError(name + " needs an order relation");
        return *params.order;
    };
    if (name == "mv") return {name, [](const Bag& b) { return mv(b); }};
    if (name == "mv_err") return {name, [](const Bag& b) { return mv_err(b); }};
    if (name == "choice") return {name, [](const Bag& b) { return mv(b); }};
    if (name == "fptp") return {name, [](const Bag& b) { return fptp(b); }};
    if (name == "glb")
        return {name, [order = need_order()](const Bag& b) { return glb(order, b); }};
    if (name == "plubf") {
        if (!params.omega) throw ConfigError("plubf needs an omega value");
        return {name, [domain = FlatDomain{*params.omega}](const Bag& b) { return plubf(domain, b); }};
    }
    if (name == "median")
        return {name, [order = need_order()](const Bag& b) { return median(order, b); }};
    if (name == "avg") return {name, [](const Bag& b) { return average(b); }};
    if (name == "avg_robust")
        return {name, [k = params.k](const Bag& b) { return average_outliers_removed(b, k); }};
    if (name == "tol_intersect") {
        if (!params.tol) throw ConfigError("tol_intersect needs a tolerance");
        return {name, [tol = *params.tol](const Bag& b) { return tolerance_intersection(b, tol); }};
    }
    throw ConfigError("unknown adjudicator: " + name);
}

std::vector<std::string> registered_adjudicators() {
    return {"mv", "mv_err", "choice", "fptp", "glb", "plubf", "median", "avg", "avg_robust", "tol_intersect"};
}

}  // namespace adj
