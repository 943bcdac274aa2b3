#include "adj/errors.hpp"
#include "adj/order.hpp"

#include "doctest.h"

using namespace adj;

namespace {
const Value a{"a"}, b{"b"}, c{"c"};
}

TEST_CASE("from_pairs insists on a partial order") {
    std::set<Value> universe{a, b};
    // missing reflexivity
    CHECK_THROWS_AS(OrderRelation::from_pairs(universe, {{a, b}}), InputError);
    // antisymmetry violated
    CHECK_THROWS_AS(
        OrderRelation::from_pairs(universe, {{a, a}, {b, b}, {a, b}, {b, a}}), InputError);
    // pair outside the universe
    CHECK_THROWS_AS(OrderRelation::from_pairs(universe, {{a, a}, {b, b}, {a, c}}), InputError);
    // transitivity violated
    std::set<Value> three{a, b, c};
    CHECK_THROWS_AS(
        OrderRelation::from_pairs(three, {{a, a}, {b, b}, {c, c}, {a, b}, {b, c}}), InputError);

    OrderRelation ok = OrderRelation::from_pairs(universe, {{a, a}, {b, b}, {a, b}});
    CHECK(ok.leq(a, b));
    CHECK(!ok.leq(b, a));
}

TEST_CASE("from_cover closes reflexively and transitively") {
    OrderRelation order = OrderRelation::from_cover({a, b, c}, {{a, b}, {b, c}});
    CHECK(order.leq(a, c));
    CHECK(order.leq(b, b));
    CHECK(order.is_linear());
}

TEST_CASE("chain and antichain") {
    OrderRelation chain = OrderRelation::chain({Value(1), Value(2), Value(3)});
    CHECK(chain.leq(Value(1), Value(3)));
    CHECK(!chain.leq(Value(3), Value(1)));
    CHECK(chain.is_linear());

    OrderRelation antichain = OrderRelation::antichain({a, b, c});
    CHECK(antichain.leq(a, a));
    CHECK(!antichain.leq(a, b));
    CHECK(!antichain.is_linear());
}

TEST_CASE("divisibility order") {
    OrderRelation div = OrderRelation::divisibility(1, 10);
    CHECK(div.leq(Value(2), Value(8)));
    CHECK(div.leq(Value(1), Value(7)));
    CHECK(!div.leq(Value(3), Value(7)));
    CHECK(!div.leq(Value(4), Value(6)));
    CHECK(!div.is_linear());
}

TEST_CASE("lower_bounds") {
    OrderRelation div = OrderRelation::divisibility(1, 12);
    std::set<Value> lb = div.lower_bounds({Value(4), Value(6)});
    CHECK(lb == std::set<Value>{Value(1), Value(2)});

    std::set<Value> lb8 = div.lower_bounds({Value(8)});
    CHECK(lb8 == std::set<Value>{Value(1), Value(2), Value(4), Value(8)});

    CHECK_THROWS_AS(div.lower_bounds({Value(99)}), InputError);
}

TEST_CASE("flat domain puts omega below everything") {
    FlatDomain flat{Value("ω")};
    OrderRelation order = flat.to_order({a, b});
    CHECK(order.contains(Value("ω")));
    CHECK(order.leq(Value("ω"), a));
    CHECK(order.leq(Value("ω"), b));
    CHECK(!order.leq(a, b));
    CHECK(!order.leq(a, Value("ω")));
}

TEST_CASE("validate is the constructor guard") {
    CHECK(OrderRelation::validate({a}, {{a, a}}));
    CHECK(!OrderRelation::validate({a}, {}));
    CHECK(!OrderRelation::validate({a, b}, {{a, a}, {b, b}, {a, b}, {b, a}}));
}
