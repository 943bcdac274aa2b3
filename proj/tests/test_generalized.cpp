#include "adj/generalized.hpp"
#include "adj/errors.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <map>
#include <vector>

using namespace adj;
using test::bag;
using test::sbag;

namespace {

Rational binom(unsigned n, unsigned k) {
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return Rational(num, den);
}

Rational rpow(const Rational& base, unsigned e) {
    Rational r = 1;
    while (e--) r *= base;
    return r;
}

// Independent oracle for amplify: walk every ordered n-tuple over the
// support and accumulate product probabilities per adjudicated outcome.
// Exponential in n, which is fine at the sizes used here.
std::map<Outcome, Rational> tuple_oracle(const Distribution& d, unsigned n,
                                         const Adjudicator& adj) {
    std::vector<std::pair<Value, Rational>> support(d.weights().begin(),
                                                    d.weights().end());
    std::map<Outcome, Rational> acc;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Rational p = 1;
        std::vector<Value> items;
        for (std::size_t i : idx) {
            p *= support[i].second;
            items.push_back(support[i].first);
        }
        acc[adj(Bag::from_items(items))] += p;
        std::size_t pos = n;
        while (pos > 0 && ++idx[pos - 1] == support.size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return acc;
}

Distribution two_point(const Rational& p_wrong) {
    return Distribution::from_weights(
        {{Value("right"), 1 - p_wrong}, {Value("wrong"), p_wrong}});
}

}  // namespace

TEST_CASE("remove_failures deletes omega unless the bag would empty") {
    FlatDomain flat{Value("ω")};
    CHECK(remove_failures(flat, sbag({"ω", "a", "ω"})) == sbag({"a"}));
    CHECK(remove_failures(flat, sbag({"a", "b"})) == sbag({"a", "b"}));
    CHECK(remove_failures(flat, sbag({"ω", "ω"})) == sbag({"ω", "ω"}));
}

TEST_CASE("remove_outliers drops far values, keeps ties and pairs") {
    CHECK(remove_outliers(bag({10, 11, 12, 1000}), 3) == bag({10, 11, 12}));
    CHECK(remove_outliers(bag({5, 5, 6}), 3) == bag({5, 5, 6}));  // MAD = 0
    CHECK(remove_outliers(bag({0, 100}), 3) == bag({0, 100}));
    CHECK_THROWS_AS(remove_outliers(bag({1, 2}), 0), InputError);
}

TEST_CASE("compose chains a preprocessor with an adjudicator") {
    FlatDomain flat{Value("ω")};
    Adjudicator ignore_then_mv = compose(
        "mv_no_failures", [flat](const Bag& b) { return remove_failures(flat, b); },
        make_adjudicator("mv"));
    CHECK(ignore_then_mv.name == "mv_no_failures");
    CHECK(ignore_then_mv(sbag({"a", "a", "ω"})) == Outcome::defined(Value("a")));
    // plain mv on the same bag has no majority
    CHECK(mv(sbag({"a", "a", "ω", "ω", "b"})) == Outcome::undefined());
    CHECK(ignore_then_mv(sbag({"a", "a", "ω", "ω", "b"})) ==
          Outcome::defined(Value("a")));
}

TEST_CASE("nondet_choice forgets multiplicity") {
    CHECK(nondet_choice(bag({2, 4, 2})) == std::set<Value>{Value(2), Value(4)});
    CHECK(nondet_choice(bag({3, 3, 3})) == std::set<Value>{Value(3)});
}

TEST_CASE("prob_choice keeps multiplicity as exact weights") {
    Distribution d = prob_choice(bag({2, 2, 4}));
    CHECK(d.weight(Value(2)) == Rational(2, 3));
    CHECK(d.weight(Value(4)) == Rational(1, 3));
    CHECK(d.weight(Value(9)) == Rational(0));
    CHECK(prob_choice(bag({7, 7})) == Distribution::point(Value(7)));
}

TEST_CASE("mix averages distributions with equal weight") {
    Distribution ab = mix({Distribution::point(Value("a")), Distribution::point(Value("b"))});
    CHECK(ab.weight(Value("a")) == Rational(1, 2));
    CHECK(mix({ab, Distribution::point(Value("a"))}).weight(Value("a")) == Rational(3, 4));
    CHECK_THROWS_AS(mix({}), InputError);
}

TEST_CASE("amplify matches the ordered-tuple oracle") {
    Adjudicator maj = make_adjudicator("mv");
    Adjudicator plurality = make_adjudicator("fptp");
    std::vector<Distribution> dists = {
        two_point(Rational(1, 10)),
        two_point(Rational(6, 10)),
        Distribution::from_weights({{Value(1), Rational(1, 2)},
                                    {Value(2), Rational(1, 3)},
                                    {Value(3), Rational(1, 6)}}),
    };
    for (const Distribution& d : dists)
        for (unsigned n : {1u, 2u, 3u, 4u}) {
            CHECK(amplify(d, n, maj).weights() == tuple_oracle(d, n, maj));
            CHECK(amplify(d, n, plurality).weights() == tuple_oracle(d, n, plurality));
        }
}

TEST_CASE("amplified mv failure mass matches the binomial tail") {
    Adjudicator maj = make_adjudicator("mv");
    for (const Rational& q : {Rational(1, 10), Rational(6, 10)})
        for (unsigned n : {1u, 3u, 5u, 7u}) {
            Rational tail = 0;
            for (unsigned j = n / 2 + 1; j <= n; ++j)
                tail += binom(n, j) * rpow(q, j) * rpow(1 - q, n - j);
            CHECK(amplify(two_point(q), n, maj).weight(Outcome::defined(Value("wrong"))) ==
                  tail);
        }
}

TEST_CASE("amplified mv at fixed operating points") {
    Adjudicator maj = make_adjudicator("mv");
    Outcome wrong = Outcome::defined(Value("wrong"));

    OutcomeDistribution n3 = amplify(two_point(Rational(1, 10)), 3, maj);
    CHECK(n3.weight(wrong) == Rational(7, 250));
    CHECK(n3.weight(Outcome::defined(Value("right"))) == Rational(243, 250));
    CHECK(n3.weight(Outcome::undefined()) == Rational(0));  // odd two-point never ties

    CHECK(amplify(two_point(Rational(1, 10)), 5, maj).weight(wrong) ==
          Rational(107, 12500));
    CHECK(amplify(two_point(Rational(1, 10)), 7, maj).weight(wrong) ==
          Rational(341, 125000));
    // majority voting amplifies errors when versions are usually wrong
    CHECK(amplify(two_point(Rational(6, 10)), 3, maj).weight(wrong) ==
          Rational(81, 125));
}

TEST_CASE("amplify keeps undefined mass explicit") {
    Distribution uniform3 = Distribution::from_weights({{Value(1), Rational(1, 3)},
                                                        {Value(2), Rational(1, 3)},
                                                        {Value(3), Rational(1, 3)}});
    OutcomeDistribution od = amplify(uniform3, 3, make_adjudicator("mv"));
    CHECK(od.weight(Outcome::undefined()) == Rational(2, 9));  // 6 of 27 tuples tie
    for (int v : {1, 2, 3})
        CHECK(od.weight(Outcome::defined(Value(v))) == Rational(7, 27));
}

TEST_CASE("amplify edge cases") {
    Distribution d = Distribution::from_weights(
        {{Value("a"), Rational(3, 4)}, {Value("b"), Rational(1, 4)}});
    Adjudicator maj = make_adjudicator("mv");
    CHECK(amplify(d, 3, maj).weight(Outcome::defined(Value("b"))) == Rational(5, 32));
    // n = 1 is the base distribution pushed through the adjudicator
    OutcomeDistribution base = amplify(d, 1, maj);
    CHECK(base.weight(Outcome::defined(Value("a"))) == Rational(3, 4));
    CHECK(base.weight(Outcome::defined(Value("b"))) == Rational(1, 4));
    CHECK_THROWS_AS(amplify(d, 0, maj), InputError);
}
