#include "adj/algebra.hpp"
#include "adj/errors.hpp"
#include "adj/laws.hpp"

#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>

using namespace adj;
using test::bag;

namespace {

Term lit(int v) { return Term::lit(Value(v)); }

Term mv3(int a, int b, int c) { return Term::adj("mv", {lit(a), lit(b), lit(c)}); }

std::set<Outcome> outcomes(std::initializer_list<Outcome> os) { return os; }

}  // namespace

TEST_CASE("term construction and printing") {
    Term t = Term::binop("max", lit(5), Term::adj("mv", {lit(1), lit(2)}));
    CHECK(t.kind() == Term::Kind::BinOp);
    CHECK(t.op() == "max");
    CHECK(t.to_string() == "(5 max mv(1, 2))");
    CHECK(Term::fun("square", lit(3)).to_string() == "square(3)");
    CHECK_THROWS_AS(Term::adj("mv", {}), InputError);
}

TEST_CASE("deterministic evaluation") {
    Registries reg = Registries::standard();
    CHECK(eval(lit(7), reg) == Outcome::defined(Value(7)));
    CHECK(eval(mv3(1, 2, 2), reg) == Outcome::defined(Value(2)));
    CHECK(eval(Term::binop("+", lit(2), lit(3)), reg) == Outcome::defined(Value(5)));
    CHECK(eval(Term::fun("square", lit(-2)), reg) == Outcome::defined(Value(4)));
    CHECK_THROWS_AS(eval(Term::adj("nope", {lit(1)}), reg), ConfigError);
}

TEST_CASE("partiality: totalize vs propagate") {
    Registries reg = Registries::standard();
    Term tied = Term::binop("max", lit(5), mv3(1, 2, 3));

    // default reading turns the failed vote into an error, which max cannot absorb
    CHECK(eval(tied, reg) == Outcome::bottom());
    CHECK(eval(tied, reg, PartialityMode::Propagate) == Outcome::undefined());

    // mv_err is already error-valued, so the mode makes no difference
    Term erred = Term::binop("max", lit(5),
                             Term::adj("mv_err", {lit(1), lit(2), lit(3)}));
    CHECK(eval(erred, reg) == Outcome::bottom());
    CHECK(eval(erred, reg, PartialityMode::Propagate) == Outcome::bottom());
}

TEST_CASE("non-strict binops absorb a failed side") {
    Registries reg = Registries::standard();
    Term failed = mv3(1, 2, 3);

    CHECK(eval(Term::binop("fst", lit(9), failed), reg) ==
          Outcome::defined(Value(9)));
    CHECK(eval(Term::binop("snd", failed, lit(9)), reg) ==
          Outcome::defined(Value(9)));
    // the strict side still dominates
    CHECK(eval(Term::binop("fst", failed, lit(9)), reg) == Outcome::bottom());
    CHECK(eval(Term::binop("fst", failed, failed), reg) == Outcome::bottom());
}

TEST_CASE("choice semantics explores every reading of a failed vote") {
    Registries reg = Registries::standard();

    // a defined vote stays a singleton
    CHECK(eval_nondet(mv3(1, 2, 2), reg) == outcomes({Outcome::defined(Value(2))}));

    // a tied vote stands for any of its three leaves
    CHECK(eval_nondet(mv3(1, 2, 3), reg) == outcomes({Outcome::defined(Value(1)),
                                                      Outcome::defined(Value(2)),
                                                      Outcome::defined(Value(3))}));

    // adding zero is the identity on the reachable set
    Term sum = Term::binop("+", mv3(1, 2, 3), lit(0));
    CHECK(eval_nondet(sum, reg) == eval_nondet(mv3(1, 2, 3), reg));

    // two independent failed votes: all nine pairs
    Term pairs = Term::binop("pair", mv3(1, 2, 3), mv3(4, 5, 6));
    CHECK(eval_nondet(pairs, reg).size() == 9);

    // with no Adj failures the two evaluators agree
    Term plain = Term::binop("*", Term::fun("inc", lit(3)), lit(2));
    CHECK(eval_nondet(plain, reg) == outcomes({eval(plain, reg)}));
}

TEST_CASE("binop distribution over adjudication") {
    Registries reg = Registries::standard();

    // unanimity collapses the bag, so every op distributes
    DistributionCheck un = check_left_distribution("+", Value(10), bag({2, 2, 2}),
                                                   "mv", reg,
                                                   AlgebraSemantics::Deterministic);
    CHECK(un.holds);
    CHECK(*un.lhs == Outcome::defined(Value(12)));

    // max over a tied vote: the staged side fails, the mapped side resolves
    DistributionCheck det = check_left_distribution("max", Value(4), bag({1, 2, 3}),
                                                    "mv", reg,
                                                    AlgebraSemantics::Deterministic);
    CHECK(!det.holds);
    CHECK(*det.lhs == Outcome::bottom());
    CHECK(*det.rhs == Outcome::defined(Value(4)));

    // under choice semantics the same shape agrees: max(4, x) = 4 pointwise
    DistributionCheck ch = check_left_distribution("max", Value(4), bag({1, 2, 3}),
                                                   "mv", reg, AlgebraSemantics::Choice);
    CHECK(ch.holds);
    CHECK(*ch.lhs_set == outcomes({Outcome::defined(Value(4))}));
    CHECK(*ch.rhs_set == *ch.lhs_set);

    DistributionCheck right = check_right_distribution("max", bag({1, 2, 3}), Value(4),
                                                       "mv", reg,
                                                       AlgebraSemantics::Choice);
    CHECK(right.holds);

    // choice semantics is not a free pass: max(2, .) maps {1,2,3} to the
    // bag {2,2,3}, whose majority 2 excludes the reachable reading 3
    DistributionCheck created = check_left_distribution("max", Value(2), bag({1, 2, 3}),
                                                        "mv", reg,
                                                        AlgebraSemantics::Choice);
    CHECK(!created.holds);
    CHECK(*created.rhs_set == outcomes({Outcome::defined(Value(2))}));
    CHECK(*created.lhs_set ==
          outcomes({Outcome::defined(Value(2)), Outcome::defined(Value(3))}));
}

TEST_CASE("unary function distribution over mv") {
    Registries reg = Registries::standard();
    Adjudicator maj = make_adjudicator("mv");

    // squaring merges -2 and 2 into a majority the raw bag does not have
    FunDistributionCheck sq = check_fun_distribution("square", bag({-2, 2, 3}), maj, reg);
    CHECK(!sq.holds());
    CHECK(sq.relation == FunDistributionCheck::Relation::LhsLessDefined);
    CHECK(sq.lhs == Outcome::undefined());
    CHECK(sq.rhs == Outcome::defined(Value(4)));

    FunDistributionCheck id = check_fun_distribution("identity", bag({-2, 2, 3}), maj, reg);
    CHECK(id.holds());
    CHECK(id.lhs == Outcome::undefined());

    // injective functions always distribute over mv: exhaustive at small size
    for (const Bag& b : enumerate_bags({Value(-2), Value(0), Value(2)}, 4))
        for (const char* fn : {"identity", "inc", "double", "neg"})
            CHECK(check_fun_distribution(fn, b, maj, reg).holds());
}

TEST_CASE("gerrymandering: staged majorities can beat the flat majority") {
    std::vector<GerrymanderHit> hits =
        gerrymander_search({Value(1), Value(2)}, 3, 3, make_adjudicator("mv"));
    REQUIRE(!hits.empty());

    // the classic 9-voter assignment is among the hits: one safe district
    // thrown away, two narrow ones captured
    std::vector<Bag> classic = {bag({1, 1, 1}), bag({1, 2, 2}), bag({1, 2, 2})};
    bool found = false;
    for (const GerrymanderHit& h : hits) {
        std::vector<Bag> ds = h.districts;
        if (std::is_permutation(ds.begin(), ds.end(), classic.begin())) {
            found = true;
            CHECK(h.nested_result == Outcome::defined(Value(2)));
            CHECK(h.flat_result == Outcome::defined(Value(1)));  // 5 of 9 prefer 1
        }
        // every hit is re-checkable: nested and flat genuinely disagree
        CHECK(h.nested_result != h.flat_result);
    }
    CHECK(found);

    // a one-value universe cannot disagree with itself
    CHECK(gerrymander_search({Value(1)}, 3, 3, make_adjudicator("mv")).empty());
    // single-voter districts are transparent
    CHECK(gerrymander_search({Value(1), Value(2)}, 3, 1, make_adjudicator("mv")).empty());
}

TEST_CASE("nested vote terms evaluate stage by stage") {
    Registries reg = Registries::standard();
    Term nested = Term::adj("mv", {mv3(1, 1, 1), mv3(1, 2, 2), mv3(1, 2, 2)});
    CHECK(eval(nested, reg) == Outcome::defined(Value(2)));

    Term flat = Term::adj("mv", {lit(1), lit(1), lit(1), lit(1), lit(2), lit(2),
                                 lit(1), lit(2), lit(2)});
    CHECK(eval(flat, reg) == Outcome::defined(Value(1)));
}
