#include "adj/sim.hpp"
#include "adj/errors.hpp"
#include "adj/json_io.hpp"

#include "doctest.h"

#include <cmath>

using namespace adj;

namespace {

SimConfig noisy(std::uint64_t trials, std::uint64_t seed, unsigned workers = 1) {
    SimConfig cfg;
    cfg.dist = Distribution::from_weights(
        {{Value("right"), Rational(9, 10)}, {Value("wrong"), Rational(1, 10)}});
    cfg.n_versions = 3;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.workers = workers;
    return cfg;
}

Rational deviation(const SimReport& r, const Outcome& o) {
    for (const SimOutcomeRow& row : r.outcomes)
        if (row.outcome == o) return row.abs_deviation;
    return Rational(0);
}

}  // namespace

TEST_CASE("same seed, same report") {
    SimReport a = run_sim(noisy(20000, 42));
    SimReport b = run_sim(noisy(20000, 42));
    CHECK(sim_report_to_json(a).dump() == sim_report_to_json(b).dump());

    SimReport c = run_sim(noisy(20000, 43));
    CHECK(sim_report_to_json(a).dump() != sim_report_to_json(c).dump());
}

TEST_CASE("worker count never changes the tallies") {
    SimReport solo = run_sim(noisy(50000, 7, 1));
    SimReport four = run_sim(noisy(50000, 7, 4));
    CHECK(sim_report_to_json(solo).dump() == sim_report_to_json(four).dump());
}

TEST_CASE("point mass simulates exactly") {
    SimConfig cfg;
    cfg.dist = Distribution::point(Value(5));
    cfg.trials = 9999;  // also exercises the final partial chunk
    cfg.seed = 1;
    SimReport r = run_sim(cfg);
    REQUIRE(r.outcomes.size() == 1);
    CHECK(r.outcomes[0].outcome == Outcome::defined(Value(5)));
    CHECK(r.outcomes[0].count == 9999);
    CHECK(r.outcomes[0].empirical == Rational(1));
    CHECK(r.outcomes[0].abs_deviation == Rational(0));
    CHECK(r.all_within_4sigma);
}

TEST_CASE("empirical frequencies track the exact amplification") {
    SimReport r = run_sim(noisy(100000, 424242));
    CHECK(r.trials == 100000);
    CHECK(r.all_within_4sigma);

    std::uint64_t total = 0;
    for (const SimOutcomeRow& row : r.outcomes) {
        total += row.count;
        CHECK(row.within_4sigma);
        double dev = std::abs(row.empirical.convert_to<double>() -
                              row.exact.convert_to<double>());
        CHECK(dev <= 4.0 * row.sigma + 1e-15);
    }
    CHECK(total == r.trials);

    // wrong-majority mass is exactly 7/250 in the attached exact column
    Outcome wrong = Outcome::defined(Value("wrong"));
    bool saw = false;
    for (const SimOutcomeRow& row : r.outcomes)
        if (row.outcome == wrong) {
            saw = true;
            CHECK(row.exact == Rational(7, 250));
        }
    CHECK(saw);
}

TEST_CASE("more trials, tighter deviation") {
    Outcome wrong = Outcome::defined(Value("wrong"));
    Rational coarse = deviation(run_sim(noisy(1000, 99)), wrong);
    Rational fine = deviation(run_sim(noisy(100000, 99)), wrong);
    CHECK(fine < coarse);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(run_sim(noisy(0, 1)), ConfigError);
    SimConfig even = noisy(100, 1);
    even.n_versions = 4;
    CHECK_THROWS_AS(run_sim(even), ConfigError);
    even.n_versions = 0;
    CHECK_THROWS_AS(run_sim(even), ConfigError);
}

TEST_CASE("chunk seeds are a stable pure function of (seed, index)") {
    CHECK(derive_chunk_seed(42, 0) == derive_chunk_seed(42, 0));
    CHECK(derive_chunk_seed(42, 0) != derive_chunk_seed(42, 1));
    CHECK(derive_chunk_seed(42, 0) != derive_chunk_seed(43, 0));
    // seeds 0 and 1 must not collapse to related streams
    CHECK(derive_chunk_seed(0, 0) != derive_chunk_seed(1, 0));
}

TEST_CASE("report metadata names the sampling scheme") {
    SimReport r = run_sim(noisy(100, 5));
    CHECK(r.rng == "mt19937_64/splitmix64-chunks-4096");
    CHECK(r.seed == 5);
    CHECK(r.n_versions == 3);
    CHECK(r.adjudicator == "mv");
}
