#pragma once

#include "adj/adjudicators.hpp"
#include "adj/distribution.hpp"
#include "adj/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adj {

struct SimConfig {
    Distribution dist = Distribution::point(Value(0));  // per-version result distribution
    std::uint64_t n_versions = 3;  // odd
    std::string adjudicator = "mv";
    AdjudicatorParams params;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;  // affects scheduling only, never the tallies
};

struct SimOutcomeRow {
    Outcome outcome = Outcome::bottom();
    std::uint64_t count = 0;
    Rational empirical;      // count / trials
    Rational exact;          // amplified probability
    Rational abs_deviation;  // |empirical - exact|
    double sigma = 0.0;      // sqrt(exact * (1 - exact) / trials)
    bool within_3sigma = true;
    bool within_4sigma = true;
};

/// Deliberately omits the worker count: reports from the same config and
/// seed are identical however the trials were scheduled.
struct SimReport {
    std::string rng;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t n_versions = 0;
    std::string adjudicator;
    std::vector<SimOutcomeRow> outcomes;  // canonical outcome order
    bool all_within_4sigma = true;
};

/// Trials are processed in fixed-size chunks, each chunk re-seeding the
/// engine from (seed, chunk index); workers pick up whole chunks, which is
/// what makes the merged tally independent of the worker count.
inline constexpr std::uint64_t kSimChunkTrials = 4096;
std::uint64_t derive_chunk_seed(std::uint64_t seed, std::uint64_t chunk_index);

/// Samples trials x n_versions values (cumulative-threshold inversion on a
/// 64-bit uniform variate, exact at support boundaries), adjudicates each
/// trial's bag, and attaches the exact amplified distribution plus
/// per-outcome deviations. Throws ConfigError on zero trials or even n.
SimReport run_sim(const SimConfig& cfg);

}  // namespace adj
