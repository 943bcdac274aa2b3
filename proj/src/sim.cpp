#include "adj/sim.hpp"

#include "adj/errors.hpp"
#include "adj/generalized.hpp"

#include <cmath>
#include <future>
#include <map>
#include <random>

namespace adj {

namespace {

std::uint64_t splitmix_scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Threshold {
    std::uint64_t bound = 0;
    bool saturated = false;  // cumulative mass reached exactly 1
};

// ceil(c * 2^64) for cumulative mass c; a 64-bit draw u selects the first
// support point with u < bound, which agrees bit-for-bit with the exact
// comparison u / 2^64 < c.
std::vector<Threshold> cumulative_thresholds(const Distribution& dist) {
    std::vector<Threshold> thresholds;
    BigInt two64 = BigInt(1) << 64;
    Rational cumulative = 0;
    for (const auto& [v, w] : dist.weights()) {
        cumulative += w;
        BigInt scaled =
            (numerator(cumulative) * two64 + denominator(cumulative) - 1) /
            denominator(cumulative);
        Threshold t;
        if (scaled >= two64) {
            t.saturated = true;
        } else {
            t.bound = scaled.convert_to<std::uint64_t>();
        }
        thresholds.push_back(t);
    }
    thresholds.back().saturated = true;  // guard against any missed draw
    return thresholds;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

std::uint64_t derive_chunk_seed(std::uint64_t seed, std::uint64_t chunk_index) {
    // splitmix64 stream over the chunk index, keyed by the user seed
    return splitmix_scramble(seed + (chunk_index + 1) * 0x9E3779B97F4A7C15ull);
}

SimReport run_sim(const SimConfig& cfg) {
    if (cfg.trials == 0) throw ConfigError("run_sim: trials must be at least 1");
    if (cfg.n_versions == 0 || cfg.n_versions % 2 == 0)
        throw ConfigError("run_sim: n_versions must be an odd positive integer");

    Adjudicator adj = make_adjudicator(cfg.adjudicator, cfg.params);
    std::vector<Value> support;
    for (const auto& [v, w] : cfg.dist.weights()) support.push_back(v);
    std::vector<Threshold> thresholds = cumulative_thresholds(cfg.dist);

    const std::uint64_t chunk_count = (cfg.trials + kSimChunkTrials - 1) / kSimChunkTrials;
    const unsigned workers = cfg.workers == 0 ? 1 : cfg.workers;

    using Tally = std::map<Outcome, std::uint64_t>;
    auto run_chunks = [&](std::uint64_t first_chunk, std::uint64_t stride) {
        Tally tally;
        std::map<std::vector<std::uint32_t>, Outcome> memo;
        std::vector<std::uint32_t> counts(support.size(), 0);
        for (std::uint64_t chunk = first_chunk; chunk < chunk_count; chunk += stride) {
            std::mt19937_64 engine(derive_chunk_seed(cfg.seed, chunk));
            std::uint64_t begin = chunk * kSimChunkTrials;
            std::uint64_t end = std::min(begin + kSimChunkTrials, cfg.trials);
            for (std::uint64_t trial = begin; trial < end; ++trial) {
                std::fill(counts.begin(), counts.end(), 0);
                for (std::uint64_t i = 0; i < cfg.n_versions; ++i) {
                    std::uint64_t u = engine();
                    std::size_t pick = 0;
                    while (!thresholds[pick].saturated && u >= thresholds[pick].bound) ++pick;
                    ++counts[pick];
                }
                auto found = memo.find(counts);
                if (found == memo.end()) {
                    std::map<Value, std::uint64_t> bag_counts;
                    for (std::size_t i = 0; i < support.size(); ++i)
                        if (counts[i] > 0) bag_counts.emplace(support[i], counts[i]);
                    found = memo.emplace(counts, adj(Bag::from_counts(bag_counts))).first;
                }
                ++tally[found->second];
            }
        }
        return tally;
    };

    Tally tally;
    if (workers == 1) {
        tally = run_chunks(0, 1);
    } else {
        std::vector<std::future<Tally>> futures;
        for (unsigned w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, run_chunks, w, workers));
        for (auto& f : futures)
            for (const auto& [outcome, count] : f.get()) tally[outcome] += count;
    }

    OutcomeDistribution exact = amplify(cfg.dist, cfg.n_versions, adj);

    std::map<Outcome, std::pair<std::uint64_t, Rational>> merged;
    for (const auto& [outcome, count] : tally) merged[outcome].first = count;
    for (const auto& [outcome, p] : exact.weights()) merged[outcome].second = p;

    SimReport report;
    report.rng = "mt19937_64/splitmix64-chunks-4096";
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    report.n_versions = cfg.n_versions;
    report.adjudicator = cfg.adjudicator;
    for (const auto& [outcome, cell] : merged) {
        SimOutcomeRow row;
        row.outcome = outcome;
        row.count = cell.first;
        row.empirical = Rational(cell.first, cfg.trials);
        row.exact = cell.second;
        row.abs_deviation = abs(row.empirical - row.exact);
        row.sigma = std::sqrt(to_double(row.exact * (1 - row.exact)) / double(cfg.trials));
        double dev = to_double(row.abs_deviation);
        row.within_3sigma = row.sigma == 0.0 ? row.abs_deviation == 0 : dev <= 3 * row.sigma;
        row.within_4sigma = row.sigma == 0.0 ? row.abs_deviation == 0 : dev <= 4 * row.sigma;
        report.all_within_4sigma = report.all_within_4sigma && row.within_4sigma;
        report.outcomes.push_back(std::move(row));
    }
    return report;
}

}  // namespace adj
