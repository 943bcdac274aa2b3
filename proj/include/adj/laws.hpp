#pragma once

#include "adj/adjudicators.hpp"
#include "adj/bag.hpp"
#include "adj/outcome.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace adj {

/// The candidate axioms, encoded as relations over (bag, result) pairs.
/// An operator satisfies a law when every Defined result is a member of the
/// relation; Undefined and Bottom results are outside the relation's scope
/// (relational inclusion), so totality is reported separately.
enum class Law { Unanimity, Majority, WeakChoice };

const char* law_name(Law law);

/// Membership test for (b |-> result):
///   UNANIMITY: if some y occurs size(b) times, result must equal it.
///   MAJ:       if mv(b) is Defined, result must equal the majority.
///   WKCHOICE:  result must be one of the bag's values.
bool law_contains(Law law, const Bag& b, const Outcome::Payload& result);

/// Every bag with elements in `universe` and 1 <= size <= max_size, exactly
/// once, sizes ascending and lexicographic within a size. Counterexamples
/// below are minimal in this enumeration order.
std::vector<Bag> enumerate_bags(const std::set<Value>& universe, std::uint64_t max_size);

enum class CheckStatus { Holds, Fails, NotApplicable };

const char* check_status_name(CheckStatus s);

struct LawCheck {
    CheckStatus status = CheckStatus::Holds;
    std::optional<Bag> counterexample;
    std::optional<Outcome> result;
    std::string note;

    bool holds() const { return status == CheckStatus::Holds; }
};

struct TotalityCheck {
    CheckStatus status = CheckStatus::Holds;  // Holds = Defined on every bag
    std::optional<Bag> first_undefined;
    std::optional<Outcome> result;
    std::string note;

    bool total() const { return status == CheckStatus::Holds; }
};

struct PermutationCheck {
    CheckStatus status = CheckStatus::Holds;
    std::optional<std::vector<Value>> base_items;
    std::optional<std::vector<Value>> permuted_items;
    std::optional<Outcome> base_result;
    std::optional<Outcome> permuted_result;
    std::string note;

    bool holds() const { return status == CheckStatus::Holds; }
};

LawCheck check_law(const Adjudicator& adj, Law law, const std::set<Value>& universe,
                   std::uint64_t max_size);

TotalityCheck check_totality(const Adjudicator& adj, const std::set<Value>& universe,
                             std::uint64_t max_size);
TotalityCheck check_totality_on(const Adjudicator& adj, const std::vector<Bag>& bags);

/// Sequence-level adjudicator, for validating the list-to-bag adapter (and
/// for deliberately order-sensitive negative controls in tests).
using SeqAdjudicator = std::function<Outcome(const std::vector<Value>&)>;

/// Applies the adjudicator to every permutation of every enumerated bag's
/// item list and demands identical outcomes.
PermutationCheck check_permutation(const SeqAdjudicator& seq, const std::set<Value>& universe,
                                   std::uint64_t max_size);
PermutationCheck check_permutation(const Adjudicator& adj, const std::set<Value>& universe,
                                   std::uint64_t max_size);

struct MatrixEntry {
    std::string id;  // row key, e.g. "glb@chain"
    Adjudicator adj;
    std::set<Value> universe;
    std::uint64_t max_size = 5;
};

struct ConformanceRow {
    std::string id;
    std::string op;
    std::set<Value> universe;
    std::uint64_t max_size = 5;
    std::map<std::string, LawCheck> laws;  // keyed UNANIMITY / MAJ / WKCHOICE
    TotalityCheck totality;
    PermutationCheck permutation;
};

struct ConformanceReport {
    std::vector<ConformanceRow> rows;

    const ConformanceRow* find(const std::string& id) const;
};

ConformanceReport conformance_matrix(const std::vector<MatrixEntry>& entries);

struct MatrixOptions {
    std::set<Value> universe;  // empty = default {1, 2, 3}
    std::uint64_t max_size = 5;
    Value omega = Value("ω");
};

/// The built-in matrix rows: counting operators over the base universe,
/// plubf over the universe extended with omega, median and glb over chains,
/// a fan and an antichain, and the numeric operators (which fall back to
/// {0, 1, 2} when the base universe is not numeric).
std::vector<MatrixEntry> default_matrix_entries(const MatrixOptions& options = {});

/// Expected status per row id and column (UNANIMITY, MAJ, WKCHOICE, total,
/// permutation). Only claimed cells are compared.
using Claims = std::map<std::string, std::map<std::string, bool>>;

/// The claims fixture compiled into the library (sourced from data/claims.json).
const char* embedded_claims_json();
Claims default_claims();

/// Human-readable mismatch lines; empty means the matrix matches the claims.
std::vector<std::string> diff_claims(const ConformanceReport& report, const Claims& claims);

/// Candidate readings of "probabilistic choice satisfies appropriately
/// modified choice and majority": (1) the support of prob_choice(b) stays
/// within the bag's values; (2) when a strict majority exists it is the
/// distribution's unique mode. Both are reported; neither is asserted to be
/// the canonical reading.
struct ProbChoiceReadings {
    bool support_within_elements = true;
    std::optional<Bag> support_counterexample;
    bool mode_tracks_majority = true;
    std::optional<Bag> mode_counterexample;
};

ProbChoiceReadings check_prob_choice_readings(const std::set<Value>& universe, std::uint64_t max_size);

}  // namespace adj
