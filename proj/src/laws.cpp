#include "adj/laws.hpp"

#include "adj/errors.hpp"
#include "adj/generalized.hpp"
#include "adj/json_io.hpp"

#include <algorithm>

namespace adj {

const char* law_name(Law law) {
    switch (law) {
        case Law::Unanimity: return "UNANIMITY";
        case Law::Majority: return "MAJ";
        case Law::WeakChoice: return "WKCHOICE";
    }
    return "?";
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Holds: return "holds";
        case CheckStatus::Fails: return "fails";
        case CheckStatus::NotApplicable: return "not_applicable";
    }
    return "?";
}

bool law_contains(Law law, const Bag& b, const Outcome::Payload& result) {
    // Interval results are never members: the relations pair bags with values.
    const Value* x = std::get_if<Value>(&result);
    switch (law) {
        case Law::Unanimity: {
            if (b.counts().size() != 1) return true;  // vacuous off unanimous bags
            return x != nullptr && *x == b.counts().begin()->first;
        }
        case Law::Majority: {
            Outcome m = mv(b);
            if (!m.is_defined()) return true;
            return x != nullptr && *x == m.value();
        }
        case Law::WeakChoice:
            return x != nullptr && b.count(*x) > 0;
    }
    return false;
}

std::vector<Bag> enumerate_bags(const std::set<Value>& universe, std::uint64_t max_size) {
    if (universe.empty()) throw InputError("enumerate_bags: empty universe");
    if (max_size == 0) throw InputError("enumerate_bags: max_size must be at least 1");
    std::vector<Value> vals(universe.begin(), universe.end());
    std::vector<Bag> out;
    std::vector<Value> current;
    // Non-decreasing index tuples give each multiset exactly once, and walking
    // sizes outward keeps counterexamples minimal.
    std::function<void(std::size_t, std::uint64_t)> extend =
        [&](std::size_t start, std::uint64_t remaining) {
            if (remaining == 0) {
                out.push_back(Bag::from_items(current));
                return;
            }
            for (std::size_t i = start; i < vals.size(); ++i) {
                current.push_back(vals[i]);
                extend(i, remaining - 1);
                current.pop_back();
            }
        };
    for (std::uint64_t n = 1; n <= max_size; ++n) extend(0, n);
    return out;
}

LawCheck check_law(const Adjudicator& adj, Law law, const std::set<Value>& universe,
                   std::uint64_t max_size) {
    LawCheck check;
    for (const Bag& b : enumerate_bags(universe, max_size)) {
        Outcome o = Outcome::bottom();
        try {
            o = adj(b);
        } catch (const InputError& e) {
            check.status = CheckStatus::NotApplicable;
            check.note = e.what();
            return check;
        }
        if (!o.is_defined()) continue;  // inclusion constrains Defined results only
        if (!law_contains(law, b, o.payload())) {
            check.status = CheckStatus::Fails;
            check.counterexample = b;
            check.result = o;
            return check;
        }
    }
    return check;
}

TotalityCheck check_totality_on(const Adjudicator& adj, const std::vector<Bag>& bags) {
    TotalityCheck check;
    for (const Bag& b : bags) {
        Outcome o = Outcome::bottom();
        try {
            o = adj(b);
        } catch (const InputError& e) {
            check.status = CheckStatus::NotApplicable;
            check.note = e.what();
            return check;
        }
        if (!o.is_defined()) {
            check.status = CheckStatus::Fails;
            check.first_undefined = b;
            check.result = o;
            return check;
        }
    }
    return check;
}

TotalityCheck check_totality(const Adjudicator& adj, const std::set<Value>& universe,
                             std::uint64_t max_size) {
    return check_totality_on(adj, enumerate_bags(universe, max_size));
}

PermutationCheck check_permutation(const SeqAdjudicator& seq, const std::set<Value>& universe,
                                   std::uint64_t max_size) {
    PermutationCheck check;
    for (const Bag& b : enumerate_bags(universe, max_size)) {
        std::vector<Value> items = b.items();  // canonical order, so next_permutation covers all
        Outcome base = Outcome::bottom();
        try {
            base = seq(items);
        } catch (const InputError& e) {
            check.status = CheckStatus::NotApplicable;
            check.note = e.what();
            return check;
        }
        std::vector<Value> perm = items;
        while (std::next_permutation(perm.begin(), perm.end())) {
            Outcome o = seq(perm);
            if (!(o == base)) {
                check.status = CheckStatus::Fails;
                check.base_items = items;
                check.permuted_items = perm;
                check.base_result = base;
                check.permuted_result = o;
                return check;
            }
        }
    }
    return check;
}

PermutationCheck check_permutation(const Adjudicator& adj, const std::set<Value>& universe,
                                   std::uint64_t max_size) {
    SeqAdjudicator seq = [&adj](const std::vector<Value>& items) {
        return adj(Bag::from_items(items));
    };
    return check_permutation(seq, universe, max_size);
}

const ConformanceRow* ConformanceReport::find(const std::string& id) const {
    for (const ConformanceRow& row : rows)
        if (row.id == id) return &row;
    return nullptr;
}

ConformanceReport conformance_matrix(const std::vector<MatrixEntry>& entries) {
    ConformanceReport report;
    for (const MatrixEntry& entry : entries) {
        ConformanceRow row;
        row.id = entry.id;
        row.op = entry.adj.name;
        row.universe = entry.universe;
        row.max_size = entry.max_size;
        for (Law law : {Law::Unanimity, Law::Majority, Law::WeakChoice})
            row.laws[law_name(law)] = check_law(entry.adj, law, entry.universe, entry.max_size);
        row.totality = check_totality(entry.adj, entry.universe, entry.max_size);
        row.permutation = check_permutation(entry.adj, entry.universe, entry.max_size);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<MatrixEntry> default_matrix_entries(const MatrixOptions& options) {
    std::set<Value> base = options.universe;
    if (base.empty()) base = {Value(1), Value(2), Value(3)};

    bool base_numeric = std::all_of(base.begin(), base.end(),
                                    [](const Value& v) { return v.is_number(); });
    std::set<Value> numeric =
        base_numeric ? base : std::set<Value>{Value(0), Value(1), Value(2)};

    std::set<Value> flat_universe = base;
    flat_universe.insert(options.omega);

    std::vector<Value> ascending(base.begin(), base.end());
    OrderRelation chain = OrderRelation::chain(ascending);
    OrderRelation antichain = OrderRelation::antichain(base);
    OrderRelation fan = chain;
    if (ascending.size() >= 2) {
        // one least element, everything else pairwise incomparable above it
        std::set<ValuePair> cover;
        for (std::size_t i = 1; i < ascending.size(); ++i)
            cover.emplace(ascending[0], ascending[i]);
        fan = OrderRelation::from_cover(base, cover);
    }

    AdjudicatorParams plubf_params;
    plubf_params.omega = options.omega;
    AdjudicatorParams chain_params;
    chain_params.order = chain;
    AdjudicatorParams fan_params;
    fan_params.order = fan;
    AdjudicatorParams antichain_params;
    antichain_params.order = antichain;
    AdjudicatorParams robust_params;
    robust_params.k = 3;
    AdjudicatorParams tol_params;
    tol_params.tol = 1;

    const std::uint64_t ms = options.max_size;
    std::vector<MatrixEntry> entries;
    entries.push_back({"mv", make_adjudicator("mv"), base, ms});
    entries.push_back({"mv_err", make_adjudicator("mv_err"), base, ms});
    entries.push_back({"fptp", make_adjudicator("fptp"), base, ms});
    entries.push_back({"plubf", make_adjudicator("plubf", plubf_params), flat_universe, ms});
    entries.push_back({"median@chain", make_adjudicator("median", chain_params), base, ms});
    entries.push_back({"glb@chain", make_adjudicator("glb", chain_params), base, ms});
    entries.push_back({"glb@fan", make_adjudicator("glb", fan_params), base, ms});
    entries.push_back({"glb@antichain", make_adjudicator("glb", antichain_params), base, ms});
    entries.push_back({"avg", make_adjudicator("avg"), numeric, ms});
    entries.push_back({"avg_robust", make_adjudicator("avg_robust", robust_params), numeric, ms});
    entries.push_back({"tol_intersect", make_adjudicator("tol_intersect", tol_params), numeric, ms});
    return entries;
}

Claims default_claims() {
    return claims_from_json(Json::parse(embedded_claims_json()));
}

namespace {

std::optional<CheckStatus> column_status(const ConformanceRow& row, const std::string& column) {
    if (column == "total") return row.totality.status;
    if (column == "permutation") return row.permutation.status;
    auto it = row.laws.find(column);
    if (it == row.laws.end()) return std::nullopt;
    return it->second.status;
}

}  // namespace

std::vector<std::string> diff_claims(const ConformanceReport& report, const Claims& claims) {
    std::vector<std::string> mismatches;
    for (const auto& [id, cells] : claims) {
        const ConformanceRow* row = report.find(id);
        if (row == nullptr) {
            mismatches.push_back("row '" + id + "' missing from matrix");
            continue;
        }
        for (const auto& [column, expected] : cells) {
            std::optional<CheckStatus> status = column_status(*row, column);
            if (!status) {
                mismatches.push_back(id + "." + column + ": unknown column");
                continue;
            }
            if (*status == CheckStatus::NotApplicable) {
                mismatches.push_back(id + "." + column + ": claimed " +
                                     (expected ? "holds" : "fails") + ", measured not_applicable");
                continue;
            }
            bool measured = (*status == CheckStatus::Holds);
            if (measured != expected)
                mismatches.push_back(id + "." + column + ": claimed " +
                                     (expected ? "holds" : "fails") + ", measured " +
                                     (measured ? "holds" : "fails"));
        }
    }
    return mismatches;
}

ProbChoiceReadings check_prob_choice_readings(const std::set<Value>& universe,
                                              std::uint64_t max_size) {
    ProbChoiceReadings readings;
    for (const Bag& b : enumerate_bags(universe, max_size)) {
        Distribution d = prob_choice(b);
        if (readings.support_within_elements) {
            for (const auto& [v, w] : d.weights()) {
                if (b.count(v) == 0) {
                    readings.support_within_elements = false;
                    readings.support_counterexample = b;
                    break;
                }
            }
        }
        if (readings.mode_tracks_majority) {
            Outcome m = mv(b);
            if (m.is_defined()) {
                Rational best = 0;
                std::size_t best_count = 0;
                Value best_value = m.value();
                for (const auto& [v, w] : d.weights()) {
                    if (w > best) {
                        best = w;
                        best_count = 1;
                        best_value = v;
                    } else if (w == best) {
                        ++best_count;
                    }
                }
                if (best_count != 1 || !(best_value == m.value())) {
                    readings.mode_tracks_majority = false;
                    readings.mode_counterexample = b;
                }
            }
        }
        if (!readings.support_within_elements && !readings.mode_tracks_majority) break;
    }
    return readings;
}

}  // namespace adj
