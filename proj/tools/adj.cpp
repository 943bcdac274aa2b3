// Command-line front end: adjudicate bags, run the conformance matrix,
// tabulate exact amplification, drive simulations, evaluate terms.
//
// Exit codes: 0 success, 2 parse/config error, 3 adjudication Undefined,
// 4 adjudication Bottom, 5 claims mismatch, 6 simulation deviation beyond 4σ.

#include "adj/adjudicators.hpp"
#include "adj/algebra.hpp"
#include "adj/errors.hpp"
#include "adj/generalized.hpp"
#include "adj/json_io.hpp"
#include "adj/laws.hpp"
#include "adj/sim.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using adj::Json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUndefined = 3;
constexpr int kExitBottom = 4;
constexpr int kExitClaims = 5;
constexpr int kExitDeviation = 6;

// inline JSON when it looks like JSON, otherwise a file path
Json load_json(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] != '[' && spec[0] != '{' && spec[0] != '"') {
        std::ifstream in(spec);
        if (!in) throw adj::InputError("cannot open '" + spec + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw adj::InputError(std::string("bad JSON: ") + e.what());
    }
}

// rationals read as numbers, anything else as a symbol
adj::Value parse_value_token(const std::string& token) {
    try {
        return adj::Value(adj::parse_rational(token));
    } catch (const adj::InputError&) {
        return adj::Value(token);
    }
}

std::set<adj::Value> parse_universe(const std::string& csv) {
    std::set<adj::Value> universe;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) universe.insert(parse_value_token(token));
    }
    if (universe.empty()) throw adj::InputError("empty universe");
    return universe;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw adj::InputError("cannot write '" + out_path + "'");
        out << text << "\n";
    }
}

struct OperatorFlags {
    std::string op = "mv";
    std::string order_spec;
    std::string omega_token;
    std::string k_text;
    std::string tol_text;

    adj::AdjudicatorParams params() const {
        adj::AdjudicatorParams params;
        if (!order_spec.empty()) params.order = adj::order_from_json(load_json(order_spec));
        if (!omega_token.empty()) params.omega = parse_value_token(omega_token);
        if (!k_text.empty()) params.k = adj::parse_rational(k_text);
        if (!tol_text.empty()) params.tol = adj::parse_rational(tol_text);
        return params;
    }
};

void add_operator_flags(CLI::App* sub, OperatorFlags& flags) {
    sub->add_option("--op", flags.op, "adjudicator name")
        ->check(CLI::IsMember(adj::registered_adjudicators()));
    sub->add_option("--order", flags.order_spec, "order relation (inline JSON or file)");
    sub->add_option("--omega", flags.omega_token, "failure element for plubf");
    sub->add_option("--k", flags.k_text, "outlier cutoff in MAD units (avg_robust)");
    sub->add_option("--tol", flags.tol_text, "tolerance radius (tol_intersect)");
}

int outcome_exit_code(const adj::Outcome& o) {
    switch (o.kind()) {
        case adj::Outcome::Kind::Defined: return kExitOk;
        case adj::Outcome::Kind::Undefined: return kExitUndefined;
        case adj::Outcome::Kind::Bottom: return kExitBottom;
    }
    return kExitOk;
}

std::string outcome_cell(const adj::Outcome& o) { return o.to_string(); }

// ---- adjudicate ----------------------------------------------------------

int run_adjudicate(const std::string& bag_spec, const OperatorFlags& flags,
                   const std::string& format, const std::string& out_path) {
    adj::Bag bag = adj::bag_from_json(load_json(bag_spec));
    adj::Adjudicator adjudicator = adj::make_adjudicator(flags.op, flags.params());
    adj::Outcome outcome = adjudicator(bag);

    bool unanimous = bag.counts().size() == 1;
    adj::Outcome majority = adj::mv(bag);
    adj::Outcome plurality = adj::fptp(bag);

    if (format == "json") {
        Json j = Json::object();
        j["op"] = flags.op;
        j["bag"] = adj::bag_to_json(bag);
        j["outcome"] = adj::outcome_to_json(outcome);
        Json diag = Json::object();
        diag["unanimous"] = unanimous;
        diag["majority"] = adj::outcome_to_json(majority);
        diag["plurality"] = adj::outcome_to_json(plurality);
        j["diagnostics"] = std::move(diag);
        emit(j.dump(2), out_path);
    } else {
        std::ostringstream out;
        out << "outcome    " << outcome_cell(outcome) << "\n";
        out << "unanimous  " << (unanimous ? "yes" : "no") << "\n";
        out << "majority   " << outcome_cell(majority) << "\n";
        out << "plurality  " << outcome_cell(plurality);
        emit(out.str(), out_path);
    }
    return outcome_exit_code(outcome);
}

// ---- laws -----------------------------------------------------------------

std::string laws_table(const adj::ConformanceReport& report) {
    std::ostringstream out;
    std::size_t id_width = 4;
    for (const auto& row : report.rows) id_width = std::max(id_width, row.id.size());

    auto pad = [](const std::string& s, std::size_t w) {
        return s.size() < w ? s + std::string(w - s.size(), ' ') : s;
    };
    out << pad("id", id_width) << " " << pad("UNANIMITY", 9) << " " << pad("MAJ", 9) << " "
        << pad("WKCHOICE", 9) << " " << pad("total", 9) << " permutation\n";

    std::vector<std::string> details;
    for (const auto& row : report.rows) {
        out << pad(row.id, id_width) << " ";
        for (const char* col : {"UNANIMITY", "MAJ", "WKCHOICE"}) {
            const adj::LawCheck& check = row.laws.at(col);
            out << pad(adj::check_status_name(check.status), 9) << " ";
            if (check.counterexample)
                details.push_back("  " + row.id + " " + col + ": counterexample " +
                                  check.counterexample->to_string() + " -> " +
                                  check.result->to_string());
        }
        out << pad(adj::check_status_name(row.totality.status), 9) << " ";
        if (row.totality.first_undefined)
            details.push_back("  " + row.id + " total: first non-defined " +
                              row.totality.first_undefined->to_string() + " -> " +
                              row.totality.result->to_string());
        out << adj::check_status_name(row.permutation.status) << "\n";
    }
    for (const std::string& line : details) out << line << "\n";
    std::string text = out.str();
    text.pop_back();  // no trailing newline; emit() adds one
    return text;
}

int run_laws(const std::string& universe_csv, std::uint64_t max_size,
             const std::string& omega_token, const std::string& claims_spec,
             const std::string& format, const std::string& out_path) {
    adj::MatrixOptions options;
    if (!universe_csv.empty()) options.universe = parse_universe(universe_csv);
    options.max_size = max_size;
    if (!omega_token.empty()) options.omega = parse_value_token(omega_token);

    adj::ConformanceReport report = adj::conformance_matrix(adj::default_matrix_entries(options));

    if (format == "json")
        emit(adj::conformance_report_to_json(report).dump(2), out_path);
    else
        emit(laws_table(report), out_path);

    adj::Claims claims = claims_spec.empty()
                             ? adj::default_claims()
                             : adj::claims_from_json(load_json(claims_spec));
    std::vector<std::string> mismatches = adj::diff_claims(report, claims);
    if (!mismatches.empty()) {
        for (const std::string& line : mismatches) std::cerr << "claims mismatch: " << line << "\n";
        return kExitClaims;
    }
    return kExitOk;
}

// ---- amplify ---------------------------------------------------------------

std::vector<std::uint64_t> parse_n_list(const std::string& csv) {
    std::vector<std::uint64_t> ns;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::uint64_t n = 0;
        try {
            n = std::stoull(token);
        } catch (const std::exception&) {
            throw adj::InputError("bad n '" + token + "'");
        }
        if (n == 0 || n % 2 == 0)
            throw adj::InputError("n must be an odd positive integer, got '" + token + "'");
        ns.push_back(n);
    }
    if (ns.empty()) throw adj::InputError("empty n list");
    return ns;
}

adj::Distribution two_point(const adj::Rational& p_wrong) {
    if (p_wrong < 0 || p_wrong > 1)
        throw adj::InputError("p-wrong must lie in [0, 1]");
    std::map<adj::Value, adj::Rational> weights;
    if (p_wrong > 0) weights[adj::Value("wrong")] = p_wrong;
    if (p_wrong < 1) weights[adj::Value("right")] = 1 - p_wrong;
    return adj::Distribution::from_weights(weights);
}

int run_amplify(const std::string& dist_spec, const std::string& p_wrong_text,
                const std::string& n_csv, const OperatorFlags& flags,
                const std::string& format, const std::string& out_path) {
    if (dist_spec.empty() == p_wrong_text.empty())
        throw adj::InputError("give exactly one of --dist and --p-wrong");
    adj::Distribution dist = dist_spec.empty()
                                 ? two_point(adj::parse_rational(p_wrong_text))
                                 : adj::distribution_from_json(load_json(dist_spec));
    std::vector<std::uint64_t> ns = parse_n_list(n_csv);
    adj::Adjudicator adjudicator = adj::make_adjudicator(flags.op, flags.params());

    if (format == "json") {
        Json table = Json::array();
        for (std::uint64_t n : ns) {
            Json row = Json::object();
            row["n"] = n;
            row["amplified"] = adj::outcome_distribution_to_json(adj::amplify(dist, n, adjudicator));
            table.push_back(std::move(row));
        }
        Json j = Json::object();
        j["op"] = flags.op;
        j["dist"] = adj::distribution_to_json(dist);
        j["table"] = std::move(table);
        emit(j.dump(2), out_path);
        return kExitOk;
    }

    std::ostringstream out;
    out << "n   outcome           exact            decimal\n";
    bool first = true;
    for (std::uint64_t n : ns) {
        adj::OutcomeDistribution amplified = adj::amplify(dist, n, adjudicator);
        if (!first) out << "\n";
        first = false;
        bool first_row = true;
        for (const auto& [outcome, p] : amplified.weights()) {
            std::string n_cell = first_row ? std::to_string(n) : "";
            first_row = false;
            n_cell.resize(3, ' ');
            std::string o_cell = outcome.to_string();
            if (o_cell.size() < 17) o_cell.resize(17, ' ');
            std::string r_cell = adj::rational_string(p);
            if (r_cell.size() < 16) r_cell.resize(16, ' ');
            out << n_cell << " " << o_cell << " " << r_cell << " " << adj::decimal_string(p)
                << "\n";
        }
    }
    std::string text = out.str();
    text.pop_back();
    emit(text, out_path);
    return kExitOk;
}

// ---- simulate --------------------------------------------------------------

std::string sim_table(const adj::SimReport& report) {
    std::ostringstream out;
    out << "rng " << report.rng << " seed " << report.seed << " trials " << report.trials
        << " n " << report.n_versions << " op " << report.adjudicator << "\n";
    out << "outcome           count     empirical        exact            |dev|           ok\n";
    for (const adj::SimOutcomeRow& row : report.outcomes) {
        std::string o = row.outcome.to_string();
        if (o.size() < 17) o.resize(17, ' ');
        std::string c = std::to_string(row.count);
        if (c.size() < 9) c.resize(9, ' ');
        std::string emp = adj::decimal_string(row.empirical);
        if (emp.size() < 16) emp.resize(16, ' ');
        std::string exa = adj::decimal_string(row.exact);
        if (exa.size() < 16) exa.resize(16, ' ');
        std::string dev = adj::decimal_string(row.abs_deviation);
        if (dev.size() < 15) dev.resize(15, ' ');
        out << o << " " << c << " " << emp << " " << exa << " " << dev << " "
            << (row.within_4sigma ? "yes" : "NO") << "\n";
    }
    out << "all within 4 sigma: " << (report.all_within_4sigma ? "yes" : "NO");
    return out.str();
}

// seed precedence: --seed flag, then config file, then ADJ_SEED, then 0
std::optional<std::uint64_t> env_seed() {
    const char* env = std::getenv("ADJ_SEED");
    if (env == nullptr) return std::nullopt;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw adj::InputError("ADJ_SEED must be an unsigned integer");
    }
}

int run_simulate(const std::string& config_spec, const std::string& p_wrong_text,
                 std::uint64_t n, std::uint64_t trials, std::uint64_t seed, bool seed_given,
                 unsigned workers, const OperatorFlags& flags, const std::string& format,
                 const std::string& out_path) {
    adj::SimConfig cfg;
    if (!config_spec.empty()) {
        Json config_json = load_json(config_spec);
        cfg = adj::sim_config_from_json(config_json);
        if (seed_given)
            cfg.seed = seed;
        else if (!config_json.contains("seed"))
            cfg.seed = env_seed().value_or(cfg.seed);
    } else {
        if (p_wrong_text.empty())
            throw adj::InputError("give --config or --p-wrong");
        cfg.dist = two_point(adj::parse_rational(p_wrong_text));
        cfg.n_versions = n;
        cfg.trials = trials;
        cfg.seed = seed_given ? seed : env_seed().value_or(seed);
        cfg.adjudicator = flags.op;
        cfg.params = flags.params();
        cfg.workers = workers;
    }

    adj::SimReport report = adj::run_sim(cfg);
    if (format == "json")
        emit(adj::sim_report_to_json(report).dump(2), out_path);
    else
        emit(sim_table(report), out_path);
    return report.all_within_4sigma ? kExitOk : kExitDeviation;
}

// ---- algebra ----------------------------------------------------------------

std::string outcome_set_string(const std::set<adj::Outcome>& outcomes) {
    std::string out = "{";
    bool first = true;
    for (const adj::Outcome& o : outcomes) {
        if (!first) out += ", ";
        first = false;
        out += o.to_string();
    }
    return out + "}";
}

int run_algebra_demo(const std::string& demo, const std::string& format,
                     const std::string& out_path) {
    adj::Registries reg = adj::Registries::standard();
    if (demo == "gerrymander") {
        std::vector<adj::GerrymanderHit> hits = adj::gerrymander_search(
            {adj::Value(1), adj::Value(2)}, 3, 3, adj::make_adjudicator("mv"));
        if (format == "json") {
            Json arr = Json::array();
            for (const adj::GerrymanderHit& hit : hits) {
                Json h = Json::object();
                h["term"] = hit.nested.to_string();
                Json districts = Json::array();
                for (const adj::Bag& d : hit.districts) districts.push_back(adj::bag_to_json(d));
                h["districts"] = std::move(districts);
                h["nested"] = adj::outcome_to_json(hit.nested_result);
                h["flat"] = adj::outcome_to_json(hit.flat_result);
                arr.push_back(std::move(h));
            }
            Json j = Json::object();
            j["hits"] = std::move(arr);
            emit(j.dump(2), out_path);
        } else {
            std::ostringstream out;
            out << hits.size() << " staged-vs-flat disagreements over {1,2}, 3 districts of 3\n";
            for (const adj::GerrymanderHit& hit : hits)
                out << "  " << hit.nested.to_string() << " = " << hit.nested_result.to_string()
                    << "  but flat = " << hit.flat_result.to_string() << "\n";
            std::string text = out.str();
            text.pop_back();
            emit(text, out_path);
        }
        return kExitOk;
    }
    if (demo == "square") {
        adj::Bag bag = adj::Bag::from_items({adj::Value(-2), adj::Value(2), adj::Value(3)});
        adj::FunDistributionCheck check =
            adj::check_fun_distribution("square", bag, adj::make_adjudicator("mv"), reg);
        if (format == "json") {
            Json j = Json::object();
            j["fn"] = "square";
            j["bag"] = adj::bag_to_json(bag);
            j["apply_after_adjudicate"] = adj::outcome_to_json(check.lhs);
            j["adjudicate_mapped_bag"] = adj::outcome_to_json(check.rhs);
            j["equal"] = check.holds();
            emit(j.dump(2), out_path);
        } else {
            std::ostringstream out;
            out << "square after mv " << bag.to_string() << ": " << check.lhs.to_string() << "\n";
            out << "mv over squared bag: " << check.rhs.to_string();
            emit(out.str(), out_path);
        }
        return kExitOk;
    }
    throw adj::InputError("unknown demo '" + demo + "' (gerrymander, square)");
}

int run_algebra(const std::string& demo, const std::string& term_spec,
                const std::string& semantics, const std::string& check_fun,
                const std::string& bag_spec, const OperatorFlags& flags,
                const std::string& format, const std::string& out_path) {
    adj::Registries reg = adj::Registries::standard();
    if (!demo.empty()) return run_algebra_demo(demo, format, out_path);

    if (!check_fun.empty()) {
        if (bag_spec.empty()) throw adj::InputError("--check-fun needs --bag");
        adj::Bag bag = adj::bag_from_json(load_json(bag_spec));
        adj::Adjudicator adjudicator = adj::make_adjudicator(flags.op, flags.params());
        adj::FunDistributionCheck check =
            adj::check_fun_distribution(check_fun, bag, adjudicator, reg);
        const char* relation = "equal";
        switch (check.relation) {
            case adj::FunDistributionCheck::Relation::Equal: relation = "equal"; break;
            case adj::FunDistributionCheck::Relation::LhsLessDefined:
                relation = "lhs_less_defined";
                break;
            case adj::FunDistributionCheck::Relation::RhsLessDefined:
                relation = "rhs_less_defined";
                break;
            case adj::FunDistributionCheck::Relation::Incomparable:
                relation = "unequal";
                break;
        }
        if (format == "json") {
            Json j = Json::object();
            j["fn"] = check_fun;
            j["op"] = flags.op;
            j["bag"] = adj::bag_to_json(bag);
            j["apply_after_adjudicate"] = adj::outcome_to_json(check.lhs);
            j["adjudicate_mapped_bag"] = adj::outcome_to_json(check.rhs);
            j["relation"] = relation;
            emit(j.dump(2), out_path);
        } else {
            std::ostringstream out;
            out << "apply after adjudicate: " << check.lhs.to_string() << "\n";
            out << "adjudicate mapped bag:  " << check.rhs.to_string() << "\n";
            out << "relation: " << relation;
            emit(out.str(), out_path);
        }
        return kExitOk;
    }

    if (term_spec.empty()) throw adj::InputError("give --demo, --term or --check-fun");
    adj::Term term = adj::term_from_json(load_json(term_spec));
    if (semantics == "choice") {
        std::set<adj::Outcome> outcomes = adj::eval_nondet(term, reg);
        if (format == "json") {
            Json arr = Json::array();
            for (const adj::Outcome& o : outcomes) arr.push_back(adj::outcome_to_json(o));
            Json j = Json::object();
            j["term"] = term.to_string();
            j["outcomes"] = std::move(arr);
            emit(j.dump(2), out_path);
        } else {
            emit(term.to_string() + " = " + outcome_set_string(outcomes), out_path);
        }
        return kExitOk;
    }
    adj::PartialityMode mode = semantics == "propagate" ? adj::PartialityMode::Propagate
                                                        : adj::PartialityMode::Totalize;
    adj::Outcome outcome = adj::eval(term, reg, mode);
    if (format == "json") {
        Json j = Json::object();
        j["term"] = term.to_string();
        j["outcome"] = adj::outcome_to_json(outcome);
        emit(j.dump(2), out_path);
    } else {
        emit(term.to_string() + " = " + outcome.to_string(), out_path);
    }
    return outcome_exit_code(outcome);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjudication operators over bags: evaluate, law-check, amplify, simulate"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // adjudicate
    auto* adjudicate = app.add_subcommand("adjudicate", "apply one adjudicator to one bag");
    adjudicate->fallthrough();
    std::string bag_spec;
    OperatorFlags adjudicate_flags;
    adjudicate->add_option("--bag", bag_spec, "bag JSON (inline or file)")->required();
    add_operator_flags(adjudicate, adjudicate_flags);

    // laws
    auto* laws = app.add_subcommand("laws", "conformance matrix against the claims fixture");
    laws->fallthrough();
    std::string universe_csv;
    std::uint64_t max_size = 5;
    std::string omega_token;
    std::string claims_spec;
    laws->add_option("--universe", universe_csv, "comma-separated universe values");
    laws->add_option("--max-size", max_size, "largest bag size to enumerate");
    laws->add_option("--omega", omega_token, "failure element adjoined for plubf");
    laws->add_option("--claims", claims_spec, "claims fixture override (inline or file)");

    // amplify
    auto* amplify = app.add_subcommand("amplify", "exact amplified outcome distributions");
    amplify->fallthrough();
    std::string dist_spec;
    std::string p_wrong_text;
    std::string n_csv = "3";
    OperatorFlags amplify_flags;
    amplify->add_option("--dist", dist_spec, "distribution JSON (inline or file)");
    amplify->add_option("--p-wrong", p_wrong_text, "two-point right/wrong distribution");
    amplify->add_option("--n", n_csv, "comma-separated odd version counts");
    add_operator_flags(amplify, amplify_flags);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo vs exact amplification");
    simulate->fallthrough();
    std::string config_spec;
    std::string sim_p_wrong;
    std::uint64_t sim_n = 3;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    OperatorFlags sim_flags;
    simulate->add_option("--config", config_spec, "SimConfig JSON (inline or file)");
    simulate->add_option("--p-wrong", sim_p_wrong, "two-point right/wrong distribution");
    simulate->add_option("--n", sim_n, "versions per trial (odd)");
    simulate->add_option("--trials", trials, "number of trials");
    auto* seed_opt =
        simulate->add_option("--seed", seed, "PRNG seed (ADJ_SEED is the fallback)");
    simulate->add_option("--workers", workers, "worker threads (never changes the tallies)");
    add_operator_flags(simulate, sim_flags);

    // algebra
    auto* algebra = app.add_subcommand("algebra", "evaluate terms and distribution checks");
    algebra->fallthrough();
    std::string demo;
    std::string term_spec;
    std::string semantics = "det";
    std::string check_fun;
    std::string algebra_bag;
    OperatorFlags algebra_flags;
    algebra->add_option("--demo", demo, "built-in demo")
        ->check(CLI::IsMember({"gerrymander", "square"}));
    algebra->add_option("--term", term_spec, "term JSON (inline or file)");
    algebra->add_option("--semantics", semantics, "det | propagate | choice")
        ->check(CLI::IsMember({"det", "propagate", "choice"}));
    algebra->add_option("--check-fun", check_fun, "function-distribution check");
    algebra->add_option("--bag", algebra_bag, "bag JSON for --check-fun");
    add_operator_flags(algebra, algebra_flags);

    int rc = kExitOk;
    adjudicate->callback(
        [&] { rc = run_adjudicate(bag_spec, adjudicate_flags, format, out_path); });
    laws->callback([&] {
        rc = run_laws(universe_csv, max_size, omega_token, claims_spec, format, out_path);
    });
    amplify->callback([&] {
        rc = run_amplify(dist_spec, p_wrong_text, n_csv, amplify_flags, format, out_path);
    });
    simulate->callback([&] {
        rc = run_simulate(config_spec, sim_p_wrong, sim_n, trials, seed, seed_opt->count() > 0,
                          workers, sim_flags, format, out_path);
    });
    algebra->callback([&] {
        rc = run_algebra(demo, term_spec, semantics, check_fun, algebra_bag, algebra_flags,
                         format, out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    } catch (const adj::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const adj::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return rc;
}
