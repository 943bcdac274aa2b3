#include "adj/json_io.hpp"

#include "adj/errors.hpp"

namespace adj {

namespace {

Json bigint_to_json(const BigInt& n) {
    if (auto small = to_int64(n)) return Json(*small);
    return Json(n.str());
}

BigInt bigint_from_json(const Json& j, const char* what) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(std::string(what) + ": bad integer literal '" +
                             j.get<std::string>() + "'");
        }
    }
    throw InputError(std::string(what) + ": expected an integer");
}

std::uint64_t uint_from_json(const Json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer()) {
        std::int64_t v = j.get<std::int64_t>();
        if (v < 0) throw InputError(std::string(what) + ": must be non-negative");
        return static_cast<std::uint64_t>(v);
    }
    throw InputError(std::string(what) + ": expected a non-negative integer");
}

std::set<Value> value_set_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of values");
    std::set<Value> out;
    for (const Json& el : j) out.insert(value_from_json(el));
    return out;
}

std::set<ValuePair> pair_set_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of pairs");
    std::set<ValuePair> out;
    for (const Json& el : j) {
        if (!el.is_array() || el.size() != 2)
            throw InputError(std::string(what) + ": each entry must be a [x, y] pair");
        out.emplace(value_from_json(el[0]), value_from_json(el[1]));
    }
    return out;
}

Json check_status_json(CheckStatus s) { return Json(check_status_name(s)); }

Json law_check_to_json(const LawCheck& check) {
    Json j = Json::object();
    j["status"] = check_status_json(check.status);
    if (check.counterexample) j["counterexample"] = bag_to_json(*check.counterexample);
    if (check.result) j["result"] = outcome_to_json(*check.result);
    if (!check.note.empty()) j["note"] = check.note;
    return j;
}

Json totality_check_to_json(const TotalityCheck& check) {
    Json j = Json::object();
    j["status"] = check_status_json(check.status);
    if (check.first_undefined) j["first_undefined"] = bag_to_json(*check.first_undefined);
    if (check.result) j["result"] = outcome_to_json(*check.result);
    if (!check.note.empty()) j["note"] = check.note;
    return j;
}

Json items_to_json(const std::vector<Value>& items) {
    Json arr = Json::array();
    for (const Value& v : items) arr.push_back(value_to_json(v));
    return arr;
}

Json permutation_check_to_json(const PermutationCheck& check) {
    Json j = Json::object();
    j["status"] = check_status_json(check.status);
    if (check.base_items) j["items"] = items_to_json(*check.base_items);
    if (check.permuted_items) j["permuted"] = items_to_json(*check.permuted_items);
    if (check.base_result) j["result"] = outcome_to_json(*check.base_result);
    if (check.permuted_result) j["permuted_result"] = outcome_to_json(*check.permuted_result);
    if (!check.note.empty()) j["note"] = check.note;
    return j;
}

}  // namespace

Json value_to_json(const Value& v) {
    if (v.is_symbol()) return Json(v.symbol());
    return rational_to_json(v.number());
}

Value value_from_json(const Json& j) {
    if (j.is_string()) return Value(j.get<std::string>());  // strings are symbols here
    if (j.is_number_float())
        throw InputError("non-integer JSON numbers are rejected; use {\"num\": p, \"den\": q}");
    if (j.is_number_unsigned() || j.is_number_integer() || j.is_object())
        return Value(rational_from_json(j));
    throw InputError("cannot read a value from JSON element " + j.dump());
}

Json rational_to_json(const Rational& r) {
    if (denominator(r) == 1) return bigint_to_json(numerator(r));
    Json j = Json::object();
    j["num"] = bigint_to_json(numerator(r));
    j["den"] = bigint_to_json(denominator(r));
    return j;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_float())
        throw InputError("non-integer JSON numbers are rejected; use {\"num\": p, \"den\": q}");
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Rational(BigInt(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_object()) {
        if (!j.contains("num")) throw InputError("rational object needs a \"num\" field");
        BigInt num = bigint_from_json(j.at("num"), "num");
        BigInt den = j.contains("den") ? bigint_from_json(j.at("den"), "den") : BigInt(1);
        if (den == 0) throw InputError("rational denominator is zero");
        return Rational(num, den);
    }
    throw InputError("cannot read a rational from JSON element " + j.dump());
}

Json rational_report_fields(const Rational& r) {
    Json j = Json::object();
    j["num"] = bigint_to_json(numerator(r));
    j["den"] = bigint_to_json(denominator(r));
    j["decimal"] = decimal_string(r);
    return j;
}

Json bag_to_json(const Bag& b) {
    Json arr = Json::array();
    for (const auto& [v, n] : b.counts()) {
        Json entry = Json::object();
        entry["value"] = value_to_json(v);
        entry["count"] = n;
        arr.push_back(std::move(entry));
    }
    return arr;
}

Bag bag_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw InputError("bag JSON must be a non-empty array");
    bool counts_form = true;
    for (const Json& el : j)
        if (!el.is_object() || !el.contains("value")) counts_form = false;
    if (counts_form) {
        std::map<Value, std::uint64_t> counts;
        for (const Json& el : j) {
            if (!el.contains("count")) throw InputError("bag entry is missing \"count\"");
            counts[value_from_json(el.at("value"))] += uint_from_json(el.at("count"), "count");
        }
        return Bag::from_counts(counts);
    }
    std::vector<Value> items;
    for (const Json& el : j) items.push_back(value_from_json(el));
    return Bag::from_items(items);
}

Json interval_to_json(const Interval& iv) {
    Json j = Json::object();
    j["lo"] = rational_to_json(iv.lo);
    j["hi"] = rational_to_json(iv.hi);
    return j;
}

Json outcome_to_json(const Outcome& o) {
    Json j = Json::object();
    switch (o.kind()) {
        case Outcome::Kind::Defined:
            j["kind"] = "defined";
            if (o.has_value())
                j["value"] = value_to_json(o.value());
            else
                j["interval"] = interval_to_json(o.interval());
            break;
        case Outcome::Kind::Undefined:
            j["kind"] = "undefined";
            break;
        case Outcome::Kind::Bottom:
            j["kind"] = "bottom";
            break;
    }
    return j;
}

Outcome outcome_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw InputError("outcome JSON must be an object with a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "undefined") return Outcome::undefined();
    if (kind == "bottom") return Outcome::bottom();
    if (kind != "defined") throw InputError("unknown outcome kind '" + kind + "'");
    if (j.contains("value")) return Outcome::defined(value_from_json(j.at("value")));
    if (j.contains("interval")) {
        const Json& iv = j.at("interval");
        if (!iv.is_object() || !iv.contains("lo") || !iv.contains("hi"))
            throw InputError("interval JSON needs \"lo\" and \"hi\"");
        Rational lo = rational_from_json(iv.at("lo"));
        Rational hi = rational_from_json(iv.at("hi"));
        if (lo > hi) throw InputError("interval lo exceeds hi");
        return Outcome::defined(Interval{lo, hi});
    }
    throw InputError("defined outcome needs a \"value\" or \"interval\" field");
}

Json order_to_json(const OrderRelation& order) {
    Json j = Json::object();
    Json universe = Json::array();
    for (const Value& v : order.universe()) universe.push_back(value_to_json(v));
    j["universe"] = std::move(universe);
    Json leq = Json::array();
    for (const auto& [x, y] : order.pairs())
        leq.push_back(Json::array({value_to_json(x), value_to_json(y)}));
    j["leq"] = std::move(leq);
    return j;
}

OrderRelation order_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("order JSON must be an object");
    if (j.contains("flat")) {
        const Json& f = j.at("flat");
        if (!f.is_object() || !f.contains("omega") || !f.contains("universe"))
            throw InputError("flat-domain JSON needs \"omega\" and \"universe\"");
        FlatDomain flat{value_from_json(f.at("omega"))};
        return flat.to_order(value_set_from_json(f.at("universe"), "universe"));
    }
    if (j.contains("chain")) {
        if (!j.at("chain").is_array()) throw InputError("chain: expected an array of values");
        std::vector<Value> ascending;
        for (const Json& el : j.at("chain")) ascending.push_back(value_from_json(el));
        return OrderRelation::chain(ascending);
    }
    if (j.contains("antichain"))
        return OrderRelation::antichain(value_set_from_json(j.at("antichain"), "antichain"));
    if (!j.contains("universe"))
        throw InputError("order JSON needs a \"universe\" field");
    std::set<Value> universe = value_set_from_json(j.at("universe"), "universe");
    if (j.contains("cover"))
        return OrderRelation::from_cover(universe, pair_set_from_json(j.at("cover"), "cover"));
    if (!j.contains("leq"))
        throw InputError("order JSON needs a \"leq\" or \"cover\" field");
    return OrderRelation::from_pairs(universe, pair_set_from_json(j.at("leq"), "leq"));
}

Json distribution_to_json(const Distribution& d) {
    Json j = Json::object();
    Json weights = Json::array();
    for (const auto& [v, w] : d.weights()) {
        Json entry = Json::object();
        entry["value"] = value_to_json(v);
        entry["num"] = bigint_to_json(numerator(w));
        entry["den"] = bigint_to_json(denominator(w));
        weights.push_back(std::move(entry));
    }
    j["weights"] = std::move(weights);
    return j;
}

Distribution distribution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("weights") || !j.at("weights").is_array())
        throw InputError("distribution JSON must be {\"weights\": [...]}");
    std::map<Value, Rational> weights;
    for (const Json& el : j.at("weights")) {
        if (!el.is_object() || !el.contains("value") || !el.contains("num"))
            throw InputError("distribution entry needs \"value\" and \"num\"");
        Value v = value_from_json(el.at("value"));
        BigInt num = bigint_from_json(el.at("num"), "num");
        BigInt den = el.contains("den") ? bigint_from_json(el.at("den"), "den") : BigInt(1);
        if (den == 0) throw InputError("distribution weight denominator is zero");
        weights[v] += Rational(num, den);
    }
    return Distribution::from_weights(weights);
}

Json outcome_distribution_to_json(const OutcomeDistribution& d) {
    Json j = Json::object();
    Json weights = Json::array();
    for (const auto& [o, w] : d.weights()) {
        Json entry = Json::object();
        entry["outcome"] = outcome_to_json(o);
        entry["num"] = bigint_to_json(numerator(w));
        entry["den"] = bigint_to_json(denominator(w));
        entry["decimal"] = decimal_string(w);
        weights.push_back(std::move(entry));
    }
    j["weights"] = std::move(weights);
    return j;
}

Json term_to_json(const Term& t) {
    Json j = Json::object();
    switch (t.kind()) {
        case Term::Kind::Lit:
            j["lit"] = value_to_json(t.lit_value());
            break;
        case Term::Kind::Adj: {
            Json node = Json::object();
            node["op"] = t.op();
            Json args = Json::array();
            for (const Term& c : t.children()) args.push_back(term_to_json(c));
            node["args"] = std::move(args);
            j["adj"] = std::move(node);
            break;
        }
        case Term::Kind::BinOp: {
            Json node = Json::object();
            node["op"] = t.op();
            node["l"] = term_to_json(t.children()[0]);
            node["r"] = term_to_json(t.children()[1]);
            j["binop"] = std::move(node);
            break;
        }
        case Term::Kind::Fun: {
            Json node = Json::object();
            node["name"] = t.op();
            node["arg"] = term_to_json(t.children()[0]);
            j["fun"] = std::move(node);
            break;
        }
    }
    return j;
}

Term term_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("term JSON must be an object");
    if (j.contains("lit")) return Term::lit(value_from_json(j.at("lit")));
    if (j.contains("adj")) {
        const Json& node = j.at("adj");
        if (!node.is_object() || !node.contains("op") || !node.contains("args") ||
            !node.at("args").is_array())
            throw InputError("adj term needs \"op\" and an \"args\" array");
        std::vector<Term> children;
        for (const Json& el : node.at("args")) children.push_back(term_from_json(el));
        return Term::adj(node.at("op").get<std::string>(), std::move(children));
    }
    if (j.contains("binop")) {
        const Json& node = j.at("binop");
        if (!node.is_object() || !node.contains("op") || !node.contains("l") ||
            !node.contains("r"))
            throw InputError("binop term needs \"op\", \"l\" and \"r\"");
        return Term::binop(node.at("op").get<std::string>(), term_from_json(node.at("l")),
                           term_from_json(node.at("r")));
    }
    if (j.contains("fun")) {
        const Json& node = j.at("fun");
        if (!node.is_object() || !node.contains("name") || !node.contains("arg"))
            throw InputError("fun term needs \"name\" and \"arg\"");
        return Term::fun(node.at("name").get<std::string>(), term_from_json(node.at("arg")));
    }
    throw InputError("term JSON needs one of \"lit\", \"adj\", \"binop\", \"fun\"");
}

AdjudicatorParams params_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("params JSON must be an object");
    AdjudicatorParams params;
    if (j.contains("order")) params.order = order_from_json(j.at("order"));
    if (j.contains("omega")) params.omega = value_from_json(j.at("omega"));
    if (j.contains("k")) params.k = rational_from_json(j.at("k"));
    if (j.contains("tol")) params.tol = rational_from_json(j.at("tol"));
    return params;
}

Json conformance_report_to_json(const ConformanceReport& report) {
    Json j = Json::object();
    Json rows = Json::array();
    for (const ConformanceRow& row : report.rows) {
        Json r = Json::object();
        r["id"] = row.id;
        r["op"] = row.op;
        Json universe = Json::array();
        for (const Value& v : row.universe) universe.push_back(value_to_json(v));
        r["universe"] = std::move(universe);
        r["max_size"] = row.max_size;
        Json checks = Json::object();
        for (Law law : {Law::Unanimity, Law::Majority, Law::WeakChoice}) {
            auto it = row.laws.find(law_name(law));
            if (it != row.laws.end()) checks[law_name(law)] = law_check_to_json(it->second);
        }
        checks["total"] = totality_check_to_json(row.totality);
        checks["permutation"] = permutation_check_to_json(row.permutation);
        r["checks"] = std::move(checks);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Claims claims_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("claims JSON must be an object of rows");
    Claims claims;
    for (const auto& [id, cells] : j.items()) {
        if (!cells.is_object())
            throw InputError("claims row '" + id + "' must be an object of booleans");
        for (const auto& [column, expected] : cells.items()) {
            if (!expected.is_boolean())
                throw InputError("claims cell " + id + "." + column + " must be a boolean");
            claims[id][column] = expected.get<bool>();
        }
    }
    return claims;
}

Json sim_report_to_json(const SimReport& report) {
    Json j = Json::object();
    j["rng"] = report.rng;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["n_versions"] = report.n_versions;
    j["adjudicator"] = report.adjudicator;
    Json outcomes = Json::array();
    for (const SimOutcomeRow& row : report.outcomes) {
        Json r = Json::object();
        r["outcome"] = outcome_to_json(row.outcome);
        r["count"] = row.count;
        r["empirical"] = rational_report_fields(row.empirical);
        r["exact"] = rational_report_fields(row.exact);
        r["abs_deviation"] = rational_report_fields(row.abs_deviation);
        r["sigma"] = row.sigma;
        r["within_3sigma"] = row.within_3sigma;
        r["within_4sigma"] = row.within_4sigma;
        outcomes.push_back(std::move(r));
    }
    j["outcomes"] = std::move(outcomes);
    j["all_within_4sigma"] = report.all_within_4sigma;
    return j;
}

SimConfig sim_config_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("sim config JSON must be an object");
    if (!j.contains("dist")) throw InputError("sim config needs a \"dist\" field");
    SimConfig cfg;
    cfg.dist = distribution_from_json(j.at("dist"));
    if (j.contains("n"))
        cfg.n_versions = uint_from_json(j.at("n"), "n");
    else if (j.contains("n_versions"))
        cfg.n_versions = uint_from_json(j.at("n_versions"), "n_versions");
    else
        throw InputError("sim config needs an \"n\" field");
    if (j.contains("op")) cfg.adjudicator = j.at("op").get<std::string>();
    if (j.contains("params")) cfg.params = params_from_json(j.at("params"));
    if (!j.contains("trials")) throw InputError("sim config needs a \"trials\" field");
    cfg.trials = uint_from_json(j.at("trials"), "trials");
    if (j.contains("seed")) cfg.seed = uint_from_json(j.at("seed"), "seed");
    if (j.contains("workers"))
        cfg.workers = static_cast<unsigned>(uint_from_json(j.at("workers"), "workers"));
    return cfg;
}

}  // namespace adj
