#include "adj/algebra.hpp"

#include "adj/errors.hpp"
#include "adj/laws.hpp"

#include <utility>

namespace adj {

Term Term::lit(Value v) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Lit;
    node->value = std::move(v);
    return Term(std::move(node));
}

Term Term::adj(std::string op, std::vector<Term> children) {
    if (children.empty()) throw InputError("adjudication term needs at least one child");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Adj;
    node->op = std::move(op);
    node->children = std::move(children);
    return Term(std::move(node));
}

Term Term::binop(std::string op, Term left, Term right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::BinOp;
    node->op = std::move(op);
    node->children = {std::move(left), std::move(right)};
    return Term(std::move(node));
}

Term Term::fun(std::string name, Term child) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Fun;
    node->op = std::move(name);
    node->children = {std::move(child)};
    return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }
const Value& Term::lit_value() const { return node_->value; }
const std::string& Term::op() const { return node_->op; }
const std::vector<Term>& Term::children() const { return node_->children; }

std::string Term::to_string() const {
    switch (kind()) {
        case Kind::Lit:
            return lit_value().to_string();
        case Kind::BinOp:
            return "(" + children()[0].to_string() + " " + op() + " " +
                   children()[1].to_string() + ")";
        case Kind::Adj:
        case Kind::Fun: {
            std::string out = op() + "(";
            bool first = true;
            for (const Term& c : children()) {
                if (!first) out += ", ";
                first = false;
                out += c.to_string();
            }
            return out + ")";
        }
    }
    return "?";
}

namespace {

Rational need_number(const Value& v, const char* op) {
    if (!v.is_number()) throw InputError(std::string(op) + " requires numeric arguments");
    return v.number();
}

const Adjudicator& find_adjudicator(const Registries& reg, const std::string& name) {
    auto it = reg.adjudicators.find(name);
    if (it == reg.adjudicators.end()) throw ConfigError("unknown adjudicator '" + name + "'");
    return it->second;
}

const BinOp& find_binop(const Registries& reg, const std::string& name) {
    auto it = reg.binops.find(name);
    if (it == reg.binops.end()) throw ConfigError("unknown binary operator '" + name + "'");
    return it->second;
}

const std::function<Value(const Value&)>& find_fun(const Registries& reg,
                                                   const std::string& name) {
    auto it = reg.funs.find(name);
    if (it == reg.funs.end()) throw ConfigError("unknown function '" + name + "'");
    return it->second;
}

Value outcome_value(const Outcome& o) {
    if (!o.has_value())
        throw InputError("interval outcomes cannot flow through term evaluation");
    return o.value();
}

Outcome apply_binop(const BinOp& op, const Outcome& l, const Outcome& r, PartialityMode mode) {
    bool bottom = (op.strict_left && l.kind() == Outcome::Kind::Bottom) ||
                  (op.strict_right && r.kind() == Outcome::Kind::Bottom);
    if (bottom) return Outcome::bottom();
    bool undefined = (op.strict_left && l.kind() == Outcome::Kind::Undefined) ||
                     (op.strict_right && r.kind() == Outcome::Kind::Undefined);
    if (undefined)
        return mode == PartialityMode::Totalize ? Outcome::bottom() : Outcome::undefined();
    if (!l.is_defined() && !r.is_defined()) {
        // both sides ignored, both failed: nothing to absorb into
        bool any_bottom =
            l.kind() == Outcome::Kind::Bottom || r.kind() == Outcome::Kind::Bottom;
        if (any_bottom) return Outcome::bottom();
        return mode == PartialityMode::Totalize ? Outcome::bottom() : Outcome::undefined();
    }
    // A non-strict side that failed gets the other side's value as a
    // placeholder; by contract apply never reads the non-strict argument.
    Value lv = l.is_defined() ? outcome_value(l) : outcome_value(r);
    Value rv = r.is_defined() ? outcome_value(r) : outcome_value(l);
    return Outcome::defined(op.apply(lv, rv));
}

}  // namespace

Registries Registries::standard() {
    Registries reg;
    for (const char* name : {"mv", "mv_err", "choice", "fptp", "avg"})
        reg.adjudicators.emplace(name, make_adjudicator(name));

    reg.binops["+"] = {[](const Value& a, const Value& b) {
        return Value(need_number(a, "+") + need_number(b, "+"));
    }};
    reg.binops["-"] = {[](const Value& a, const Value& b) {
        return Value(need_number(a, "-") - need_number(b, "-"));
    }};
    reg.binops["*"] = {[](const Value& a, const Value& b) {
        return Value(need_number(a, "*") * need_number(b, "*"));
    }};
    // max/min use the canonical value order, so they also work on symbols
    reg.binops["max"] = {[](const Value& a, const Value& b) { return a < b ? b : a; }};
    reg.binops["min"] = {[](const Value& a, const Value& b) { return b < a ? b : a; }};
    reg.binops["pair"] = {[](const Value& a, const Value& b) {
        return Value("(" + a.to_string() + "," + b.to_string() + ")");
    }};
    reg.binops["fst"] = {[](const Value& a, const Value&) { return a; }, true, false};
    reg.binops["snd"] = {[](const Value&, const Value& b) { return b; }, false, true};

    reg.funs["identity"] = [](const Value& v) { return v; };
    reg.funs["square"] = [](const Value& v) {
        Rational x = need_number(v, "square");
        return Value(x * x);
    };
    reg.funs["inc"] = [](const Value& v) { return Value(need_number(v, "inc") + 1); };
    reg.funs["double"] = [](const Value& v) { return Value(need_number(v, "double") * 2); };
    reg.funs["neg"] = [](const Value& v) { return Value(-need_number(v, "neg")); };
    return reg;
}

Outcome eval(const Term& t, const Registries& reg, PartialityMode mode) {
    switch (t.kind()) {
        case Term::Kind::Lit:
            return Outcome::defined(t.lit_value());
        case Term::Kind::Adj: {
            const Adjudicator& adj = find_adjudicator(reg, t.op());
            std::vector<Value> items;
            items.reserve(t.children().size());
            bool saw_bottom = false;
            bool saw_undefined = false;
            for (const Term& c : t.children()) {
                Outcome o = eval(c, reg, mode);
                if (o.kind() == Outcome::Kind::Bottom)
                    saw_bottom = true;
                else if (o.kind() == Outcome::Kind::Undefined)
                    saw_undefined = true;
                else
                    items.push_back(outcome_value(o));
            }
            if (saw_bottom) return Outcome::bottom();
            if (saw_undefined)
                return mode == PartialityMode::Totalize ? Outcome::bottom()
                                                        : Outcome::undefined();
            Outcome o = adj(Bag::from_items(items));
            if (o.kind() == Outcome::Kind::Undefined && mode == PartialityMode::Totalize)
                return Outcome::bottom();
            return o;
        }
        case Term::Kind::BinOp: {
            const BinOp& op = find_binop(reg, t.op());
            Outcome l = eval(t.children()[0], reg, mode);
            Outcome r = eval(t.children()[1], reg, mode);
            return apply_binop(op, l, r, mode);
        }
        case Term::Kind::Fun: {
            const auto& fn = find_fun(reg, t.op());
            Outcome c = eval(t.children()[0], reg, mode);
            if (!c.is_defined()) return c;
            return Outcome::defined(fn(outcome_value(c)));
        }
    }
    return Outcome::bottom();
}

std::set<Outcome> eval_nondet(const Term& t, const Registries& reg) {
    switch (t.kind()) {
        case Term::Kind::Lit:
            return {Outcome::defined(t.lit_value())};
        case Term::Kind::Fun: {
            const auto& fn = find_fun(reg, t.op());
            std::set<Outcome> out;
            for (const Outcome& c : eval_nondet(t.children()[0], reg)) {
                if (!c.is_defined())
                    out.insert(c);
                else
                    out.insert(Outcome::defined(fn(outcome_value(c))));
            }
            return out;
        }
        case Term::Kind::BinOp: {
            const BinOp& op = find_binop(reg, t.op());
            std::set<Outcome> out;
            for (const Outcome& l : eval_nondet(t.children()[0], reg))
                for (const Outcome& r : eval_nondet(t.children()[1], reg))
                    out.insert(apply_binop(op, l, r, PartialityMode::Propagate));
            return out;
        }
        case Term::Kind::Adj: {
            const Adjudicator& adj = find_adjudicator(reg, t.op());
            std::vector<std::set<Outcome>> child_sets;
            child_sets.reserve(t.children().size());
            for (const Term& c : t.children()) child_sets.push_back(eval_nondet(c, reg));

            std::set<Outcome> out;
            std::vector<Value> items(child_sets.size(), Value(0));
            std::function<void(std::size_t, bool, bool)> walk = [&](std::size_t i,
                                                                    bool saw_bottom,
                                                                    bool saw_undefined) {
                if (i == child_sets.size()) {
                    if (saw_bottom) {
                        out.insert(Outcome::bottom());
                        return;
                    }
                    if (saw_undefined) {
                        out.insert(Outcome::undefined());
                        return;
                    }
                    Bag b = Bag::from_items(items);
                    Outcome o = adj(b);
                    if (o.kind() == Outcome::Kind::Undefined) {
                        for (const Value& v : b.elements()) out.insert(Outcome::defined(v));
                    } else {
                        out.insert(o);
                    }
                    return;
                }
                for (const Outcome& c : child_sets[i]) {
                    if (c.is_defined()) {
                        items[i] = outcome_value(c);
                        walk(i + 1, saw_bottom, saw_undefined);
                    } else {
                        walk(i + 1, saw_bottom || c.kind() == Outcome::Kind::Bottom,
                             saw_undefined || c.kind() == Outcome::Kind::Undefined);
                    }
                }
            };
            walk(0, false, false);
            return out;
        }
    }
    return {Outcome::bottom()};
}

namespace {

DistributionCheck run_distribution_check(const Term& lhs, const Term& rhs,
                                         const Registries& reg, AlgebraSemantics semantics) {
    DistributionCheck check;
    check.semantics = semantics;
    if (semantics == AlgebraSemantics::Deterministic) {
        check.lhs = eval(lhs, reg, PartialityMode::Totalize);
        check.rhs = eval(rhs, reg, PartialityMode::Totalize);
        check.holds = (*check.lhs == *check.rhs);
    } else {
        check.lhs_set = eval_nondet(lhs, reg);
        check.rhs_set = eval_nondet(rhs, reg);
        check.holds = (*check.lhs_set == *check.rhs_set);
    }
    return check;
}

}  // namespace

DistributionCheck check_left_distribution(const std::string& op, const Value& a, const Bag& b,
                                          const std::string& adj_name, const Registries& reg,
                                          AlgebraSemantics semantics) {
    std::vector<Term> leaves;
    std::vector<Term> mapped;
    for (const Value& item : b.items()) {
        leaves.push_back(Term::lit(item));
        mapped.push_back(Term::binop(op, Term::lit(a), Term::lit(item)));
    }
    Term lhs = Term::binop(op, Term::lit(a), Term::adj(adj_name, std::move(leaves)));
    Term rhs = Term::adj(adj_name, std::move(mapped));
    return run_distribution_check(lhs, rhs, reg, semantics);
}

DistributionCheck check_right_distribution(const std::string& op, const Bag& b, const Value& a,
                                           const std::string& adj_name, const Registries& reg,
                                           AlgebraSemantics semantics) {
    std::vector<Term> leaves;
    std::vector<Term> mapped;
    for (const Value& item : b.items()) {
        leaves.push_back(Term::lit(item));
        mapped.push_back(Term::binop(op, Term::lit(item), Term::lit(a)));
    }
    Term lhs = Term::binop(op, Term::adj(adj_name, std::move(leaves)), Term::lit(a));
    Term rhs = Term::adj(adj_name, std::move(mapped));
    return run_distribution_check(lhs, rhs, reg, semantics);
}

FunDistributionCheck check_fun_distribution(const std::string& fn_name, const Bag& b,
                                            const Adjudicator& adj, const Registries& reg) {
    const auto& fn = find_fun(reg, fn_name);
    FunDistributionCheck check;

    Outcome adjudicated = adj(b);
    if (adjudicated.is_defined())
        check.lhs = Outcome::defined(fn(outcome_value(adjudicated)));
    else
        check.lhs = adjudicated;

    check.rhs = adj(map_values(b, fn));

    if (check.lhs == check.rhs)
        check.relation = FunDistributionCheck::Relation::Equal;
    else if (!check.lhs.is_defined() && check.rhs.is_defined())
        check.relation = FunDistributionCheck::Relation::LhsLessDefined;
    else if (check.lhs.is_defined() && !check.rhs.is_defined())
        check.relation = FunDistributionCheck::Relation::RhsLessDefined;
    else
        check.relation = FunDistributionCheck::Relation::Incomparable;
    return check;
}

std::vector<GerrymanderHit> gerrymander_search(const std::set<Value>& universe,
                                               std::size_t district_count,
                                               std::size_t district_size,
                                               const Adjudicator& adj) {
    if (district_count == 0) throw InputError("gerrymander_search: no districts");
    if (district_size == 0) throw InputError("gerrymander_search: empty districts");

    std::vector<Bag> pool;
    for (const Bag& b : enumerate_bags(universe, district_size))
        if (b.size() == district_size) pool.push_back(b);

    // multisets of districts: C(|pool| + count - 1, count)
    double assignments = 1.0;
    for (std::size_t i = 0; i < district_count; ++i)
        assignments = assignments * double(pool.size() + i) / double(i + 1);
    if (assignments > 200000.0)
        throw ConfigError("gerrymander_search: assignment space too large");

    std::vector<GerrymanderHit> hits;
    std::vector<std::size_t> pick(district_count, 0);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t slot,
                                                             std::size_t start) {
        if (slot == district_count) {
            std::vector<Bag> districts;
            districts.reserve(district_count);
            for (std::size_t idx : pick) districts.push_back(pool[idx]);

            bool saw_bottom = false;
            bool saw_undefined = false;
            std::vector<Value> winners;
            for (const Bag& d : districts) {
                Outcome o = adj(d);
                if (o.kind() == Outcome::Kind::Bottom)
                    saw_bottom = true;
                else if (o.kind() == Outcome::Kind::Undefined)
                    saw_undefined = true;
                else
                    winners.push_back(outcome_value(o));
            }
            Outcome nested = Outcome::bottom();
            if (saw_bottom)
                nested = Outcome::bottom();
            else if (saw_undefined)
                nested = Outcome::undefined();
            else
                nested = adj(Bag::from_items(winners));

            Bag flat_bag = districts[0];
            for (std::size_t i = 1; i < districts.size(); ++i)
                flat_bag = bag_union(flat_bag, districts[i]);
            Outcome flat = adj(flat_bag);

            if (!(nested == flat)) {
                std::vector<Term> stages;
                for (const Bag& d : districts) {
                    std::vector<Term> leaves;
                    for (const Value& v : d.items()) leaves.push_back(Term::lit(v));
                    stages.push_back(Term::adj(adj.name, std::move(leaves)));
                }
                hits.push_back({std::move(districts),
                                Term::adj(adj.name, std::move(stages)), nested, flat});
            }
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            pick[slot] = i;
            walk(slot + 1, i);
        }
    };
    walk(0, 0);
    return hits;
}

}  // namespace adj
