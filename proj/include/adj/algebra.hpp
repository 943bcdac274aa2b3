#pragma once

#include "adj/adjudicators.hpp"
#include "adj/bag.hpp"
#include "adj/outcome.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace adj {

/// Versioned-computation terms: literals, adjudication over child terms,
/// binary operators, unary functions. Immutable; copies share structure.
class Term {
public:
    enum class Kind { Lit, Adj, BinOp, Fun };

    static Term lit(Value v);
    static Term adj(std::string op, std::vector<Term> children);  // children must be non-empty
    static Term binop(std::string op, Term left, Term right);
    static Term fun(std::string name, Term child);

    Kind kind() const;
    const Value& lit_value() const;             // Lit only
    const std::string& op() const;              // Adj / BinOp / Fun name
    const std::vector<Term>& children() const;  // BinOp: {left, right}; Fun: {child}

    std::string to_string() const;

private:
    struct Node {
        Kind kind;
        Value value{0};
        std::string op;
        std::vector<Term> children;
    };
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Binary operator on values. A non-strict side's value is never inspected
/// by `apply` (the evaluator may pass a placeholder there), which is what
/// lets such an operator absorb a failed computation in the ignored argument.
struct BinOp {
    std::function<Value(const Value&, const Value&)> apply;
    bool strict_left = true;
    bool strict_right = true;
};

struct Registries {
    std::map<std::string, Adjudicator> adjudicators;
    std::map<std::string, BinOp> binops;
    std::map<std::string, std::function<Value(const Value&)>> funs;

    /// mv, mv_err, choice, fptp, avg; arithmetic and comparison binops
    /// (+ - * max min pair fst snd); identity, square, inc, double, neg.
    static Registries standard();
};

/// Totalize: an Adj node whose adjudicator comes back Undefined is collapsed
/// to Bottom, so deterministic evaluation never yields Undefined. Propagate
/// keeps Undefined as Undefined (the irreducible-term reading).
enum class PartialityMode { Totalize, Propagate };

/// Bottom-up deterministic evaluation. Adj nodes are strict: a Bottom child
/// forces Bottom (an Undefined child, possible only under Propagate, forces
/// Undefined). BinOps are strict per side; Funs are strict.
/// Unresolved names throw ConfigError.
Outcome eval(const Term& t, const Registries& reg,
             PartialityMode mode = PartialityMode::Totalize);

/// Choice semantics: an Adj node whose adjudicator is Undefined stands for
/// any of its bag's values, so evaluation returns the set of reachable
/// Outcomes. BinOp/Fun map over all combinations. Never empty.
std::set<Outcome> eval_nondet(const Term& t, const Registries& reg);

enum class AlgebraSemantics { Deterministic, Choice };

struct DistributionCheck {
    bool holds = true;
    AlgebraSemantics semantics = AlgebraSemantics::Deterministic;
    // Deterministic semantics fills the single outcomes, Choice the sets.
    std::optional<Outcome> lhs, rhs;
    std::optional<std::set<Outcome>> lhs_set, rhs_set;
};

/// Does a ⊗ Adj(b) equal Adj(a ⊗ · mapped over b)?  Deterministic semantics
/// evaluates with Totalize (so partial adjudicators act as their
/// error-totalized forms); Choice semantics compares reachable-outcome sets.
DistributionCheck check_left_distribution(const std::string& op, const Value& a, const Bag& b,
                                          const std::string& adj_name, const Registries& reg,
                                          AlgebraSemantics semantics);

/// Mirror image: Adj(b) ⊗ a versus Adj(· ⊗ a mapped over b).
DistributionCheck check_right_distribution(const std::string& op, const Bag& b, const Value& a,
                                           const std::string& adj_name, const Registries& reg,
                                           AlgebraSemantics semantics);

struct FunDistributionCheck {
    enum class Relation { Equal, LhsLessDefined, RhsLessDefined, Incomparable };
    Outcome lhs = Outcome::bottom();  // f applied after adjudication
    Outcome rhs = Outcome::bottom();  // adjudication of the mapped bag
    Relation relation = Relation::Equal;

    bool holds() const { return relation == Relation::Equal; }
};

/// f(adj(b)) versus adj(map f b), on the raw partial adjudicator, reporting
/// the definedness ordering when exactly one side is Defined.
FunDistributionCheck check_fun_distribution(const std::string& fn_name, const Bag& b,
                                            const Adjudicator& adj, const Registries& reg);

struct GerrymanderHit {
    std::vector<Bag> districts;
    Term nested;
    Outcome nested_result;
    Outcome flat_result;
};

/// Exhaustively enumerates district assignments (as multisets of
/// size-`district_size` bags over the universe) and reports those where
/// staged adjudication disagrees with adjudicating all leaves flat.
/// Throws ConfigError when the assignment space exceeds an internal budget.
std::vector<GerrymanderHit> gerrymander_search(const std::set<Value>& universe,
                                               std::size_t district_count,
                                               std::size_t district_size,
                                               const Adjudicator& adj);

}  // namespace adj
