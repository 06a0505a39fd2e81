#ifndef ARGDEC_THEORY_HPP
#define ARGDEC_THEORY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace argdec {

// A signed atom. The language is closed under negation; rules are the only
// inference devices on top of it.
struct Literal {
    std::string atom;
    bool positive = true;

    bool operator==(const Literal& o) const {
        return atom == o.atom && positive == o.positive;
    }
    bool operator!=(const Literal& o) const { return !(*this == o); }
    // Canonical order: by atom, positive form first.
    bool operator<(const Literal& o) const {
        if (atom != o.atom) return atom < o.atom;
        return positive && !o.positive;
    }
};

Literal negate(const Literal& l);

// Convenience constructors; lit("~a") parses a leading '~'.
Literal lit(const std::string& text);
std::string to_string(const Literal& l);

enum class RuleKind { Strict, Defeasible };

struct Rule {
    std::string id;
    std::vector<Literal> body;        // ordered, possibly empty
    Literal head;
    RuleKind kind = RuleKind::Strict;
    std::vector<Literal> assumptions; // sorted, unique; only meaningful for defeasible rules

    bool operator==(const Rule& o) const {
        return id == o.id && body == o.body && head == o.head && kind == o.kind &&
               assumptions == o.assumptions;
    }
};

// Every defeasible rule r implicitly names an applicability atom "@r"; a
// derivation of "~@r" undercuts any argument built with r.
std::string applicability_atom(const std::string& rule_id);
// If l has the shape "~@r", returns r.
std::optional<std::string> undercut_rule_id(const Literal& l);

// The knowledge container: candidate decisions, stratified beliefs, graded
// positive/negative goals, and the strict/defeasible rule base. Grades live
// on the scale 1..n (level 0 is never stored). Immutable once finalized.
struct Theory {
    int scale = 1;                      // n, top of the certainty/importance scale
    std::set<std::string> decisions;    // D
    std::map<Literal, int> beliefs;     // K: literal -> stratum
    std::map<Literal, int> pos_goals;   // G+: literal -> importance
    std::map<Literal, int> neg_goals;   // G-
    std::vector<Rule> strict_rules;     // sorted by id after finalize_theory
    std::vector<Rule> defeasible_rules;

    bool operator==(const Theory& o) const {
        return scale == o.scale && decisions == o.decisions && beliefs == o.beliefs &&
               pos_goals == o.pos_goals && neg_goals == o.neg_goals &&
               strict_rules == o.strict_rules && defeasible_rules == o.defeasible_rules;
    }

    bool is_decision_atom(const std::string& atom) const {
        return decisions.count(atom) != 0;
    }
};

struct TheoryFault {
    enum class Kind { BadGrade, DuplicateId, RoleClash, BadRule };
    Kind kind;
    std::string message;
};

// Sorts rule lists by id, canonicalizes assumption sets, and validates all
// structural invariants. Returns the first fault found, if any.
std::optional<TheoryFault> finalize_theory(Theory& t);

// Validates one rule against t's declarations and canonicalizes its
// assumption list. seen_ids accumulates ids for uniqueness checking.
std::optional<TheoryFault> check_single_rule(const Theory& t, Rule& r,
                                             std::set<std::string>& seen_ids);

// Least fixed point of forward chaining with the given strict rules.
std::set<Literal> closure(const std::set<Literal>& facts, const std::vector<Rule>& strict_rules);

// True iff closure(facts) contains no literal together with its negation.
bool is_consistent(const std::set<Literal>& facts, const std::vector<Rule>& strict_rules);

// Certainty level of l in K, or nullopt when l is not a belief.
std::optional<int> stratum_of(const Theory& t, const Literal& l);

} // namespace argdec

#endif
