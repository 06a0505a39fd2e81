#include "argdec/theory.hpp"

#include <algorithm>
#include <cctype>

namespace argdec {

Literal negate(const Literal& l) { return Literal{l.atom, !l.positive}; }

Literal lit(const std::string& text) {
    if (!text.empty() && text[0] == '~') return Literal{text.substr(1), false};
    return Literal{text, true};
}

std::string to_string(const Literal& l) { return l.positive ? l.atom : "~" + l.atom; }

std::string applicability_atom(const std::string& rule_id) { return "@" + rule_id; }

std::optional<std::string> undercut_rule_id(const Literal& l) {
    if (!l.positive && l.atom.size() > 1 && l.atom[0] == '@') return l.atom.substr(1);
    return std::nullopt;
}

std::set<Literal> closure(const std::set<Literal>& facts, const std::vector<Rule>& strict_rules) {
    std::set<Literal> result = facts;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : strict_rules) {
            if (result.count(r.head)) continue;
            bool fires = true;
            for (const Literal& b : r.body) {
                if (!result.count(b)) { fires = false; break; }
            }
            if (fires) {
                result.insert(r.head);
                changed = true;
            }
        }
    }
    return result;
}

bool is_consistent(const std::set<Literal>& facts, const std::vector<Rule>& strict_rules) {
    std::set<Literal> cl = closure(facts, strict_rules);
    for (const Literal& l : cl) {
        if (l.positive && cl.count(negate(l))) return false;
    }
    return true;
}

std::optional<int> stratum_of(const Theory& t, const Literal& l) {
    auto it = t.beliefs.find(l);
    if (it == t.beliefs.end()) return std::nullopt;
    return it->second;
}

namespace {

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

// Atoms are identifiers, optionally with an '@' prefix naming a rule.
bool is_atom(const std::string& s) {
    if (!s.empty() && s[0] == '@') return is_ident(s.substr(1));
    return is_ident(s);
}

} // namespace

std::optional<TheoryFault> check_single_rule(const Theory& t, Rule& r,
                                             std::set<std::string>& seen_ids) {
    using K = TheoryFault::Kind;
    if (!is_ident(r.id))
        return TheoryFault{K::BadRule, "rule id '" + r.id + "' is not an identifier"};
    if (!seen_ids.insert(r.id).second)
        return TheoryFault{K::DuplicateId, "rule id '" + r.id + "' reused"};
    if (!is_atom(r.head.atom))
        return TheoryFault{K::BadRule, "rule '" + r.id + "': bad head atom '" + r.head.atom + "'"};
    int body_decisions = 0;
    for (const Literal& b : r.body) {
        if (!is_atom(b.atom))
            return TheoryFault{K::BadRule, "rule '" + r.id + "': bad atom '" + b.atom + "'"};
        if (b == r.head)
            return TheoryFault{K::BadRule, "rule '" + r.id + "': head appears in body"};
        if (t.is_decision_atom(b.atom)) {
            if (!b.positive)
                return TheoryFault{K::BadRule,
                                   "rule '" + r.id + "': negated decision atom in body"};
            ++body_decisions;
        }
    }
    if (body_decisions > 1)
        return TheoryFault{K::BadRule,
                           "rule '" + r.id + "': more than one decision atom in body"};
    if (t.is_decision_atom(r.head.atom)) {
        if (!r.head.positive)
            return TheoryFault{K::BadRule, "rule '" + r.id + "': negated decision atom as head"};
    }
    std::sort(r.assumptions.begin(), r.assumptions.end());
    r.assumptions.erase(std::unique(r.assumptions.begin(), r.assumptions.end()),
                        r.assumptions.end());
    for (const Literal& a : r.assumptions) {
        if (!is_atom(a.atom))
            return TheoryFault{K::BadRule, "rule '" + r.id + "': bad assumption '" + a.atom + "'"};
    }
    return std::nullopt;
}

namespace {

std::optional<TheoryFault> check_graded(const Theory& t, const std::map<Literal, int>& base,
                                        const char* what) {
    using K = TheoryFault::Kind;
    for (const auto& [l, grade] : base) {
        if (!is_atom(l.atom))
            return TheoryFault{K::RoleClash, std::string(what) + " '" + to_string(l) +
                                                 "' is not a well-formed literal"};
        if (grade < 1 || grade > t.scale)
            return TheoryFault{K::BadGrade, std::string(what) + " '" + to_string(l) + "' has grade " +
                                                std::to_string(grade) + " outside 1.." +
                                                std::to_string(t.scale)};
        if (t.is_decision_atom(l.atom))
            return TheoryFault{K::RoleClash, "decision atom '" + l.atom + "' used as " + what};
    }
    return std::nullopt;
}

} // namespace

std::optional<TheoryFault> finalize_theory(Theory& t) {
    using K = TheoryFault::Kind;
    if (t.scale < 1)
        return TheoryFault{K::BadGrade, "scale must be at least 1"};
    for (const std::string& d : t.decisions) {
        if (!is_ident(d))
            return TheoryFault{K::RoleClash, "decision '" + d + "' is not an identifier"};
    }
    if (auto f = check_graded(t, t.beliefs, "belief")) return f;
    if (auto f = check_graded(t, t.pos_goals, "goal+")) return f;
    if (auto f = check_graded(t, t.neg_goals, "goal-")) return f;
    for (const auto& [l, grade] : t.pos_goals) {
        (void)grade;
        if (t.neg_goals.count(l))
            return TheoryFault{K::RoleClash,
                               "literal '" + to_string(l) + "' is both a positive and a negative goal"};
    }
    auto by_id = [](const Rule& a, const Rule& b) { return a.id < b.id; };
    std::sort(t.strict_rules.begin(), t.strict_rules.end(), by_id);
    std::sort(t.defeasible_rules.begin(), t.defeasible_rules.end(), by_id);
    std::set<std::string> seen_ids;
    for (Rule& r : t.strict_rules) {
        r.kind = RuleKind::Strict;
        if (auto f = check_single_rule(t, r, seen_ids)) return f;
    }
    for (Rule& r : t.defeasible_rules) {
        r.kind = RuleKind::Defeasible;
        if (auto f = check_single_rule(t, r, seen_ids)) return f;
    }
    return std::nullopt;
}

} // namespace argdec
