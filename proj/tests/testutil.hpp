#ifndef ARGDEC_TESTS_TESTUTIL_HPP
#define ARGDEC_TESTS_TESTUTIL_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "argdec/attacks.hpp"
#include "argdec/parser.hpp"

namespace argdec::testutil {

inline Theory must_parse(const std::string& text) {
    ParseResult r = parse_theory(text);
    if (!r.ok())
        throw std::runtime_error("test theory failed to parse: " + r.error->message + " at line " +
                                 std::to_string(r.error->span.line));
    return *r.theory;
}

inline Framework framework_from_dsl(const std::string& text, PreferencePolicy policy = {}) {
    return build_framework(must_parse(text), policy);
}

// A framework whose defeat graph is given directly; the arguments are n
// atomic epistemic placeholders. Suits semantics-level tests that only care
// about the graph.
inline Framework synthetic_framework(int n, const std::vector<std::pair<int, int>>& edges) {
    Framework f;
    f.theory.scale = 1;
    for (int i = 0; i < n; ++i) {
        Literal l{"x" + std::to_string(i), true};
        f.theory.beliefs[l] = 1;
        Argument a;
        a.id = i;
        a.conclusion = l;
        a.props = {l};
        a.subs = {i};
        f.args.by_conclusion[l].push_back(i);
        f.args.args.push_back(std::move(a));
    }
    for (auto [from, to] : edges) f.defeats.push_back({from, to, AttackKind::Rebut});
    std::sort(f.defeats.begin(), f.defeats.end(), [](const DefeatEdge& a, const DefeatEdge& b) {
        return a.attacker != b.attacker ? a.attacker < b.attacker : a.target < b.target;
    });
    return f;
}

inline Framework random_synthetic_framework(std::mt19937& rng, int max_args = 12) {
    int n = std::uniform_int_distribution<int>(0, max_args)(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double p = 0.05 + 0.35 * unit(rng);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double prob = i == j ? p / 4 : p; // keep self-defeaters rare but present
            if (unit(rng) < prob) edges.emplace_back(i, j);
        }
    }
    return synthetic_framework(n, edges);
}

struct TheoryGenOptions {
    int max_atoms = 8;
    int max_rules = 10;
    int max_strata = 3;
    bool with_decisions = true;
    double strict_prob = 0.4;
    bool with_assumptions = false;
    bool with_undercut_heads = false;
};

// Valid random theories: belief atoms a*, goal atoms g*, decision atoms d*.
// Rules mix epistemic, recommending and decision shapes.
inline Theory random_theory(std::mt19937& rng, const TheoryGenOptions& o = {}) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    Theory t;
    t.scale = pick(1, o.max_strata);
    int atom_count = pick(2, std::max(2, o.max_atoms));
    std::vector<std::string> atoms;
    for (int i = 0; i < atom_count; ++i) atoms.push_back("a" + std::to_string(i));
    std::vector<std::string> goal_atoms = {"g0", "g1", "g2"};

    for (const std::string& a : atoms) {
        if (unit(rng) < 0.5) {
            Literal l{a, unit(rng) < 0.75};
            t.beliefs[l] = pick(1, t.scale);
            if (unit(rng) < 0.15) t.beliefs[negate(l)] = pick(1, t.scale);
        }
    }

    int n_decisions = o.with_decisions ? pick(0, 2) : 0;
    for (int i = 0; i < n_decisions; ++i) t.decisions.insert("d" + std::to_string(i));
    std::vector<std::string> decisions(t.decisions.begin(), t.decisions.end());

    if (o.with_decisions) {
        for (int i = 0; i < 3; ++i) {
            if (unit(rng) < 0.4) {
                Literal l{goal_atoms[static_cast<size_t>(pick(0, 2))], unit(rng) < 0.7};
                if (!t.pos_goals.count(l) && !t.neg_goals.count(l)) {
                    (unit(rng) < 0.6 ? t.pos_goals : t.neg_goals)[l] = pick(1, t.scale);
                }
            }
        }
    }

    auto random_literal = [&](const std::vector<std::string>& pool) {
        return Literal{pool[static_cast<size_t>(pick(0, static_cast<int>(pool.size()) - 1))],
                       unit(rng) < 0.7};
    };

    int n_rules = pick(0, o.max_rules);
    for (int i = 0; i < n_rules; ++i) {
        Rule r;
        r.id = "r" + std::to_string(i);
        r.kind = unit(rng) < o.strict_prob ? RuleKind::Strict : RuleKind::Defeasible;
        double shape = unit(rng);
        if (!decisions.empty() && shape < 0.25) {
            // decision rule: epistemic premises + one decision atom -> goal literal
            int body_len = pick(0, 2);
            for (int b = 0; b < body_len; ++b) r.body.push_back(random_literal(atoms));
            r.body.push_back(
                Literal{decisions[static_cast<size_t>(pick(0, static_cast<int>(decisions.size()) - 1))],
                        true});
            r.head = random_literal(goal_atoms);
        } else if (!decisions.empty() && shape < 0.35) {
            // recommending rule
            int body_len = pick(1, 2);
            for (int b = 0; b < body_len; ++b) r.body.push_back(random_literal(atoms));
            r.head =
                Literal{decisions[static_cast<size_t>(pick(0, static_cast<int>(decisions.size()) - 1))],
                        true};
        } else {
            int body_len = pick(0, 2);
            for (int b = 0; b < body_len; ++b) r.body.push_back(random_literal(atoms));
            if (o.with_undercut_heads && unit(rng) < 0.2) {
                r.head = Literal{"@r" + std::to_string(pick(0, o.max_rules - 1)), false};
            } else if (unit(rng) < 0.2) {
                r.head = random_literal(goal_atoms);
            } else {
                r.head = random_literal(atoms);
            }
        }
        bool self_support = false;
        for (const Literal& b : r.body) self_support = self_support || b == r.head;
        if (self_support) continue;
        if (o.with_assumptions && r.kind == RuleKind::Defeasible && unit(rng) < 0.3)
            r.assumptions.push_back(random_literal(atoms));
        (r.kind == RuleKind::Strict ? t.strict_rules : t.defeasible_rules).push_back(std::move(r));
    }

    if (auto fault = finalize_theory(t))
        throw std::runtime_error("generator produced an invalid theory: " + fault->message);
    return t;
}

// The degenerate shape where every argument is a decision argument and the
// defeat relation is empty: no beliefs, only defeasible rules of the form
// "d => goal", and goals over distinct atoms so no propositions clash.
inline Theory random_possibilistic_theory(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Theory t;
    t.scale = pick(2, 5);
    int n_decisions = pick(1, 3);
    for (int i = 0; i < n_decisions; ++i) t.decisions.insert("d" + std::to_string(i));
    std::vector<std::string> decisions(t.decisions.begin(), t.decisions.end());
    int n_goals = pick(1, 4);
    for (int i = 0; i < n_goals; ++i) {
        Literal g{"g" + std::to_string(i), true};
        (unit(rng) < 0.6 ? t.pos_goals : t.neg_goals)[g] = pick(1, t.scale);
    }
    int rule_n = 0;
    for (const std::string& d : decisions) {
        for (int i = 0; i < n_goals; ++i) {
            if (unit(rng) < 0.55) {
                Rule r;
                r.id = "r" + std::to_string(rule_n++);
                r.kind = RuleKind::Defeasible;
                r.body = {Literal{d, true}};
                r.head = Literal{"g" + std::to_string(i), true};
                t.defeasible_rules.push_back(std::move(r));
            }
        }
    }
    if (auto fault = finalize_theory(t))
        throw std::runtime_error("generator produced an invalid theory: " + fault->message);
    return t;
}

} // namespace argdec::testutil

#endif
