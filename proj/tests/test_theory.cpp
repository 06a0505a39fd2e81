#include <doctest.h>

#include <random>

#include "argdec/theory.hpp"
#include "testutil.hpp"

using namespace argdec;

TEST_CASE("negation flips polarity and is an involution") {
    CHECK(negate(lit("a")) == lit("~a"));
    CHECK(negate(lit("~a")) == lit("a"));
    CHECK(negate(negate(lit("b"))) == lit("b"));
}

TEST_CASE("closure reaches the least fixed point") {
    std::vector<Rule> rules{
        {"r1", {lit("a")}, lit("b"), RuleKind::Strict, {}},
        {"r2", {lit("b")}, lit("c"), RuleKind::Strict, {}},
    };
    CHECK(closure({}, rules).empty());
    CHECK(closure({lit("a")}, rules) == std::set<Literal>{lit("a"), lit("b"), lit("c")});

    std::vector<Rule> two_premises{{"r1", {lit("a"), lit("b")}, lit("c"), RuleKind::Strict, {}}};
    CHECK(closure({lit("a")}, two_premises) == std::set<Literal>{lit("a")});
}

TEST_CASE("consistency is checked on the closure") {
    CHECK(is_consistent({}, {}));
    CHECK_FALSE(is_consistent({lit("a"), lit("~a")}, {}));
    std::vector<Rule> rules{
        {"r1", {lit("a")}, lit("b"), RuleKind::Strict, {}},
        {"r2", {lit("a")}, lit("~b"), RuleKind::Strict, {}},
    };
    CHECK_FALSE(is_consistent({lit("a")}, rules));
}

TEST_CASE("stratum lookup") {
    Theory t;
    t.scale = 3;
    t.beliefs[lit("a")] = 3;
    t.beliefs[lit("~a")] = 1; // contradictory beliefs at distinct strata are fine
    REQUIRE(finalize_theory(t) == std::nullopt);
    CHECK(stratum_of(t, lit("a")) == 3);
    CHECK(stratum_of(t, lit("~a")) == 1);
    CHECK_FALSE(stratum_of(t, lit("b")).has_value());
}

TEST_CASE("closure is extensive, monotone and idempotent") {
    std::mt19937 rng(7401);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> atom(0, 5);
    auto random_lit = [&] { return Literal{"a" + std::to_string(atom(rng)), coin(rng) == 0}; };
    for (int round = 0; round < 200; ++round) {
        std::vector<Rule> rules;
        int n_rules = atom(rng);
        for (int i = 0; i < n_rules; ++i) {
            Rule r{"r" + std::to_string(i), {}, random_lit(), RuleKind::Strict, {}};
            int body = atom(rng) % 3;
            for (int b = 0; b < body; ++b) r.body.push_back(random_lit());
            rules.push_back(std::move(r));
        }
        std::set<Literal> f, g;
        int n_facts = atom(rng);
        for (int i = 0; i < n_facts; ++i) f.insert(random_lit());
        g = f;
        g.insert(random_lit());

        std::set<Literal> cf = closure(f, rules);
        std::set<Literal> cg = closure(g, rules);
        CHECK(std::includes(cf.begin(), cf.end(), f.begin(), f.end()));
        CHECK(std::includes(cg.begin(), cg.end(), cf.begin(), cf.end()));
        CHECK(closure(cf, rules) == cf);
    }
}

TEST_CASE("positive-only bases are always consistent") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> atom(0, 4);
    for (int round = 0; round < 100; ++round) {
        std::vector<Rule> rules;
        for (int i = 0; i < 4; ++i) {
            Rule r{"r" + std::to_string(i),
                   {Literal{"a" + std::to_string(atom(rng)), true}},
                   Literal{"a" + std::to_string(atom(rng)), true},
                   RuleKind::Strict,
                   {}};
            if (r.body[0] == r.head) continue;
            rules.push_back(std::move(r));
        }
        std::set<Literal> facts;
        for (int i = 0; i < 3; ++i) facts.insert(Literal{"a" + std::to_string(atom(rng)), true});
        CHECK(is_consistent(facts, rules));
    }
}

TEST_CASE("validation rejects out-of-range grades") {
    Theory t;
    t.scale = 3;
    t.beliefs[lit("a")] = 4;
    auto fault = finalize_theory(t);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::BadGrade);

    Theory zero;
    zero.pos_goals[lit("g")] = 0;
    fault = finalize_theory(zero);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::BadGrade);
}

TEST_CASE("validation rejects decision atoms among beliefs and goals") {
    Theory t;
    t.decisions.insert("u");
    t.beliefs[lit("u")] = 1;
    auto fault = finalize_theory(t);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::RoleClash);

    Theory g;
    g.decisions.insert("u");
    g.neg_goals[lit("~u")] = 1;
    fault = finalize_theory(g);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::RoleClash);
}

TEST_CASE("validation rejects malformed rules") {
    Theory self;
    self.strict_rules.push_back({"r1", {lit("a")}, lit("a"), RuleKind::Strict, {}});
    auto fault = finalize_theory(self);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::BadRule);

    Theory dup;
    dup.strict_rules.push_back({"r1", {}, lit("a"), RuleKind::Strict, {}});
    dup.defeasible_rules.push_back({"r1", {}, lit("b"), RuleKind::Defeasible, {}});
    fault = finalize_theory(dup);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::DuplicateId);

    Theory two_decisions;
    two_decisions.decisions = {"u", "v"};
    two_decisions.pos_goals[lit("g")] = 1;
    two_decisions.defeasible_rules.push_back(
        {"r1", {lit("u"), lit("v")}, lit("g"), RuleKind::Defeasible, {}});
    fault = finalize_theory(two_decisions);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::BadRule);

    Theory negated_decision;
    negated_decision.decisions = {"u"};
    negated_decision.defeasible_rules.push_back(
        {"r1", {lit("~u")}, lit("g"), RuleKind::Defeasible, {}});
    fault = finalize_theory(negated_decision);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::BadRule);

    Theory negated_head;
    negated_head.decisions = {"u"};
    negated_head.defeasible_rules.push_back({"r1", {lit("a")}, lit("~u"), RuleKind::Defeasible, {}});
    fault = finalize_theory(negated_head);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::BadRule);
}

TEST_CASE("validation rejects a literal graded as both goal kinds") {
    Theory t;
    t.pos_goals[lit("g")] = 1;
    t.neg_goals[lit("g")] = 1;
    auto fault = finalize_theory(t);
    REQUIRE(fault.has_value());
    CHECK(fault->kind == TheoryFault::Kind::RoleClash);
}

TEST_CASE("random theories from the shared generator are valid") {
    std::mt19937 rng(20260810);
    for (int i = 0; i < 50; ++i) {
        Theory t = testutil::random_theory(rng);
        CHECK(finalize_theory(t) == std::nullopt);
    }
}
