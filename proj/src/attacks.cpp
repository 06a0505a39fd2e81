#include "argdec/attacks.hpp"

#include <algorithm>
#include <map>

namespace argdec {

const char* to_string(AttackKind k) {
    switch (k) {
        case AttackKind::Rebut: return "rebut";
        case AttackKind::Assumption: return "assumption";
        case AttackKind::Undercut: return "undercut";
    }
    return "?";
}

bool Framework::has_defeat(int attacker, int target) const {
    return std::any_of(defeats.begin(), defeats.end(), [&](const DefeatEdge& e) {
        return e.attacker == attacker && e.target == target;
    });
}

bool rebut_attacks(const Argument& a, const Argument& b) {
    for (const Literal& p : a.props) {
        if (b.props.count(negate(p))) return true;
    }
    return false;
}

namespace {

// Per-pair checks share these derived views of an argument.
struct ArgProfile {
    std::set<Literal> sub_conclusions;   // CONC over SUB
    std::set<Literal> assumptions;       // union over rules used
    std::set<std::string> defeasible_used; // defeasible rule ids applied in SUB
    std::set<std::string> undercuts;     // rule ids r with some sub concluding ~@r
};

class DefeatTester {
public:
    DefeatTester(const ArgumentSet& s, const Theory& t) : args_(s), theory_(t) {
        for (const Rule& r : t.strict_rules) rules_[r.id] = &r;
        for (const Rule& r : t.defeasible_rules) rules_[r.id] = &r;
        profiles_.resize(s.args.size());
    }

    const ArgProfile& profile(int id) {
        ArgProfile& p = profiles_[static_cast<size_t>(id)];
        if (!built_.count(id)) {
            built_.insert(id);
            const Argument& a = args_.at(id);
            for (int sub_id : a.subs) {
                const Argument& sub = args_.at(sub_id);
                p.sub_conclusions.insert(sub.conclusion);
                if (auto r = undercut_rule_id(sub.conclusion)) p.undercuts.insert(*r);
                if (sub.top_rule) {
                    auto it = rules_.find(*sub.top_rule);
                    if (it != rules_.end()) {
                        const Rule& rule = *it->second;
                        if (rule.kind == RuleKind::Defeasible) p.defeasible_used.insert(rule.id);
                        p.assumptions.insert(rule.assumptions.begin(), rule.assumptions.end());
                    }
                }
            }
        }
        return p;
    }

    // Least sub-argument of a whose conclusion is assumed negated by b.
    std::optional<int> assumption_attack(int a_id, int b_id) {
        const ArgProfile& pb = profile(b_id);
        if (pb.assumptions.empty()) return std::nullopt;
        const Argument& a = args_.at(a_id);
        for (int sub_id : a.subs) { // set iteration: ascending ids
            if (pb.assumptions.count(negate(args_.at(sub_id).conclusion))) return sub_id;
        }
        return std::nullopt;
    }

    // Assumed literals are scored as beliefs: the stratum of the assumption
    // in K, or the top of the scale when it is not a belief. The attack
    // succeeds unless that score strictly exceeds the certainty of the
    // attacking sub-argument.
    bool assumption_defeat(int a_id, int b_id) {
        const ArgProfile& pb = profile(b_id);
        if (pb.assumptions.empty()) return false;
        const Argument& a = args_.at(a_id);
        for (int sub_id : a.subs) {
            const Argument& sub = args_.at(sub_id);
            Literal assumed = negate(sub.conclusion);
            if (!pb.assumptions.count(assumed)) continue;
            int score = stratum_of(theory_, assumed).value_or(theory_.scale);
            if (score <= cert(sub, theory_)) return true;
        }
        return false;
    }

    bool undercut(int a_id, int b_id) {
        const ArgProfile& pa = profile(a_id);
        if (pa.undercuts.empty()) return false;
        const ArgProfile& pb = profile(b_id);
        for (const std::string& r : pa.undercuts) {
            if (pb.defeasible_used.count(r)) return true;
        }
        return false;
    }

    // Returns the kind of the first clause that defeats, if any. Property 2
    // is maintained by construction: an epistemic argument can only be
    // defeated by another epistemic argument (any undercut or assumption
    // attack carried inside a non-epistemic attacker is also carried by one
    // of its epistemic sub-arguments, which is itself in the argument set).
    std::optional<AttackKind> defeat_kind(int a_id, int b_id, const PreferencePolicy& policy) {
        const Argument& a = args_.at(a_id);
        const Argument& b = args_.at(b_id);
        if (b.category == Category::Epistemic && a.category != Category::Epistemic)
            return std::nullopt;
        if (rebut_attacks(a, b) &&
            prefers(b, a, policy, theory_) != PreferenceVerdict::StrictlyPreferred)
            return AttackKind::Rebut;
        if (assumption_defeat(a_id, b_id)) return AttackKind::Assumption;
        if (undercut(a_id, b_id)) return AttackKind::Undercut;
        return std::nullopt;
    }

private:
    const ArgumentSet& args_;
    const Theory& theory_;
    std::map<std::string, const Rule*> rules_;
    std::vector<ArgProfile> profiles_;
    std::set<int> built_;
};

} // namespace

std::optional<int> assumption_attacks(const Argument& a, const Argument& b, const ArgumentSet& s,
                                      const Theory& t) {
    return DefeatTester(s, t).assumption_attack(a.id, b.id);
}

bool undercut_attacks(const Argument& a, const Argument& b, const ArgumentSet& s,
                      const Theory& t) {
    return DefeatTester(s, t).undercut(a.id, b.id);
}

bool defeats(const Argument& a, const Argument& b, const PreferencePolicy& policy,
             const ArgumentSet& s, const Theory& t) {
    return DefeatTester(s, t).defeat_kind(a.id, b.id, policy).has_value();
}

Framework build_framework(const Theory& t, const PreferencePolicy& policy,
                          const BuildOptions& options) {
    Framework f;
    f.theory = t;
    f.policy = policy;
    f.args = build_arguments(t, options);
    DefeatTester tester(f.args, f.theory);
    int n = f.args.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (auto kind = tester.defeat_kind(i, j, policy))
                f.defeats.push_back({i, j, *kind});
        }
    }
    return f;
}

Framework epistemic_restriction(const Framework& f) {
    Framework out;
    out.theory = f.theory;
    out.policy = f.policy;
    std::map<int, int> remap;
    for (const Argument& a : f.args.args) {
        if (a.category != Category::Epistemic) continue;
        int new_id = static_cast<int>(out.args.args.size());
        remap[a.id] = new_id;
        Argument copy = a;
        copy.id = new_id;
        copy.subs.clear();
        for (int s : a.subs) copy.subs.insert(remap.at(s)); // subs precede their parent
        copy.premises.clear();
        for (int p : a.premises) copy.premises.push_back(remap.at(p));
        out.args.by_conclusion[copy.conclusion].push_back(new_id);
        out.args.args.push_back(std::move(copy));
    }
    for (const DefeatEdge& e : f.defeats) {
        auto a = remap.find(e.attacker);
        auto b = remap.find(e.target);
        if (a != remap.end() && b != remap.end())
            out.defeats.push_back({a->second, b->second, e.kind});
    }
    return out;
}

} // namespace argdec
