#include "argdec/arguments.hpp"

#include <algorithm>
#include <map>

namespace argdec {

const char* to_string(Category c) {
    switch (c) {
        case Category::Epistemic: return "epistemic";
        case Category::Recommending: return "recommending";
        case Category::Decision: return "decision";
    }
    return "?";
}

namespace {

// Structural identity: atomic arguments by conclusion, rule applications by
// (rule, set of direct sub-arguments).
struct ArgKey {
    std::string rule;        // empty for atomic
    Literal conclusion;      // significant for atomic only
    std::vector<int> children; // sorted unique

    bool operator<(const ArgKey& o) const {
        if (rule != o.rule) return rule < o.rule;
        if (conclusion != o.conclusion) return conclusion < o.conclusion;
        return children < o.children;
    }
};

class Builder {
public:
    Builder(const Theory& t, const BuildOptions& options) : theory_(t), options_(options) {
        work_limit_ = std::max<long>(1000000L, 64L * options_.max_arguments);
    }

    ArgumentSet run() {
        for (const auto& [belief, grade] : theory_.beliefs) {
            (void)grade;
            add_atomic(belief);
        }
        saturate_epistemic();
        non_epistemic_pass();
        ArgumentSet out;
        out.args = std::move(args_);
        for (const Argument& a : out.args) {
            out.by_conclusion[a.conclusion].push_back(a.id);
            if (a.decision_atom) out.by_decision[*a.decision_atom].push_back(a.id);
        }
        return out;
    }

private:
    void check_capacity() {
        if (static_cast<int>(args_.size()) >= options_.max_arguments)
            throw ConstructionOverflow("argument cap of " +
                                       std::to_string(options_.max_arguments) + " exceeded");
    }

    void spend_work() {
        if (--work_limit_ < 0)
            throw ConstructionOverflow("rule grounding work limit exceeded");
    }

    int add_atomic(const Literal& l) {
        check_capacity();
        Argument a;
        a.id = static_cast<int>(args_.size());
        a.conclusion = l;
        a.props = {l};
        a.subs = {a.id};
        a.category = Category::Epistemic;
        conclusions_below_.push_back({l});
        dedup_[ArgKey{"", l, {}}] = a.id;
        epistemic_by_conclusion_[l].push_back(a.id);
        args_.push_back(std::move(a));
        return static_cast<int>(args_.size()) - 1;
    }

    // True when every body literal is a non-decision atom, i.e. the rule can
    // participate in epistemic derivations.
    bool body_is_epistemic(const Rule& r) const {
        for (const Literal& b : r.body)
            if (theory_.is_decision_atom(b.atom)) return false;
        return true;
    }

    bool try_apply(const Rule& r, const std::vector<int>& children, Category category) {
        spend_work();
        Literal conclusion = r.head;
        std::optional<Literal> decision;
        if (category == Category::Decision) {
            for (const Literal& b : r.body) {
                if (theory_.is_decision_atom(b.atom)) { decision = b; break; }
            }
            conclusion = *decision;
        }
        ArgKey key;
        key.rule = r.id;
        key.children = children;
        std::sort(key.children.begin(), key.children.end());
        key.children.erase(std::unique(key.children.begin(), key.children.end()),
                           key.children.end());
        if (dedup_.count(key)) return false;
        // Finiteness guard: no branch may re-derive a conclusion it already
        // contains. Vacuous for recommending/decision arguments, whose
        // conclusion is a decision atom no epistemic sub-argument concludes.
        for (int c : children)
            if (conclusions_below_[static_cast<size_t>(c)].count(conclusion)) return false;

        check_capacity();
        Argument a;
        a.id = static_cast<int>(args_.size());
        a.conclusion = conclusion;
        a.top_rule = r.id;
        a.premises = children;
        a.category = category;
        std::set<Literal> below;
        for (int c : children) {
            const Argument& sub = args_[static_cast<size_t>(c)];
            a.props.insert(sub.props.begin(), sub.props.end());
            a.subs.insert(sub.subs.begin(), sub.subs.end());
            const auto& cb = conclusions_below_[static_cast<size_t>(c)];
            below.insert(cb.begin(), cb.end());
        }
        a.props.insert(r.head);
        a.subs.insert(a.id);
        below.insert(conclusion);
        if (category == Category::Recommending) {
            a.decision_atom = r.head.atom;
        } else if (category == Category::Decision) {
            a.decision_atom = decision->atom;
            a.props.insert(*decision);
            if (theory_.pos_goals.count(r.head)) a.goals_pos = {r.head};
            else a.goals_neg = {r.head};
        }
        dedup_[key] = a.id;
        conclusions_below_.push_back(std::move(below));
        if (category == Category::Epistemic)
            epistemic_by_conclusion_[a.conclusion].push_back(a.id);
        args_.push_back(std::move(a));
        return true;
    }

    // Enumerates every tuple of existing epistemic arguments matching the
    // body literals (decision atoms skipped) and applies the rule.
    bool ground_rule(const Rule& r, Category category) {
        std::vector<const std::vector<int>*> pools;
        for (const Literal& b : r.body) {
            if (theory_.is_decision_atom(b.atom)) continue;
            auto it = epistemic_by_conclusion_.find(b);
            if (it == epistemic_by_conclusion_.end()) return false;
            pools.push_back(&it->second);
        }
        bool added = false;
        std::vector<size_t> index(pools.size(), 0);
        std::vector<int> children(pools.size(), 0);
        while (true) {
            for (size_t i = 0; i < pools.size(); ++i) children[i] = (*pools[i])[index[i]];
            if (try_apply(r, children, category)) added = true;
            size_t pos = 0;
            for (; pos < pools.size(); ++pos) {
                if (++index[pos] < pools[pos]->size()) break;
                index[pos] = 0;
            }
            if (pos == pools.size()) break;
        }
        return added;
    }

    void saturate_epistemic() {
        std::vector<const Rule*> usable;
        for (const Rule& r : theory_.strict_rules)
            if (body_is_epistemic(r) && !theory_.is_decision_atom(r.head.atom))
                usable.push_back(&r);
        for (const Rule& r : theory_.defeasible_rules)
            if (body_is_epistemic(r) && !theory_.is_decision_atom(r.head.atom))
                usable.push_back(&r);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Rule* r : usable)
                if (ground_rule(*r, Category::Epistemic)) changed = true;
        }
    }

    // Recommending and decision arguments never feed further construction:
    // their conclusions are decision atoms, which no epistemic rule consumes.
    void non_epistemic_pass() {
        std::vector<const Rule*> all;
        for (const Rule& r : theory_.strict_rules) all.push_back(&r);
        for (const Rule& r : theory_.defeasible_rules) all.push_back(&r);
        for (const Rule* r : all) {
            bool head_is_decision = theory_.is_decision_atom(r->head.atom);
            int body_decisions = 0;
            for (const Literal& b : r->body)
                if (theory_.is_decision_atom(b.atom)) ++body_decisions;
            if (head_is_decision && body_decisions == 0) {
                ground_rule(*r, Category::Recommending);
            } else if (!head_is_decision && body_decisions == 1 &&
                       (theory_.pos_goals.count(r->head) || theory_.neg_goals.count(r->head))) {
                ground_rule(*r, Category::Decision);
            }
        }
    }

    const Theory& theory_;
    BuildOptions options_;
    long work_limit_;
    std::vector<Argument> args_;
    std::vector<std::set<Literal>> conclusions_below_; // per argument, CONC over SUB
    std::map<ArgKey, int> dedup_;
    std::map<Literal, std::vector<int>> epistemic_by_conclusion_;
};

} // namespace

ArgumentSet build_arguments(const Theory& t, const BuildOptions& options) {
    return Builder(t, options).run();
}

std::vector<int> args_pro(const std::string& d, const std::set<int>& pool, const ArgumentSet& s) {
    if (pool.empty()) return {};
    std::vector<int> out;
    Literal conc{d, true};
    for (int id : pool) {
        const Argument& a = s.at(id);
        if (a.conclusion != conc) continue;
        if (!a.goals_neg.empty()) continue; // arguments against d are never pro
        if (!a.goals_pos.empty() || a.props.count(conc)) out.push_back(id);
    }
    return out;
}

std::vector<int> args_cons(const std::string& d, const std::set<int>& pool, const ArgumentSet& s) {
    std::vector<int> out;
    Literal conc{d, true};
    for (int id : pool) {
        const Argument& a = s.at(id);
        if (a.conclusion == conc && !a.goals_neg.empty()) out.push_back(id);
    }
    return out;
}

std::set<int> subarguments(int id, const ArgumentSet& s) { return s.at(id).subs; }

} // namespace argdec
