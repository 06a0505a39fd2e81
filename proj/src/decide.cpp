#include "argdec/decide.hpp"

#include <algorithm>
#include <stdexcept>

namespace argdec {

const char* to_string(Attitude a) {
    return a == Attitude::Pessimistic ? "pessimistic" : "optimistic";
}

const char* to_string(DecisionComparison c) {
    switch (c) {
        case DecisionComparison::Better: return "better";
        case DecisionComparison::Equivalent: return "equivalent";
        case DecisionComparison::Worse: return "worse";
    }
    return "?";
}

InferenceResult output(const Framework& f, SemanticsKind sem) {
    InferenceResult result;
    result.semantics_used = sem;
    ExtensionSet exts = extensions(f, sem);
    if (exts.extensions.empty()) {
        result.warnings.push_back(std::string(to_string(sem)) +
                                  " semantics yields no extension; output is empty");
        return result;
    }
    bool first = true;
    for (const std::vector<int>& ext : exts.extensions) {
        std::set<Literal> concs;
        for (int id : ext) {
            const Argument& a = f.args.at(id);
            if (a.category == Category::Epistemic) concs.insert(a.conclusion);
        }
        if (first) {
            result.output = std::move(concs);
            first = false;
        } else {
            std::set<Literal> kept;
            std::set_intersection(result.output.begin(), result.output.end(), concs.begin(),
                                  concs.end(), std::inserter(kept, kept.begin()));
            result.output = std::move(kept);
        }
        if (result.output.empty()) break;
    }
    return result;
}

std::vector<int> sort_by_preference(std::vector<int> ids, const Framework& f) {
    // Insertion sort with explicit verdicts: stays deterministic even where
    // the pairwise relation is not transitive across categories.
    std::vector<int> sorted;
    std::sort(ids.begin(), ids.end());
    for (int id : ids) {
        size_t pos = 0;
        while (pos < sorted.size()) {
            PreferenceVerdict v =
                prefers(f.args.at(id), f.args.at(sorted[pos]), f.policy, f.theory);
            if (v == PreferenceVerdict::StrictlyPreferred) break;
            ++pos;
        }
        sorted.insert(sorted.begin() + static_cast<long>(pos), id);
    }
    return sorted;
}

namespace {

// One-directional test of the lexicographic ranking clauses; asymmetric by
// construction.
bool outranks(const std::vector<int>& mine, const std::vector<int>& theirs, const Framework& f,
              Attitude attitude) {
    size_t v = std::min(mine.size(), theirs.size());
    for (size_t k = 0; k < v; ++k) {
        PreferenceVerdict verdict =
            prefers(f.args.at(mine[k]), f.args.at(theirs[k]), f.policy, f.theory);
        if (attitude == Attitude::Pessimistic) {
            // Stronger pro argument at the first differing position wins.
            if (verdict == PreferenceVerdict::StrictlyPreferred) return true;
            if (verdict != PreferenceVerdict::Equivalent) return false;
        } else {
            // Weaker own con argument at the first differing position wins.
            if (verdict == PreferenceVerdict::StrictlyDispreferred) return true;
            if (verdict != PreferenceVerdict::Equivalent) return false;
        }
    }
    if (attitude == Attitude::Pessimistic) return mine.size() > v; // more pros win
    return theirs.size() > v;                                      // fewer cons win
}

std::vector<int> justifying_arguments(const std::string& d, const std::set<int>& pool,
                                      const Framework& f, Attitude attitude) {
    std::vector<int> ids = attitude == Attitude::Pessimistic ? args_pro(d, pool, f.args)
                                                             : args_cons(d, pool, f.args);
    return sort_by_preference(std::move(ids), f);
}

} // namespace

DecisionComparison compare_decisions(const std::string& d1, const std::string& d2,
                                     const std::set<int>& extension, const Framework& f,
                                     Attitude attitude) {
    if (!f.theory.is_decision_atom(d1))
        throw std::invalid_argument("unknown decision '" + d1 + "'");
    if (!f.theory.is_decision_atom(d2))
        throw std::invalid_argument("unknown decision '" + d2 + "'");
    std::vector<int> v1 = justifying_arguments(d1, extension, f, attitude);
    std::vector<int> v2 = justifying_arguments(d2, extension, f, attitude);
    bool d1_better = outranks(v1, v2, f, attitude);
    bool d2_better = outranks(v2, v1, f, attitude);
    if (d1_better && !d2_better) return DecisionComparison::Better;
    if (d2_better && !d1_better) return DecisionComparison::Worse;
    return DecisionComparison::Equivalent;
}

namespace {

std::set<int> ranking_pool(const Framework& f, SemanticsKind sem,
                           std::vector<std::string>& warnings) {
    if (sem == SemanticsKind::Grounded) {
        return grounded_extension(f);
    }
    ExtensionSet exts = extensions(f, sem);
    if (exts.extensions.empty()) {
        warnings.push_back(std::string(to_string(sem)) +
                           " semantics yields no extension; ranking over an empty pool");
        return {};
    }
    if (exts.extensions.size() == 1)
        return std::set<int>(exts.extensions[0].begin(), exts.extensions[0].end());
    std::set<int> pool(exts.extensions[0].begin(), exts.extensions[0].end());
    for (size_t i = 1; i < exts.extensions.size(); ++i) {
        std::set<int> next(exts.extensions[i].begin(), exts.extensions[i].end());
        std::set<int> kept;
        std::set_intersection(pool.begin(), pool.end(), next.begin(), next.end(),
                              std::inserter(kept, kept.begin()));
        pool = std::move(kept);
    }
    warnings.push_back("ranking over the intersection of " +
                       std::to_string(exts.extensions.size()) + " " + to_string(sem) +
                       " extensions");
    return pool;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

DecisionRanking rank_decisions(const Framework& f, Attitude attitude, SemanticsKind sem) {
    DecisionRanking ranking;
    ranking.attitude = attitude;
    std::set<int> pool = ranking_pool(f, sem, ranking.warnings);
    ranking.pool.assign(pool.begin(), pool.end());

    std::vector<std::string> decisions(f.theory.decisions.begin(), f.theory.decisions.end());
    for (const std::string& d : decisions) {
        DecisionJustification j;
        j.arguments = justifying_arguments(d, pool, f, attitude);
        for (int id : j.arguments) j.forces.push_back(force(f.args.at(id), f.theory));
        ranking.justification[d] = std::move(j);
    }
    if (decisions.empty()) return ranking;

    size_t n = decisions.size();
    std::vector<int> wins(n, 0);
    UnionFind groups(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            DecisionComparison c = compare_decisions(decisions[i], decisions[j], pool, f, attitude);
            if (c == DecisionComparison::Better) ++wins[i];
            else if (c == DecisionComparison::Worse) ++wins[j];
            else groups.merge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    std::map<int, std::vector<size_t>> members;
    for (size_t i = 0; i < n; ++i) members[groups.find(static_cast<int>(i))].push_back(i);

    struct Group {
        int best_wins;
        std::vector<std::string> names;
    };
    std::vector<Group> out;
    for (const auto& [root, idxs] : members) {
        (void)root;
        Group g;
        g.best_wins = 0;
        for (size_t i : idxs) {
            g.best_wins = std::max(g.best_wins, wins[i]);
            g.names.push_back(decisions[i]);
        }
        std::sort(g.names.begin(), g.names.end());
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
        if (a.best_wins != b.best_wins) return a.best_wins > b.best_wins;
        return a.names.front() < b.names.front();
    });
    for (Group& g : out) ranking.order.push_back(std::move(g.names));
    return ranking;
}

EquivalenceReport frameworks_equivalent(const Framework& f1, const Framework& f2,
                                        SemanticsKind sem, Attitude attitude) {
    if (f1.theory.decisions != f2.theory.decisions)
        throw std::invalid_argument("frameworks range over different decision sets");
    EquivalenceReport report;
    report.output_equal = output(f1, sem).output == output(f2, sem).output;

    std::vector<std::string> dummy_warnings;
    std::set<int> pool1 = ranking_pool(f1, sem, dummy_warnings);
    std::set<int> pool2 = ranking_pool(f2, sem, dummy_warnings);
    report.ranking_equal = true;
    for (const std::string& d1 : f1.theory.decisions) {
        for (const std::string& d2 : f1.theory.decisions) {
            bool better1 =
                compare_decisions(d1, d2, pool1, f1, attitude) == DecisionComparison::Better;
            bool better2 =
                compare_decisions(d1, d2, pool2, f2, attitude) == DecisionComparison::Better;
            if (better1 != better2) {
                report.ranking_equal = false;
                return report;
            }
        }
    }
    return report;
}

} // namespace argdec
