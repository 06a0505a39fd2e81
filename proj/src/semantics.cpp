#include "argdec/semantics.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

namespace argdec {

const char* to_string(SemanticsKind s) {
    switch (s) {
        case SemanticsKind::Admissible: return "admissible";
        case SemanticsKind::Preferred: return "preferred";
        case SemanticsKind::Complete: return "complete";
        case SemanticsKind::Stable: return "stable";
        case SemanticsKind::Grounded: return "grounded";
    }
    return "?";
}

std::optional<SemanticsKind> semantics_from_name(const std::string& name) {
    if (name == "admissible") return SemanticsKind::Admissible;
    if (name == "preferred") return SemanticsKind::Preferred;
    if (name == "complete") return SemanticsKind::Complete;
    if (name == "stable") return SemanticsKind::Stable;
    if (name == "grounded") return SemanticsKind::Grounded;
    return std::nullopt;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Per-argument attack masks; subset checks become word operations.
struct Adjacency {
    size_t n;
    std::vector<Bits> attackers_of;
    std::vector<Bits> targets_of;

    explicit Adjacency(const Framework& f) : n(static_cast<size_t>(f.args.size())) {
        attackers_of.assign(n, Bits(n));
        targets_of.assign(n, Bits(n));
        for (const DefeatEdge& e : f.defeats) {
            attackers_of[static_cast<size_t>(e.target)].set(static_cast<size_t>(e.attacker));
            targets_of[static_cast<size_t>(e.attacker)].set(static_cast<size_t>(e.target));
        }
    }

    Bits range_of(const Bits& s) const {
        Bits r(n);
        for (size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
            r |= targets_of[i];
        return r;
    }

    // Arguments whose every attacker lies inside `defeated`.
    Bits defended_by_range(const Bits& defeated) const {
        Bits out(n);
        for (size_t i = 0; i < n; ++i)
            if (attackers_of[i].is_subset_of(defeated)) out.set(i);
        return out;
    }

    Bits characteristic(const Bits& s) const { return defended_by_range(range_of(s)); }

    bool conflict_free(const Bits& s) const {
        for (size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
            if (targets_of[i].intersects(s)) return false;
        return true;
    }

    bool admissible(const Bits& s) const {
        if (!conflict_free(s)) return false;
        Bits needed(n);
        for (size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
            needed |= attackers_of[i];
        return needed.is_subset_of(range_of(s));
    }
};

std::vector<int> to_ids(const Bits& s) {
    std::vector<int> out;
    for (size_t i = s.find_first(); i != Bits::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

Bits grounded_bits(const Adjacency& adj) {
    Bits s(adj.n);
    while (true) {
        Bits next = adj.characteristic(s);
        if (next == s) return s;
        s = std::move(next);
    }
}

// Include/exclude descent over the argument order; a branch dies as soon as
// the chosen argument conflicts with the current set.
void enumerate_conflict_free(const Adjacency& adj, size_t idx, Bits& current, Bits& blocked,
                             std::vector<Bits>& out) {
    if (idx == adj.n) {
        out.push_back(current);
        return;
    }
    enumerate_conflict_free(adj, idx + 1, current, blocked, out);
    if (!blocked.test(idx) && !adj.targets_of[idx].test(idx)) {
        Bits saved_blocked = blocked;
        current.set(idx);
        blocked |= adj.targets_of[idx];
        blocked |= adj.attackers_of[idx];
        enumerate_conflict_free(adj, idx + 1, current, blocked, out);
        current.reset(idx);
        blocked = std::move(saved_blocked);
    }
}

ExtensionSet canonical(SemanticsKind sem, std::vector<Bits> sets) {
    ExtensionSet out;
    out.semantics = sem;
    for (const Bits& s : sets) out.extensions.push_back(to_ids(s));
    std::sort(out.extensions.begin(), out.extensions.end());
    out.extensions.erase(std::unique(out.extensions.begin(), out.extensions.end()),
                         out.extensions.end());
    return out;
}

std::vector<Bits> maximal_sets(std::vector<Bits> sets) {
    std::vector<Bits> out;
    for (size_t i = 0; i < sets.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < sets.size(); ++j) {
            if (i != j && sets[i].is_subset_of(sets[j]) && sets[i] != sets[j]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(sets[i]);
    }
    return out;
}

} // namespace

bool is_conflict_free(const std::set<int>& s, const Framework& f) {
    for (const DefeatEdge& e : f.defeats)
        if (s.count(e.attacker) && s.count(e.target)) return false;
    return true;
}

bool defends(const std::set<int>& s, int a, const Framework& f) {
    for (const DefeatEdge& e : f.defeats) {
        if (e.target != a) continue;
        bool countered = false;
        for (const DefeatEdge& d : f.defeats) {
            if (d.target == e.attacker && s.count(d.attacker)) { countered = true; break; }
        }
        if (!countered) return false;
    }
    return true;
}

std::set<int> grounded_extension(const Framework& f) {
    Adjacency adj(f);
    Bits g = grounded_bits(adj);
    std::set<int> out;
    for (size_t i = g.find_first(); i != Bits::npos; i = g.find_next(i))
        out.insert(static_cast<int>(i));
    return out;
}

ExtensionSet extensions(const Framework& f, SemanticsKind sem) {
    Adjacency adj(f);
    if (sem == SemanticsKind::Grounded) return canonical(sem, {grounded_bits(adj)});

    std::vector<Bits> cf;
    Bits current(adj.n), blocked(adj.n);
    enumerate_conflict_free(adj, 0, current, blocked, cf);

    std::vector<Bits> keep;
    switch (sem) {
        case SemanticsKind::Admissible:
            for (const Bits& s : cf)
                if (adj.admissible(s)) keep.push_back(s);
            break;
        case SemanticsKind::Preferred: {
            std::vector<Bits> adm;
            for (const Bits& s : cf)
                if (adj.admissible(s)) adm.push_back(s);
            keep = maximal_sets(std::move(adm));
            break;
        }
        case SemanticsKind::Complete:
            for (const Bits& s : cf)
                if (adj.admissible(s) && adj.characteristic(s) == s) keep.push_back(s);
            break;
        case SemanticsKind::Stable:
            for (const Bits& s : cf)
                if ((s | adj.range_of(s)).count() == adj.n) keep.push_back(s);
            break;
        case SemanticsKind::Grounded: break; // handled above
    }
    return canonical(sem, std::move(keep));
}

namespace {

// Oracle-side subset logic: mask arithmetic over the raw pair list only.
struct OracleFramework {
    int n;
    std::vector<std::pair<int, int>> edges;

    bool in(unsigned mask, int i) const { return (mask >> i) & 1u; }

    bool conflict_free(unsigned mask) const {
        for (auto [a, b] : edges)
            if (in(mask, a) && in(mask, b)) return false;
        return true;
    }

    bool defended(unsigned mask, int arg) const {
        for (auto [b, t] : edges) {
            if (t != arg) continue;
            bool countered = false;
            for (auto [c, t2] : edges)
                if (t2 == b && in(mask, c)) { countered = true; break; }
            if (!countered) return false;
        }
        return true;
    }

    bool admissible(unsigned mask) const {
        if (!conflict_free(mask)) return false;
        for (int i = 0; i < n; ++i)
            if (in(mask, i) && !defended(mask, i)) return false;
        return true;
    }

    bool complete(unsigned mask) const {
        if (!admissible(mask)) return false;
        for (int i = 0; i < n; ++i)
            if (!in(mask, i) && defended(mask, i)) return false;
        return true;
    }

    bool stable(unsigned mask) const {
        if (!conflict_free(mask)) return false;
        for (int i = 0; i < n; ++i) {
            if (in(mask, i)) continue;
            bool defeated = false;
            for (auto [a, t] : edges)
                if (t == i && in(mask, a)) { defeated = true; break; }
            if (!defeated) return false;
        }
        return true;
    }

    unsigned characteristic(unsigned mask) const {
        unsigned out = 0;
        for (int i = 0; i < n; ++i)
            if (defended(mask, i)) out |= 1u << i;
        return out;
    }
};

std::vector<int> mask_to_ids(unsigned mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

} // namespace

ExtensionSet oracle_extensions(const Framework& f, SemanticsKind sem) {
    int n = f.args.size();
    if (n > 20)
        throw OracleTooLarge("oracle handles at most 20 arguments, got " + std::to_string(n));
    OracleFramework of;
    of.n = n;
    for (const DefeatEdge& e : f.defeats) of.edges.emplace_back(e.attacker, e.target);

    unsigned total = 1u << n;
    std::vector<unsigned> found;
    if (sem == SemanticsKind::Grounded) {
        // The least fixed point of the characteristic function: collect all
        // fixpoints and keep the one included in every other.
        std::vector<unsigned> fixpoints;
        for (unsigned m = 0; m < total; ++m)
            if (of.characteristic(m) == m) fixpoints.push_back(m);
        for (unsigned m : fixpoints) {
            bool least = true;
            for (unsigned o : fixpoints)
                if ((m & o) != m) { least = false; break; }
            if (least && of.conflict_free(m)) { found.push_back(m); break; }
        }
    } else if (sem == SemanticsKind::Preferred) {
        std::vector<unsigned> adm;
        for (unsigned m = 0; m < total; ++m)
            if (of.admissible(m)) adm.push_back(m);
        for (unsigned m : adm) {
            bool maximal = true;
            for (unsigned o : adm)
                if (o != m && (m & o) == m) { maximal = false; break; }
            if (maximal) found.push_back(m);
        }
    } else {
        for (unsigned m = 0; m < total; ++m) {
            bool keep = false;
            switch (sem) {
                case SemanticsKind::Admissible: keep = of.admissible(m); break;
                case SemanticsKind::Complete: keep = of.complete(m); break;
                case SemanticsKind::Stable: keep = of.stable(m); break;
                default: break;
            }
            if (keep) found.push_back(m);
        }
    }

    ExtensionSet out;
    out.semantics = sem;
    for (unsigned m : found) out.extensions.push_back(mask_to_ids(m, n));
    std::sort(out.extensions.begin(), out.extensions.end());
    out.extensions.erase(std::unique(out.extensions.begin(), out.extensions.end()),
                         out.extensions.end());
    return out;
}

} // namespace argdec
