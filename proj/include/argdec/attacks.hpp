#ifndef ARGDEC_ATTACKS_HPP
#define ARGDEC_ATTACKS_HPP

#include <optional>
#include <vector>

#include "argdec/arguments.hpp"
#include "argdec/preference.hpp"
#include "argdec/theory.hpp"

namespace argdec {

enum class AttackKind { Rebut, Assumption, Undercut };

const char* to_string(AttackKind k);

struct DefeatEdge {
    int attacker = 0;
    int target = 0;
    AttackKind kind = AttackKind::Rebut;

    bool operator==(const DefeatEdge& o) const {
        return attacker == o.attacker && target == o.target && kind == o.kind;
    }
};

// The argumentation framework: the full argument set, the materialized
// defeat relation, and the preference policy that filtered it. Epistemic
// arguments are never targets of non-epistemic attackers.
struct Framework {
    Theory theory;
    ArgumentSet args;
    std::vector<DefeatEdge> defeats; // sorted by (attacker, target)
    PreferencePolicy policy;

    bool has_defeat(int attacker, int target) const;
};

// True iff some proposition of a appears negated among b's propositions.
// Symmetric by construction.
bool rebut_attacks(const Argument& a, const Argument& b);

// The least sub-argument of a concluding a literal some rule of b assumes
// negated, or nullopt.
std::optional<int> assumption_attacks(const Argument& a, const Argument& b, const ArgumentSet& s,
                                      const Theory& t);

// True iff b applies a defeasible rule r somewhere and a concludes ~@r
// somewhere. Undercut defeats unconditionally.
bool undercut_attacks(const Argument& a, const Argument& b, const ArgumentSet& s, const Theory& t);

// Rebut filtered by preference, assumption filtered by the stratum of the
// assumed literal, undercut unfiltered. A non-epistemic argument never
// defeats an epistemic one.
bool defeats(const Argument& a, const Argument& b, const PreferencePolicy& policy,
             const ArgumentSet& s, const Theory& t);

// Builds arguments and materializes every defeat pair (self-defeats included).
Framework build_framework(const Theory& t, const PreferencePolicy& policy = {},
                          const BuildOptions& options = {});

// The framework over epistemic arguments only, with ids re-densified and the
// defeat relation restricted accordingly.
Framework epistemic_restriction(const Framework& f);

} // namespace argdec

#endif
