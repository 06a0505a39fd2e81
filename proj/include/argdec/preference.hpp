#ifndef ARGDEC_PREFERENCE_HPP
#define ARGDEC_PREFERENCE_HPP

#include <optional>
#include <string>

#include "argdec/arguments.hpp"
#include "argdec/theory.hpp"

namespace argdec {

// Certainty paired with goal importance; imp is set exactly for decision
// arguments.
struct Force {
    int cert = 1;
    std::optional<int> imp;

    bool operator==(const Force& o) const { return cert == o.cert && imp == o.imp; }
};

std::string to_string(const Force& f); // "3" or "(3,2)"

enum class PreferenceMode {
    Normative,      // recommending arguments outrank decision arguments
    CertaintyBased, // recommending vs decision settled by certainty alone
};

struct PreferencePolicy {
    PreferenceMode mode = PreferenceMode::CertaintyBased;
};

const char* to_string(PreferenceMode m);
std::optional<PreferenceMode> preference_mode_from_name(const std::string& name);

enum class PreferenceVerdict { StrictlyPreferred, Equivalent, StrictlyDispreferred, Incomparable };

const char* to_string(PreferenceVerdict v);

// Level of the weakest belief used by a; top of scale when a uses none.
int cert(const Argument& a, const Theory& t);

// Grade of the unique goal of a decision argument. Throws std::invalid_argument
// for epistemic or recommending arguments.
int imp(const Argument& a, const Theory& t);

Force force(const Argument& a, const Theory& t);

// Category dispatch: epistemic arguments outrank everything non-epistemic;
// same-category comparison is by certainty (epistemic, recommending) or by
// min(cert, imp) (decision); recommending vs decision follows the policy.
// Incomparable is never produced by the two shipped policies.
PreferenceVerdict prefers(const Argument& a, const Argument& b, const PreferencePolicy& policy,
                          const Theory& t);

} // namespace argdec

#endif
