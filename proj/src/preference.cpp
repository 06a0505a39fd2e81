#include "argdec/preference.hpp"

#include <algorithm>
#include <stdexcept>

namespace argdec {

std::string to_string(const Force& f) {
    if (f.imp) return "(" + std::to_string(f.cert) + "," + std::to_string(*f.imp) + ")";
    return std::to_string(f.cert);
}

const char* to_string(PreferenceMode m) {
    return m == PreferenceMode::Normative ? "normative" : "certainty_based";
}

std::optional<PreferenceMode> preference_mode_from_name(const std::string& name) {
    if (name == "normative") return PreferenceMode::Normative;
    if (name == "certainty_based") return PreferenceMode::CertaintyBased;
    return std::nullopt;
}

const char* to_string(PreferenceVerdict v) {
    switch (v) {
        case PreferenceVerdict::StrictlyPreferred: return "strictly_preferred";
        case PreferenceVerdict::Equivalent: return "equivalent";
        case PreferenceVerdict::StrictlyDispreferred: return "strictly_dispreferred";
        case PreferenceVerdict::Incomparable: return "incomparable";
    }
    return "?";
}

int cert(const Argument& a, const Theory& t) {
    int level = t.scale; // an argument relying on no belief sits at the top
    bool any = false;
    for (const Literal& p : a.props) {
        if (auto s = stratum_of(t, p)) {
            level = any ? std::min(level, *s) : *s;
            any = true;
        }
    }
    return level;
}

int imp(const Argument& a, const Theory& t) {
    if (a.category != Category::Decision)
        throw std::invalid_argument("importance is defined for decision arguments only");
    if (!a.goals_pos.empty()) {
        auto it = t.pos_goals.find(*a.goals_pos.begin());
        if (it != t.pos_goals.end()) return it->second;
    } else if (!a.goals_neg.empty()) {
        auto it = t.neg_goals.find(*a.goals_neg.begin());
        if (it != t.neg_goals.end()) return it->second;
    }
    throw std::invalid_argument("decision argument has no graded goal");
}

Force force(const Argument& a, const Theory& t) {
    Force f;
    f.cert = cert(a, t);
    if (a.category == Category::Decision) f.imp = imp(a, t);
    return f;
}

namespace {

PreferenceVerdict from_levels(int a, int b) {
    if (a > b) return PreferenceVerdict::StrictlyPreferred;
    if (a < b) return PreferenceVerdict::StrictlyDispreferred;
    return PreferenceVerdict::Equivalent;
}

} // namespace

PreferenceVerdict prefers(const Argument& a, const Argument& b, const PreferencePolicy& policy,
                          const Theory& t) {
    bool a_ep = a.category == Category::Epistemic;
    bool b_ep = b.category == Category::Epistemic;
    if (a_ep && b_ep) return from_levels(cert(a, t), cert(b, t));
    if (a_ep) return PreferenceVerdict::StrictlyPreferred;
    if (b_ep) return PreferenceVerdict::StrictlyDispreferred;

    bool a_dec = a.category == Category::Decision;
    bool b_dec = b.category == Category::Decision;
    if (a_dec && b_dec) {
        return from_levels(std::min(cert(a, t), imp(a, t)), std::min(cert(b, t), imp(b, t)));
    }
    if (!a_dec && !b_dec) return from_levels(cert(a, t), cert(b, t));

    // Recommending against decision.
    if (policy.mode == PreferenceMode::Normative) {
        return a_dec ? PreferenceVerdict::StrictlyDispreferred
                     : PreferenceVerdict::StrictlyPreferred;
    }
    return from_levels(cert(a, t), cert(b, t));
}

} // namespace argdec
