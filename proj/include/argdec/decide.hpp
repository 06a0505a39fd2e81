#ifndef ARGDEC_DECIDE_HPP
#define ARGDEC_DECIDE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "argdec/preference.hpp"
#include "argdec/semantics.hpp"

namespace argdec {

// Skeptically justified conclusions: literals concluded by an epistemic
// argument in every extension. Decisions are never inferred.
struct InferenceResult {
    std::set<Literal> output;
    SemanticsKind semantics_used = SemanticsKind::Grounded;
    std::vector<std::string> warnings;
};

InferenceResult output(const Framework& f, SemanticsKind sem);

enum class Attitude { Pessimistic, Optimistic };

const char* to_string(Attitude a);

enum class DecisionComparison { Better, Equivalent, Worse };

const char* to_string(DecisionComparison c);

// Lexicographic comparison of the decisions' justification vectors drawn
// from the given extension: pessimistic reads the PRO vectors (stronger and
// longer wins), optimistic the CON vectors (weaker and shorter wins). Throws
// std::invalid_argument for atoms outside the decision set.
DecisionComparison compare_decisions(const std::string& d1, const std::string& d2,
                                     const std::set<int>& extension, const Framework& f,
                                     Attitude attitude);

struct DecisionJustification {
    std::vector<int> arguments; // sorted decreasingly under the policy's preference
    std::vector<Force> forces;  // parallel to arguments
};

struct DecisionRanking {
    Attitude attitude = Attitude::Pessimistic;
    std::vector<std::vector<std::string>> order; // rank groups, best first
    std::map<std::string, DecisionJustification> justification;
    std::vector<int> pool; // the acceptable arguments the ranking drew from
    std::vector<std::string> warnings;
};

// Ranks every decision of the theory by pairwise comparison over one
// argument pool: the grounded extension by default, the single extension
// when sem yields exactly one, otherwise the intersection of all extensions
// (with a warning).
DecisionRanking rank_decisions(const Framework& f, Attitude attitude,
                               SemanticsKind sem = SemanticsKind::Grounded);

struct EquivalenceReport {
    bool output_equal = false;
    bool ranking_equal = false;
};

// Compares two frameworks over the same decision set: equality of Output and
// equality of the strict decision pre-ordering.
EquivalenceReport frameworks_equivalent(const Framework& f1, const Framework& f2,
                                        SemanticsKind sem, Attitude attitude);

// Sorts argument ids decreasingly under the policy's preference relation,
// ties broken by id. Exposed for reporting.
std::vector<int> sort_by_preference(std::vector<int> ids, const Framework& f);

} // namespace argdec

#endif
