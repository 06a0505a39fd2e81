#ifndef ARGDEC_SEMANTICS_HPP
#define ARGDEC_SEMANTICS_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "argdec/attacks.hpp"

namespace argdec {

enum class SemanticsKind { Admissible, Preferred, Complete, Stable, Grounded };

const char* to_string(SemanticsKind s);
std::optional<SemanticsKind> semantics_from_name(const std::string& name);

// All extensions under one semantics; each extension sorted ascending, the
// list sorted lexicographically, no duplicates.
struct ExtensionSet {
    SemanticsKind semantics = SemanticsKind::Grounded;
    std::vector<std::vector<int>> extensions;

    bool operator==(const ExtensionSet& o) const {
        return semantics == o.semantics && extensions == o.extensions;
    }
};

bool is_conflict_free(const std::set<int>& s, const Framework& f);

// True iff every defeater of a is defeated by some member of s.
bool defends(const std::set<int>& s, int a, const Framework& f);

// Least fixed point of the characteristic function, iterated from the empty set.
std::set<int> grounded_extension(const Framework& f);

// Exact extension enumeration. Admissible/preferred/complete/stable search
// conflict-free sets by include/exclude descent with word-parallel pruning on
// per-argument attack masks; grounded iterates the characteristic function.
ExtensionSet extensions(const Framework& f, SemanticsKind sem);

class OracleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Independent cross-check: tests all 2^n subsets directly against the
// definitions using plain loops over the defeat pair list. Requires at most
// 20 arguments.
ExtensionSet oracle_extensions(const Framework& f, SemanticsKind sem);

} // namespace argdec

#endif
