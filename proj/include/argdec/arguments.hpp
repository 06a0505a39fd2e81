#ifndef ARGDEC_ARGUMENTS_HPP
#define ARGDEC_ARGUMENTS_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "argdec/theory.hpp"

namespace argdec {

enum class Category { Epistemic, Recommending, Decision };

const char* to_string(Category c);

// A tree-structured proof object. Epistemic arguments are built from beliefs
// alone; recommending arguments conclude a decision deductively; decision
// arguments abduce a decision toward a single positive or negative goal.
struct Argument {
    int id = 0;
    Literal conclusion;                   // CONC
    std::set<Literal> props;              // PROP
    std::set<Literal> goals_pos;          // GOALS+ (at most one literal)
    std::set<Literal> goals_neg;          // GOALS- (at most one literal)
    std::set<int> subs;                   // SUB, reflexive
    std::vector<int> premises;            // direct sub-argument ids, body order
    std::optional<std::string> top_rule;  // none for atomic belief arguments
    Category category = Category::Epistemic;
    std::optional<std::string> decision_atom;

    bool atomic() const { return !top_rule.has_value(); }
};

struct ArgumentSet {
    std::vector<Argument> args;
    std::map<Literal, std::vector<int>> by_conclusion;
    std::map<std::string, std::vector<int>> by_decision; // decision atom -> ids

    int size() const { return static_cast<int>(args.size()); }
    const Argument& at(int id) const { return args.at(static_cast<size_t>(id)); }
};

class ConstructionOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BuildOptions {
    int max_arguments = 100000;
};

// Enumerates every argument derivable from t, deterministically: atomic
// arguments for the beliefs first (in literal order), then rule applications
// to a fixed point, then recommending and decision arguments. An application
// is rejected when its conclusion is already concluded by one of its proper
// sub-arguments, which keeps cyclic rule bases finite without losing any
// minimal derivation. Throws ConstructionOverflow past options.max_arguments.
ArgumentSet build_arguments(const Theory& t, const BuildOptions& options = {});

// Arguments in favor of decision d within the pool: recommending arguments
// for d and decision arguments reaching one of its positive goals.
std::vector<int> args_pro(const std::string& d, const std::set<int>& pool, const ArgumentSet& s);

// Arguments against d within the pool: decision arguments hitting a negative goal.
std::vector<int> args_cons(const std::string& d, const std::set<int>& pool, const ArgumentSet& s);

// The reflexive SUB set.
std::set<int> subarguments(int id, const ArgumentSet& s);

} // namespace argdec

#endif
