#ifndef ARGDEC_REPORT_HPP
#define ARGDEC_REPORT_HPP

#include <string>
#include <string_view>

#include "argdec/decide.hpp"

namespace argdec {

// Process exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitOverflow = 2;
inline constexpr int kExitOracleMismatch = 3;
inline constexpr int kExitUsage = 64;

struct RunConfig {
    std::string input_path;
    SemanticsKind semantics = SemanticsKind::Grounded;
    enum class AttitudeChoice { Pessimistic, Optimistic, Both };
    AttitudeChoice attitude = AttitudeChoice::Pessimistic;
    PreferencePolicy policy;
    enum class Format { Text, Structured };
    Format format = Format::Text;
    bool explain = false;      // include per-decision argument trees
    bool oracle_check = false; // cross-validate extensions when |A| <= 20
    int max_arguments = 100000;
};

struct RunResult {
    int exit_code = kExitOk;
    std::string out; // the report document
    std::string err; // diagnostics
};

// Full pipeline: parse, build, solve, decide, render. Output is byte-stable
// for a fixed input and configuration.
RunResult run_pipeline(const RunConfig& cfg);

// Same pipeline over in-memory text (cfg.input_path is only echoed).
RunResult run_on_text(std::string_view text, const RunConfig& cfg);

// "A1", "A2", ... (ids are 0-based internally, labels 1-based).
std::string argument_label(int id);

// Bracket notation: "[a]", "[A1 => b]", "[A2, u => dry]". The arrow follows
// the top rule's kind.
std::string render_argument(const Argument& a, const Theory& t);

} // namespace argdec

#endif
