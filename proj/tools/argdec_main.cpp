#include <CLI11.hpp>
#include <iostream>

#include "argdec/report.hpp"

using namespace argdec;

int main(int argc, char** argv) {
    CLI::App app{"argdec - argumentation-based inference and decision ranking"};
    app.get_formatter()->column_width(28);

    RunConfig cfg;
    std::string semantics = "grounded";
    std::string attitude = "pessimistic";
    std::string policy = "certainty_based";
    std::string format = "text";

    app.add_option("input", cfg.input_path, "theory file")->required();
    app.add_option("--semantics", semantics, "grounded|complete|preferred|stable|admissible")
        ->capture_default_str();
    app.add_option("--attitude", attitude, "pessimistic|optimistic|both")->capture_default_str();
    app.add_option("--policy", policy, "certainty_based|normative")->capture_default_str();
    app.add_option("--format", format, "text|structured")->capture_default_str();
    app.add_flag("--explain", cfg.explain, "include per-decision argument trees");
    app.add_flag("--oracle-check", cfg.oracle_check,
                 "cross-validate extensions against the exhaustive oracle (|A| <= 20)");
    app.add_option("--max-args", cfg.max_arguments, "argument construction cap")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (auto s = semantics_from_name(semantics)) {
        cfg.semantics = *s;
    } else {
        std::cerr << "error: unknown semantics '" << semantics << "'\n";
        return kExitUsage;
    }
    if (attitude == "pessimistic") cfg.attitude = RunConfig::AttitudeChoice::Pessimistic;
    else if (attitude == "optimistic") cfg.attitude = RunConfig::AttitudeChoice::Optimistic;
    else if (attitude == "both") cfg.attitude = RunConfig::AttitudeChoice::Both;
    else {
        std::cerr << "error: unknown attitude '" << attitude << "'\n";
        return kExitUsage;
    }
    if (auto m = preference_mode_from_name(policy)) {
        cfg.policy.mode = *m;
    } else {
        std::cerr << "error: unknown policy '" << policy << "'\n";
        return kExitUsage;
    }
    if (format == "text") cfg.format = RunConfig::Format::Text;
    else if (format == "structured") cfg.format = RunConfig::Format::Structured;
    else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    if (cfg.max_arguments < 1) {
        std::cerr << "error: --max-args must be positive\n";
        return kExitUsage;
    }

    RunResult result = run_pipeline(cfg);
    if (!result.out.empty()) std::cout << result.out;
    if (!result.err.empty()) std::cerr << result.err;
    return result.exit_code;
}
