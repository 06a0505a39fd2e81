#include <doctest.h>

#include <json.hpp>
#include <set>

#include "argdec/report.hpp"
#include "testutil.hpp"

using namespace argdec;

namespace {

const char* kClashingBeliefs =
    "belief 1: a. belief 1: d. drule r1: a => b. drule r2: d => ~b.";

RunConfig base_config() {
    RunConfig cfg;
    cfg.input_path = "test.theory";
    return cfg;
}

} // namespace

TEST_CASE("arguments render in bracket notation") {
    Framework f = testutil::framework_from_dsl(kClashingBeliefs);
    CHECK(render_argument(f.args.at(0), f.theory) == "[a]");
    CHECK(render_argument(f.args.at(2), f.theory) == "[A1 => b]");
    CHECK(render_argument(f.args.at(3), f.theory) == "[A2 => ~b]");

    Framework u = testutil::framework_from_dsl(
        "scale 3. decision u. belief 2: rain. goal+ 3: dry. drule r: rain, u => dry.");
    CHECK(render_argument(u.args.at(1), u.theory) == "[A1, u => dry]");

    Framework s = testutil::framework_from_dsl("belief 1: a. srule s1: a -> b.");
    CHECK(render_argument(s.args.at(1), s.theory) == "[A1 -> b]");
    Framework empty_body = testutil::framework_from_dsl("srule s1: -> b.");
    CHECK(render_argument(empty_body.args.at(0), empty_body.theory) == "[-> b]");
}

TEST_CASE("text report carries all sections") {
    RunConfig cfg = base_config();
    RunResult r = run_on_text(kClashingBeliefs, cfg);
    REQUIRE(r.exit_code == kExitOk);
    CHECK(r.out.find("THEORY") != std::string::npos);
    CHECK(r.out.find("ARGUMENTS (4)") != std::string::npos);
    CHECK(r.out.find("A3: [A1 => b]") != std::string::npos);
    CHECK(r.out.find("DEFEATS (2)") != std::string::npos);
    CHECK(r.out.find("A3 -> A4  [rebut]") != std::string::npos);
    CHECK(r.out.find("EXTENSIONS grounded (1)") != std::string::npos);
    CHECK(r.out.find("E1: {A1, A2}") != std::string::npos);
    CHECK(r.out.find("OUTPUT (2)\n  a, d") != std::string::npos);
}

TEST_CASE("parse failures surface with span and kind") {
    RunConfig cfg = base_config();
    RunResult r = run_on_text("belief 9: a.", cfg);
    CHECK(r.exit_code == kExitParseError);
    CHECK(r.err.find("test.theory:1:8") != std::string::npos);
    CHECK(r.err.find("[bad_grade]") != std::string::npos);
}

TEST_CASE("the construction cap maps to its own exit code") {
    RunConfig cfg = base_config();
    cfg.max_arguments = 1;
    RunResult r = run_on_text(kClashingBeliefs, cfg);
    CHECK(r.exit_code == kExitOverflow);
}

TEST_CASE("missing input files fail cleanly") {
    RunConfig cfg = base_config();
    cfg.input_path = "/definitely/not/here.theory";
    RunResult r = run_pipeline(cfg);
    CHECK(r.exit_code == kExitParseError);
    CHECK(r.err.find("cannot read") != std::string::npos);
}

TEST_CASE("structured output is valid JSON and references resolve") {
    RunConfig cfg = base_config();
    cfg.format = RunConfig::Format::Structured;
    cfg.attitude = RunConfig::AttitudeChoice::Both;
    cfg.oracle_check = true;
    RunResult r = run_on_text(
        "scale 3. decision u. decision no_u. belief 2: rain. goal+ 3: dry. "
        "drule r: rain, u => dry.",
        cfg);
    REQUIRE(r.exit_code == kExitOk);
    nlohmann::json doc = nlohmann::json::parse(r.out);

    std::set<std::string> known;
    for (const auto& a : doc.at("arguments")) known.insert(a.at("id").get<std::string>());
    for (const auto& d : doc.at("defeats")) {
        CHECK(known.count(d.at("attacker").get<std::string>()));
        CHECK(known.count(d.at("target").get<std::string>()));
    }
    for (const auto& ext : doc.at("extensions").at("sets"))
        for (const auto& id : ext) CHECK(known.count(id.get<std::string>()));
    REQUIRE(doc.at("rankings").size() == 2);
    for (const auto& ranking : doc.at("rankings")) {
        for (const auto& id : ranking.at("pool")) CHECK(known.count(id.get<std::string>()));
        for (const auto& [decision, just] : ranking.at("justification").items()) {
            CHECK(doc.at("theory").at("decisions").size() == 2);
            (void)decision;
            for (const auto& id : just.at("arguments")) CHECK(known.count(id.get<std::string>()));
        }
    }
    CHECK(doc.at("oracle") == "verified");
}

TEST_CASE("reports are byte-stable across runs") {
    for (RunConfig::Format format : {RunConfig::Format::Text, RunConfig::Format::Structured}) {
        RunConfig cfg = base_config();
        cfg.format = format;
        cfg.attitude = RunConfig::AttitudeChoice::Both;
        cfg.explain = true;
        const char* dsl =
            "scale 3. decision u. decision v. belief 2: rain. belief 1: ~rain. "
            "goal+ 3: dry. goal- 1: wet. "
            "drule r1: rain, u => dry. drule r2: rain, v => wet. srule s1: rain -> cloudy.";
        RunResult a = run_on_text(dsl, cfg);
        RunResult b = run_on_text(dsl, cfg);
        REQUIRE(a.exit_code == kExitOk);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("explain mode prints justification trees") {
    RunConfig cfg = base_config();
    cfg.explain = true;
    RunResult r = run_on_text(
        "scale 3. decision u. belief 2: rain. goal+ 3: dry. drule r: rain, u => dry.", cfg);
    REQUIRE(r.exit_code == kExitOk);
    CHECK(r.out.find("A2: [A1, u => dry]  force=(2,3)") != std::string::npos);
    CHECK(r.out.find("  A1: [rain]  force=2") != std::string::npos);
}

TEST_CASE("the oracle gate reports skips above the size bound") {
    RunConfig cfg = base_config();
    cfg.oracle_check = true;
    // 24 beliefs -> 24 arguments, beyond the oracle bound
    std::string dsl;
    for (int i = 0; i < 24; ++i) dsl += "belief 1: b" + std::to_string(i) + ". ";
    RunResult r = run_on_text(dsl, cfg);
    REQUIRE(r.exit_code == kExitOk);
    CHECK(r.out.find("ORACLE skipped") != std::string::npos);
}
