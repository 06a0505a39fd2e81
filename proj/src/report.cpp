#include "argdec/report.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "argdec/parser.hpp"

namespace argdec {

namespace {

using OrderedJson = nlohmann::ordered_json;

const Rule* find_rule(const Theory& t, const std::string& id) {
    for (const Rule& r : t.strict_rules)
        if (r.id == id) return &r;
    for (const Rule& r : t.defeasible_rules)
        if (r.id == id) return &r;
    return nullptr;
}

} // namespace

std::string argument_label(int id) { return "A" + std::to_string(id + 1); }

std::string render_argument(const Argument& a, const Theory& t) {
    if (a.atomic()) return "[" + to_string(a.conclusion) + "]";
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (int p : a.premises) {
        os << (first ? "" : ", ") << argument_label(p);
        first = false;
    }
    if (a.category == Category::Decision) {
        os << (first ? "" : ", ") << *a.decision_atom;
        first = false;
    }
    const Rule* rule = find_rule(t, *a.top_rule);
    bool strict = rule && rule->kind == RuleKind::Strict;
    const Literal* head = &a.conclusion;
    if (a.category == Category::Decision)
        head = !a.goals_pos.empty() ? &*a.goals_pos.begin() : &*a.goals_neg.begin();
    os << (first ? "" : " ") << (strict ? "-> " : "=> ") << to_string(*head) << "]";
    return os.str();
}

namespace {

std::string rule_text(const Rule& r) {
    std::ostringstream os;
    os << r.id << ":";
    for (size_t i = 0; i < r.body.size(); ++i)
        os << (i == 0 ? " " : ", ") << to_string(r.body[i]);
    os << (r.kind == RuleKind::Strict ? " -> " : " => ") << to_string(r.head);
    if (!r.assumptions.empty()) {
        os << " assuming ";
        for (size_t i = 0; i < r.assumptions.size(); ++i)
            os << (i == 0 ? "" : ", ") << to_string(r.assumptions[i]);
    }
    return os.str();
}

template <typename Range, typename Fn>
std::string join(const Range& range, const char* sep, Fn fn) {
    std::ostringstream os;
    bool first = true;
    for (const auto& item : range) {
        os << (first ? "" : sep) << fn(item);
        first = false;
    }
    return os.str();
}

std::string or_none(const std::string& s) { return s.empty() ? "(none)" : s; }

// Everything the report needs, computed once.
struct PipelineData {
    Framework framework;
    ExtensionSet exts;
    InferenceResult inference;
    std::vector<DecisionRanking> rankings;
    std::vector<std::string> warnings;
    std::string oracle_status; // "off", "verified", "skipped: ..."
};

void add_warnings(PipelineData& data, const std::vector<std::string>& more) {
    for (const std::string& w : more) {
        if (std::find(data.warnings.begin(), data.warnings.end(), w) == data.warnings.end())
            data.warnings.push_back(w);
    }
}

void render_tree(std::ostringstream& os, const PipelineData& d, int id, int depth) {
    const Argument& a = d.framework.args.at(id);
    os << std::string(static_cast<size_t>(5 + 2 * depth), ' ') << argument_label(id) << ": "
       << render_argument(a, d.framework.theory) << "  force="
       << to_string(force(a, d.framework.theory)) << "\n";
    for (int p : a.premises) render_tree(os, d, p, depth + 1);
}

std::string text_report(const PipelineData& d, const RunConfig& cfg) {
    const Theory& t = d.framework.theory;
    std::ostringstream os;
    os << "THEORY\n";
    os << "  scale: " << t.scale << "\n";
    os << "  decisions: " << or_none(join(t.decisions, ", ", [](const std::string& s) { return s; }))
       << "\n";
    auto graded = [](const std::pair<const Literal, int>& e) {
        return to_string(e.first) + "@" + std::to_string(e.second);
    };
    os << "  beliefs: " << or_none(join(t.beliefs, ", ", graded)) << "\n";
    os << "  goals+: " << or_none(join(t.pos_goals, ", ", graded)) << "\n";
    os << "  goals-: " << or_none(join(t.neg_goals, ", ", graded)) << "\n";
    os << "  strict rules: " << or_none(join(t.strict_rules, "; ", rule_text)) << "\n";
    os << "  defeasible rules: " << or_none(join(t.defeasible_rules, "; ", rule_text)) << "\n";

    os << "\nARGUMENTS (" << d.framework.args.size() << ")\n";
    for (const Argument& a : d.framework.args.args) {
        os << "  " << argument_label(a.id) << ": " << render_argument(a, t) << "  "
           << to_string(a.category) << "  conc=" << to_string(a.conclusion)
           << "  force=" << to_string(force(a, t)) << "\n";
    }

    os << "\nDEFEATS (" << d.framework.defeats.size() << ")\n";
    for (const DefeatEdge& e : d.framework.defeats) {
        os << "  " << argument_label(e.attacker) << " -> " << argument_label(e.target) << "  ["
           << to_string(e.kind) << "]\n";
    }

    os << "\nEXTENSIONS " << to_string(d.exts.semantics) << " (" << d.exts.extensions.size()
       << ")\n";
    int i = 1;
    for (const std::vector<int>& ext : d.exts.extensions) {
        os << "  E" << i++ << ": {" << join(ext, ", ", argument_label) << "}\n";
    }

    os << "\nOUTPUT (" << d.inference.output.size() << ")\n  "
       << or_none(join(d.inference.output, ", ", [](const Literal& l) { return to_string(l); }))
       << "\n";

    for (const DecisionRanking& r : d.rankings) {
        os << "\nRANKING " << to_string(r.attitude) << "\n";
        os << "  pool: {" << join(r.pool, ", ", argument_label) << "}\n";
        int rank = 1;
        for (const std::vector<std::string>& group : r.order) {
            os << "  " << rank++ << ". " << join(group, ", ", [](const std::string& s) { return s; });
            std::ostringstream forces;
            bool first_d = true;
            for (const std::string& dname : group) {
                const DecisionJustification& j = r.justification.at(dname);
                forces << (first_d ? "" : " | ")
                       << join(j.forces, ", ", [](const Force& fo) { return to_string(fo); });
                first_d = false;
            }
            os << "  " << (r.attitude == Attitude::Pessimistic ? "pro" : "con") << ": ["
               << forces.str() << "]\n";
            if (cfg.explain) {
                for (const std::string& dname : group) {
                    for (int id : r.justification.at(dname).arguments) render_tree(os, d, id, 0);
                }
            }
        }
    }

    if (!d.warnings.empty()) {
        os << "\nWARNINGS\n";
        for (const std::string& w : d.warnings) os << "  " << w << "\n";
    }
    if (cfg.oracle_check) os << "\nORACLE " << d.oracle_status << "\n";
    return os.str();
}

std::string structured_report(const PipelineData& d, const RunConfig& cfg) {
    const Theory& t = d.framework.theory;
    OrderedJson doc;
    doc["config"] = {
        {"input", cfg.input_path},
        {"semantics", to_string(cfg.semantics)},
        {"attitude", cfg.attitude == RunConfig::AttitudeChoice::Both
                         ? "both"
                         : to_string(cfg.attitude == RunConfig::AttitudeChoice::Pessimistic
                                         ? Attitude::Pessimistic
                                         : Attitude::Optimistic)},
        {"policy", to_string(cfg.policy.mode)},
        {"max_arguments", cfg.max_arguments},
    };

    OrderedJson theory;
    theory["scale"] = t.scale;
    theory["decisions"] = t.decisions;
    auto graded_array = [](const std::map<Literal, int>& m) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& [l, grade] : m)
            arr.push_back({{"literal", to_string(l)}, {"grade", grade}});
        return arr;
    };
    theory["beliefs"] = graded_array(t.beliefs);
    theory["goals_pos"] = graded_array(t.pos_goals);
    theory["goals_neg"] = graded_array(t.neg_goals);
    auto rule_array = [](const std::vector<Rule>& rules) {
        OrderedJson arr = OrderedJson::array();
        for (const Rule& r : rules) {
            OrderedJson jr;
            jr["id"] = r.id;
            jr["body"] = OrderedJson::array();
            for (const Literal& b : r.body) jr["body"].push_back(to_string(b));
            jr["head"] = to_string(r.head);
            if (!r.assumptions.empty()) {
                jr["assumptions"] = OrderedJson::array();
                for (const Literal& a : r.assumptions) jr["assumptions"].push_back(to_string(a));
            }
            arr.push_back(std::move(jr));
        }
        return arr;
    };
    theory["strict_rules"] = rule_array(t.strict_rules);
    theory["defeasible_rules"] = rule_array(t.defeasible_rules);
    doc["theory"] = std::move(theory);

    OrderedJson args = OrderedJson::array();
    for (const Argument& a : d.framework.args.args) {
        OrderedJson ja;
        ja["id"] = argument_label(a.id);
        ja["category"] = to_string(a.category);
        ja["conclusion"] = to_string(a.conclusion);
        ja["structure"] = render_argument(a, t);
        Force fo = force(a, t);
        ja["force"]["cert"] = fo.cert;
        if (fo.imp) ja["force"]["imp"] = *fo.imp;
        ja["subs"] = OrderedJson::array();
        for (int s : a.subs) ja["subs"].push_back(argument_label(s));
        if (a.top_rule) ja["top_rule"] = *a.top_rule;
        if (a.decision_atom) ja["decision"] = *a.decision_atom;
        if (!a.goals_pos.empty()) ja["goal_pos"] = to_string(*a.goals_pos.begin());
        if (!a.goals_neg.empty()) ja["goal_neg"] = to_string(*a.goals_neg.begin());
        args.push_back(std::move(ja));
    }
    doc["arguments"] = std::move(args);

    OrderedJson defeats = OrderedJson::array();
    for (const DefeatEdge& e : d.framework.defeats) {
        defeats.push_back({{"attacker", argument_label(e.attacker)},
                           {"target", argument_label(e.target)},
                           {"kind", to_string(e.kind)}});
    }
    doc["defeats"] = std::move(defeats);

    OrderedJson exts;
    exts["semantics"] = to_string(d.exts.semantics);
    exts["sets"] = OrderedJson::array();
    for (const std::vector<int>& ext : d.exts.extensions) {
        OrderedJson set = OrderedJson::array();
        for (int id : ext) set.push_back(argument_label(id));
        exts["sets"].push_back(std::move(set));
    }
    doc["extensions"] = std::move(exts);

    OrderedJson out_literals = OrderedJson::array();
    for (const Literal& l : d.inference.output) out_literals.push_back(to_string(l));
    doc["output"] = std::move(out_literals);

    OrderedJson rankings = OrderedJson::array();
    for (const DecisionRanking& r : d.rankings) {
        OrderedJson jr;
        jr["attitude"] = to_string(r.attitude);
        jr["pool"] = OrderedJson::array();
        for (int id : r.pool) jr["pool"].push_back(argument_label(id));
        jr["groups"] = r.order;
        OrderedJson just;
        for (const auto& [dname, j] : r.justification) {
            OrderedJson jd;
            jd["arguments"] = OrderedJson::array();
            for (int id : j.arguments) jd["arguments"].push_back(argument_label(id));
            jd["forces"] = OrderedJson::array();
            for (const Force& fo : j.forces) jd["forces"].push_back(to_string(fo));
            just[dname] = std::move(jd);
        }
        jr["justification"] = std::move(just);
        rankings.push_back(std::move(jr));
    }
    doc["rankings"] = std::move(rankings);
    doc["warnings"] = d.warnings;
    if (cfg.oracle_check) doc["oracle"] = d.oracle_status;
    return doc.dump(2) + "\n";
}

} // namespace

RunResult run_on_text(std::string_view text, const RunConfig& cfg) {
    RunResult result;
    ParseResult parsed = parse_theory(text);
    if (!parsed.ok()) {
        const ParseError& e = *parsed.error;
        std::ostringstream err;
        err << "error: " << cfg.input_path << ":" << e.span.line << ":" << e.span.column << ": "
            << e.message << " [" << to_string(e.kind) << "]\n";
        result.err = err.str();
        result.exit_code = kExitParseError;
        return result;
    }

    PipelineData data;
    try {
        BuildOptions opts;
        opts.max_arguments = cfg.max_arguments;
        data.framework = build_framework(*parsed.theory, cfg.policy, opts);
    } catch (const ConstructionOverflow& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = kExitOverflow;
        return result;
    }

    data.exts = extensions(data.framework, cfg.semantics);
    data.oracle_status = "off";
    if (cfg.oracle_check) {
        if (data.framework.args.size() <= 20) {
            ExtensionSet reference = oracle_extensions(data.framework, cfg.semantics);
            if (reference == data.exts) {
                data.oracle_status = "verified";
            } else {
                result.err = "error: extension enumeration disagrees with the exhaustive oracle\n";
                result.exit_code = kExitOracleMismatch;
                return result;
            }
        } else {
            data.oracle_status = "skipped: more than 20 arguments";
        }
    }

    data.inference = output(data.framework, cfg.semantics);
    add_warnings(data, data.inference.warnings);
    if (cfg.attitude != RunConfig::AttitudeChoice::Optimistic) {
        data.rankings.push_back(rank_decisions(data.framework, Attitude::Pessimistic, cfg.semantics));
        add_warnings(data, data.rankings.back().warnings);
    }
    if (cfg.attitude != RunConfig::AttitudeChoice::Pessimistic) {
        data.rankings.push_back(rank_decisions(data.framework, Attitude::Optimistic, cfg.semantics));
        add_warnings(data, data.rankings.back().warnings);
    }

    result.out = cfg.format == RunConfig::Format::Text ? text_report(data, cfg)
                                                       : structured_report(data, cfg);
    return result;
}

RunResult run_pipeline(const RunConfig& cfg) {
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) {
        RunResult result;
        result.err = "error: cannot read '" + cfg.input_path + "'\n";
        result.exit_code = kExitParseError;
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return run_on_text(buffer.str(), cfg);
}

} // namespace argdec
