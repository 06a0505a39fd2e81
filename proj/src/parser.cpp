#include "argdec/parser.hpp"

#include <cctype>
#include <sstream>
#include <variant>
#include <vector>

namespace argdec {

const char* to_string(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::DuplicateId: return "duplicate_id";
        case ParseErrorKind::BadGrade: return "bad_grade";
        case ParseErrorKind::RoleClash: return "role_clash";
    }
    return "?";
}

namespace {

enum class Tok {
    Word,   // identifier or @identifier
    Int,
    Dot,
    Colon,
    Comma,
    Tilde,
    Plus,
    Minus,
    Arrow,  // ->
    DArrow, // =>
    End,
};

struct Token {
    Tok kind;
    std::string text;
    long value = 0;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    // Returns nullopt on a lexical error, with err filled in.
    std::optional<std::vector<Token>> run(ParseError& err) {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') { advance(); continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { advance(); continue; }
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            SourceSpan at{line_, col_};
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    num += text_[pos_];
                    advance();
                }
                out.push_back({Tok::Int, num, std::stol(num), at});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
                std::string word;
                if (c == '@') { word += '@'; advance(); }
                if (pos_ >= text_.size() ||
                    (!std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '_')) {
                    err = {at, "expected identifier after '@'", ParseErrorKind::Syntax};
                    return std::nullopt;
                }
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                    word += text_[pos_];
                    advance();
                }
                out.push_back({Tok::Word, word, 0, at});
                continue;
            }
            switch (c) {
                case '.': advance(); out.push_back({Tok::Dot, ".", 0, at}); continue;
                case ':': advance(); out.push_back({Tok::Colon, ":", 0, at}); continue;
                case ',': advance(); out.push_back({Tok::Comma, ",", 0, at}); continue;
                case '~': advance(); out.push_back({Tok::Tilde, "~", 0, at}); continue;
                case '+': advance(); out.push_back({Tok::Plus, "+", 0, at}); continue;
                case '-':
                    advance();
                    if (pos_ < text_.size() && text_[pos_] == '>') {
                        advance();
                        out.push_back({Tok::Arrow, "->", 0, at});
                    } else {
                        out.push_back({Tok::Minus, "-", 0, at});
                    }
                    continue;
                case '=':
                    advance();
                    if (pos_ < text_.size() && text_[pos_] == '>') {
                        advance();
                        out.push_back({Tok::DArrow, "=>", 0, at});
                        continue;
                    }
                    err = {at, "expected '=>'", ParseErrorKind::Syntax};
                    return std::nullopt;
                default:
                    err = {at, std::string("unexpected character '") + c + "'",
                           ParseErrorKind::Syntax};
                    return std::nullopt;
            }
        }
        out.push_back({Tok::End, "", 0, {line_, col_}});
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// Raw statements, collected before any cross-statement checking so that
// declarations may appear in any order.
struct ScaleStmt { int n; };
struct DecisionStmt { std::string atom; };
struct GradedStmt { enum class Which { Belief, GoalPos, GoalNeg } which; int grade; Literal literal; };
struct RuleStmt { Rule rule; };
using Stmt = std::variant<ScaleStmt, DecisionStmt, GradedStmt, RuleStmt>;

struct SpannedStmt {
    Stmt stmt;
    SourceSpan span;       // statement start
    SourceSpan grade_span; // grade token, for graded statements
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::optional<ParseError> run(std::vector<SpannedStmt>& out) {
        while (peek().kind != Tok::End) {
            if (auto err = statement(out)) return err;
        }
        return std::nullopt;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& get() { return toks_[pos_++]; }

    ParseError fail(const Token& t, const std::string& msg) const {
        return {t.span, msg, ParseErrorKind::Syntax};
    }

    std::optional<ParseError> expect(Tok kind, const char* what) {
        if (peek().kind != kind) return fail(peek(), std::string("expected ") + what);
        get();
        return std::nullopt;
    }

    // lit := ['~'] atom
    std::optional<ParseError> literal(Literal& out) {
        bool positive = true;
        if (peek().kind == Tok::Tilde) { get(); positive = false; }
        if (peek().kind != Tok::Word) return fail(peek(), "expected atom");
        out = Literal{get().text, positive};
        return std::nullopt;
    }

    std::optional<ParseError> literal_list(std::vector<Literal>& out) {
        Literal l;
        if (auto err = literal(l)) return err;
        out.push_back(l);
        while (peek().kind == Tok::Comma) {
            get();
            if (auto err = literal(l)) return err;
            out.push_back(l);
        }
        return std::nullopt;
    }

    std::optional<ParseError> statement(std::vector<SpannedStmt>& out) {
        const Token& head = peek();
        if (head.kind != Tok::Word)
            return fail(head, "expected statement keyword");
        SourceSpan start = head.span;
        const std::string& kw = head.text;
        if (kw == "scale") {
            get();
            if (peek().kind != Tok::Int) return fail(peek(), "expected scale value");
            Token n = get();
            if (auto err = expect(Tok::Dot, "'.'")) return err;
            out.push_back({ScaleStmt{static_cast<int>(n.value)}, start, n.span});
            return std::nullopt;
        }
        if (kw == "decision") {
            get();
            if (peek().kind != Tok::Word) return fail(peek(), "expected decision atom");
            Token atom = get();
            if (!atom.text.empty() && atom.text[0] == '@')
                return ParseError{atom.span, "decision atom may not start with '@'",
                                  ParseErrorKind::Syntax};
            if (auto err = expect(Tok::Dot, "'.'")) return err;
            out.push_back({DecisionStmt{atom.text}, start, atom.span});
            return std::nullopt;
        }
        if (kw == "belief" || kw == "goal") {
            get();
            auto which = GradedStmt::Which::Belief;
            if (kw == "goal") {
                if (peek().kind == Tok::Plus) { get(); which = GradedStmt::Which::GoalPos; }
                else if (peek().kind == Tok::Minus) { get(); which = GradedStmt::Which::GoalNeg; }
                else return fail(peek(), "expected '+' or '-' after 'goal'");
            }
            if (peek().kind != Tok::Int) return fail(peek(), "expected grade");
            Token grade = get();
            if (auto err = expect(Tok::Colon, "':'")) return err;
            Literal l;
            if (auto err = literal(l)) return err;
            if (auto err = expect(Tok::Dot, "'.'")) return err;
            out.push_back({GradedStmt{which, static_cast<int>(grade.value), l}, start, grade.span});
            return std::nullopt;
        }
        if (kw == "srule" || kw == "drule") {
            get();
            bool strict = kw == "srule";
            if (peek().kind != Tok::Word) return fail(peek(), "expected rule id");
            Token id = get();
            if (auto err = expect(Tok::Colon, "':'")) return err;
            Rule r;
            r.id = id.text;
            r.kind = strict ? RuleKind::Strict : RuleKind::Defeasible;
            Tok arrow = strict ? Tok::Arrow : Tok::DArrow;
            const char* arrow_name = strict ? "'->'" : "'=>'";
            if (peek().kind != arrow) {
                if (auto err = literal_list(r.body)) return err;
            }
            if (auto err = expect(arrow, arrow_name)) return err;
            if (auto err = literal(r.head)) return err;
            if (peek().kind == Tok::Word && peek().text == "assuming") {
                if (strict) return fail(peek(), "'assuming' is only allowed on drule");
                get();
                if (auto err = literal_list(r.assumptions)) return err;
            }
            if (auto err = expect(Tok::Dot, "'.'")) return err;
            out.push_back({RuleStmt{std::move(r)}, start, id.span});
            return std::nullopt;
        }
        return fail(head, "unknown statement '" + kw + "'");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

ParseError from_fault(const TheoryFault& f, SourceSpan span) {
    ParseErrorKind kind = ParseErrorKind::Syntax;
    switch (f.kind) {
        case TheoryFault::Kind::BadGrade: kind = ParseErrorKind::BadGrade; break;
        case TheoryFault::Kind::DuplicateId: kind = ParseErrorKind::DuplicateId; break;
        case TheoryFault::Kind::RoleClash: kind = ParseErrorKind::RoleClash; break;
        case TheoryFault::Kind::BadRule: kind = ParseErrorKind::Syntax; break;
    }
    return {span, f.message, kind};
}

} // namespace

ParseResult parse_theory(std::string_view text) {
    ParseError lex_err;
    auto toks = Lexer(text).run(lex_err);
    if (!toks) return {std::nullopt, lex_err};
    std::vector<SpannedStmt> stmts;
    if (auto err = Parser(std::move(*toks)).run(stmts)) return {std::nullopt, *err};

    // Scale and decision declarations take effect document-wide, so collect
    // them before checking anything graded.
    Theory t;
    bool scale_seen = false;
    for (const SpannedStmt& s : stmts) {
        if (const auto* sc = std::get_if<ScaleStmt>(&s.stmt)) {
            if (scale_seen)
                return {std::nullopt,
                        ParseError{s.span, "scale declared twice", ParseErrorKind::DuplicateId}};
            scale_seen = true;
            if (sc->n < 1)
                return {std::nullopt,
                        ParseError{s.grade_span, "scale must be at least 1", ParseErrorKind::BadGrade}};
            t.scale = sc->n;
        } else if (const auto* d = std::get_if<DecisionStmt>(&s.stmt)) {
            if (!t.decisions.insert(d->atom).second)
                return {std::nullopt, ParseError{s.span, "decision '" + d->atom + "' declared twice",
                                                 ParseErrorKind::DuplicateId}};
        }
    }

    std::set<std::string> rule_ids;
    for (const SpannedStmt& s : stmts) {
        if (const auto* g = std::get_if<GradedStmt>(&s.stmt)) {
            if (g->grade < 1 || g->grade > t.scale)
                return {std::nullopt,
                        ParseError{s.grade_span,
                                   "grade " + std::to_string(g->grade) + " outside 1.." +
                                       std::to_string(t.scale) +
                                       (scale_seen ? "" : " (declare 'scale N.' to widen)"),
                                   ParseErrorKind::BadGrade}};
            if (t.is_decision_atom(g->literal.atom))
                return {std::nullopt,
                        ParseError{s.span,
                                   "decision atom '" + g->literal.atom +
                                       "' may not be a belief or a goal",
                                   ParseErrorKind::RoleClash}};
            std::map<Literal, int>* base = nullptr;
            const char* what = "";
            switch (g->which) {
                case GradedStmt::Which::Belief: base = &t.beliefs; what = "belief"; break;
                case GradedStmt::Which::GoalPos: base = &t.pos_goals; what = "goal+"; break;
                case GradedStmt::Which::GoalNeg: base = &t.neg_goals; what = "goal-"; break;
            }
            if (!base->emplace(g->literal, g->grade).second)
                return {std::nullopt,
                        ParseError{s.span,
                                   std::string(what) + " '" + to_string(g->literal) +
                                       "' declared twice",
                                   ParseErrorKind::DuplicateId}};
            if (g->which != GradedStmt::Which::Belief) {
                const auto& other =
                    g->which == GradedStmt::Which::GoalPos ? t.neg_goals : t.pos_goals;
                if (other.count(g->literal))
                    return {std::nullopt,
                            ParseError{s.span,
                                       "literal '" + to_string(g->literal) +
                                           "' is both a positive and a negative goal",
                                       ParseErrorKind::RoleClash}};
            }
        } else if (const auto* rs = std::get_if<RuleStmt>(&s.stmt)) {
            if (!rule_ids.insert(rs->rule.id).second)
                return {std::nullopt, ParseError{s.grade_span, "rule id '" + rs->rule.id + "' reused",
                                                 ParseErrorKind::DuplicateId}};
            Theory probe = t; // decisions are known; validate the rule in isolation
            std::set<std::string> ids;
            Rule copy = rs->rule;
            if (auto f = check_single_rule(probe, copy, ids))
                return {std::nullopt, from_fault(*f, s.span)};
            if (rs->rule.kind == RuleKind::Strict) t.strict_rules.push_back(std::move(copy));
            else t.defeasible_rules.push_back(std::move(copy));
        }
    }

    if (auto f = finalize_theory(t)) {
        // All statement-level faults were caught above; anything left has no
        // better span than the document start.
        return {std::nullopt, from_fault(*f, SourceSpan{1, 1})};
    }
    return {std::move(t), std::nullopt};
}

namespace {

void write_rule(std::ostringstream& os, const Rule& r) {
    os << (r.kind == RuleKind::Strict ? "srule " : "drule ") << r.id << ":";
    for (size_t i = 0; i < r.body.size(); ++i)
        os << (i == 0 ? " " : ", ") << to_string(r.body[i]);
    os << (r.kind == RuleKind::Strict ? " -> " : " => ") << to_string(r.head);
    if (!r.assumptions.empty()) {
        os << " assuming ";
        for (size_t i = 0; i < r.assumptions.size(); ++i)
            os << (i == 0 ? "" : ", ") << to_string(r.assumptions[i]);
    }
    os << ".\n";
}

} // namespace

std::string serialize_theory(const Theory& t) {
    std::ostringstream os;
    os << "scale " << t.scale << ".\n";
    for (const std::string& d : t.decisions) os << "decision " << d << ".\n";
    for (const auto& [l, grade] : t.beliefs)
        os << "belief " << grade << ": " << to_string(l) << ".\n";
    for (const auto& [l, grade] : t.pos_goals)
        os << "goal+ " << grade << ": " << to_string(l) << ".\n";
    for (const auto& [l, grade] : t.neg_goals)
        os << "goal- " << grade << ": " << to_string(l) << ".\n";
    for (const Rule& r : t.strict_rules) write_rule(os, r);
    for (const Rule& r : t.defeasible_rules) write_rule(os, r);
    return os.str();
}

} // namespace argdec
