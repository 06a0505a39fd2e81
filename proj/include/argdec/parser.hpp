#ifndef ARGDEC_PARSER_HPP
#define ARGDEC_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "argdec/theory.hpp"

namespace argdec {

struct SourceSpan {
    int line = 1;   // 1-based
    int column = 1; // 1-based
    bool operator==(const SourceSpan& o) const { return line == o.line && column == o.column; }
};

enum class ParseErrorKind { Syntax, DuplicateId, BadGrade, RoleClash };

const char* to_string(ParseErrorKind k);

struct ParseError {
    SourceSpan span;
    std::string message;
    ParseErrorKind kind = ParseErrorKind::Syntax;
};

struct ParseResult {
    std::optional<Theory> theory;
    std::optional<ParseError> error;
    bool ok() const { return theory.has_value(); }
};

// Parses the theory DSL. Statements are '.'-terminated; '#' starts a
// comment; statement order is irrelevant except that the first error (in
// document order) wins. Grammar:
//
//   scale N.
//   decision d.
//   belief L: lit.
//   goal+ L: lit.            goal- L: lit.
//   srule id: lit{, lit} -> lit.      srule id: -> lit.
//   drule id: lit{, lit} => lit [assuming lit{, lit}].
//
// where lit is `atom` or `~atom`, and atom is an identifier optionally
// prefixed with '@' (rule-applicability atoms). The scale defaults to 1;
// grades above it are rejected.
ParseResult parse_theory(std::string_view text);

// Canonical text: scale first, then statements grouped by kind and sorted
// by identifier, one per line, LF endings. parse_theory(serialize_theory(t))
// reproduces t for every valid theory.
std::string serialize_theory(const Theory& t);

} // namespace argdec

#endif
