#pragma once

#include <stdexcept>
#include <string>

#include "sharecalc/syntax/term.hpp"

namespace sharecalc {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

// A term that does not belong to the expected language (wrong variable sort,
// foreign constructor, stray hole).
struct SortError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Term parse_term(const std::string& text, Language lang);
// Like parse_term but accepts exactly one hole `#`.
Term parse_context(const std::string& text, Language lang);

std::string print_term(const Term& t);

// Line-per-constructor form, two spaces of indentation per level.
std::string ast_text(const Term& t);
Term parse_ast_text(const std::string& text);

void validate(const Term& t, Language lang, bool allow_hole = false);
bool conforms(const Term& t, Language lang);

const char* language_name(Language lang);

}  // namespace sharecalc
