#pragma once

#include <string>

#include "sharecalc/syntax/ops.hpp"
#include "sharecalc/syntax/text.hpp"

namespace testing_util {

inline sharecalc::Term lt(const std::string& s) { return sharecalc::parse_term(s, sharecalc::Language::lsc); }
inline sharecalc::Term st(const std::string& s) { return sharecalc::parse_term(s, sharecalc::Language::sharing); }
inline sharecalc::Term bt(const std::string& s) { return sharecalc::parse_term(s, sharecalc::Language::bang); }
inline std::string pr(const sharecalc::Term& t) { return sharecalc::print_term(t); }

}  // namespace testing_util
