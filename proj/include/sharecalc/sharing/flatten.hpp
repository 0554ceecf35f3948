#pragma once

#include <vector>

#include "sharecalc/syntax/term.hpp"

namespace sharecalc::sharing {

// One application of t[u := s[v := r]] == t[u := s][v := r] (v not free in t),
// in either direction, anywhere in the term.
std::vector<Term> flatten_steps(const Term& t);

// The whole equivalence class (up to α), t first.  The generator keeps the
// node count, so the class is finite.
std::vector<Term> flatten_class(const Term& t);
bool equiv_flatten(const Term& t, const Term& s);

}  // namespace sharecalc::sharing
