#pragma once

#include <cstdint>
#include <vector>

#include "sharecalc/syntax/term.hpp"

namespace sharecalc {

// Child indices from the root down to a subterm.
using Path = std::vector<std::uint8_t>;

// Every variable name occurring in t, free or bound.
VarSet all_names(const Term& t);

// t{x := s}, renaming binders of t that would capture fv(s).
Term substitute(const Term& t, const VarName& x, const Term& s);
Term rename_free(const Term& t, const VarName& from, const VarName& to);
// Linear substitution for sharing terms; same as substitute with a sort check.
Term subst_linear(const Term& t, const VarName& a, const Term& s);

// Paths of the free occurrences of x in t, in pre-order (left to right).
std::vector<Path> occurrence_paths(const Term& t, const VarName& x);
const Term& subterm_at(const Term& t, const Path& p);
// Replaces the subterm at `p` by s; binders on the way down that would capture
// a free variable of s are renamed first.
Term replace_at(const Term& t, const Path& p, const Term& s);
// Replaces without any renaming (variable-capturing).
Term replace_at_capturing(const Term& t, const Path& p, const Term& s);

bool alpha_eq(const Term& a, const Term& b);
// Hash invariant under renaming of bound variables.
std::size_t alpha_hash(const Term& t);

struct AlphaHash {
    std::size_t operator()(const Term& t) const { return alpha_hash(t); }
};
struct AlphaEq {
    bool operator()(const Term& a, const Term& b) const { return alpha_eq(a, b); }
};

// Renames every binder so that binders are pairwise distinct and distinct from
// the free variables.  The result is α-equal to t.
Term rename_binders_apart(const Term& t);

// Substitution contexts: t = core[x1 := s1]...[xn := sn].
struct Peeled {
    Term core;
    std::size_t depth = 0;
};
Peeled peel(const Term& t);
// Replaces the core under the first `depth` ES layers of t.
Term replace_core(const Term& t, std::size_t depth, const Term& core);
// Renames binders among the first `depth` ES layers of t that lie in `avoid`.
Term freshen_frames(const Term& t, std::size_t depth, const VarSet& avoid);

// One-hole contexts (a term containing exactly one hole node).
enum class Capture { with, avoiding };
Term plug(const Term& ctx, const Term& t, Capture mode);
Path hole_path(const Term& ctx);

}  // namespace sharecalc
