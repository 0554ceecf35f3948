#pragma once

#include <map>

#include "sharecalc/syntax/term.hpp"
#include "sharecalc/syntax/type.hpp"

namespace sharecalc::lsc {

using Env = std::map<VarName, Type>;

// Checking mode: succeeds iff t has type `expected` under env (binders carry
// no annotations).  Throws TypeError otherwise.
void check(const Env& env, const Term& t, const Type& expected);

// Synthesis; fails with "cannot infer binder type" when the type is not
// determined by env.
Type synthesize(const Env& env, const Term& t);

// Principal typing of a possibly open term: free variables missing from env
// get fresh metavariables.  Returns the type with metas renumbered from 0, or
// nothing when the term is untypable.
struct Principal {
    Env env;
    Type type;
};
std::optional<Principal> principal(const Term& t, const Env& env = {});
// Same, throwing the first TypeError.
Principal infer_principal(const Term& t, const Env& env = {});

}  // namespace sharecalc::lsc
