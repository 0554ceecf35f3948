#pragma once

#include "sharecalc/syntax/term.hpp"
#include "sharecalc/syntax/type.hpp"

namespace sharecalc::sharing {

// [[~t]] = \z.[[t]], [[open t]] = [[t]] *, [[!t]] = [[t]], homomorphic on the
// rest; * = \w.w.  Both variable sorts become plain variables; a linear
// variable whose name clashes with an unrestricted one is renamed.
Term to_lsc(const Term& t);

// [[~A]] = 1 -> [[A]] with 1 = iota -> iota, [[!A]] = [[A]], [[A -o B]] = [[A]] -> [[B]].
Type to_lsc_type(const Type& a);
Type unit_type();
Term star();

}  // namespace sharecalc::sharing
