#pragma once

#include <vector>

#include "sharecalc/syntax/term.hpp"

namespace sharecalc::lsc {

// One-step fusion successors, in any context:
//   w     t[x:=s]              => t                  x not in fv(t)
//   c     t[x:=s][y:=s]        => t{x:=y}[y:=s]      y not in fv(s)
//   abs   \x.(t[y:=s])         => (\x.t)[y:=s]       x not in fv(s)
//   appL  t[x:=s] r            => (t r)[x:=s]        x not in fv(r)
//   appR  t (r[x:=s])          => (t r)[x:=s]        x not in fv(t)
//   esL   t[x:=s][y:=r]        => t[y:=r][x:=s]      x not in fv(r), y not in fv(s)
//   esR   t[x:=s[y:=r]]        => t[x:=s][y:=r]      y not in fv(t)
std::vector<Term> fusion_steps(const Term& t);

}  // namespace sharecalc::lsc
