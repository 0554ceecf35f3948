#pragma once

#include <string>
#include <vector>

#include "sharecalc/lsc/reduction.hpp"

namespace sharecalc::lsc {

// Labels of weak evaluation steps.  sigma carries the substituted term, iota
// the needed variable; sigma2 is the sigma step on an ES argument that is
// itself the variable (CBS).  gcvlax_inv labels the garbage-introduction steps
// of the CBV extension.
struct Rulename {
    enum class Kind : std::uint8_t { db, sigma, ls, gc, lsv, gcvlax, lsw, iota, sigma2, gcvlax_inv };
    Kind kind;
    VarName x;
    Term payload;

    static Rulename top(Kind k) { return {k, {}, {}}; }
    static Rulename sigma(VarName x, Term t) { return {Kind::sigma, std::move(x), std::move(t)}; }
    static Rulename iota(VarName x) { return {Kind::iota, std::move(x), {}}; }
};

bool same_rulename(const Rulename& a, const Rulename& b);
std::string to_string(const Rulename& r);
Rulename::Kind to_rulename(Rule r);

struct WeakStep {
    Rulename name;
    Term result;
    Path position;
};

// Top-level weak steps of CBN, CBV or CBS (db/ls/gc, db/lsv/gcvlax,
// db/lsw/gc).  Nondeterministic alternatives are all listed in rule order;
// the first one is the deterministic choice.  CBNd has no weak system.
std::vector<WeakStep> weak_eval_steps(const Term& t, Calculus c);

// Auxiliary judgments.  Positions of the occurrences of x that a
// sigma[x/-] step may replace, and whether t ->iota(x) t holds (CBS).
struct SigmaSite {
    Path path;
    bool on_es_argument;  // derived by the CBS rule for t[u := x]
};
std::vector<SigmaSite> sigma_sites(const Term& t, Calculus c, const VarName& x);
std::vector<WeakStep> weak_sigma_steps(const Term& t, Calculus c, const VarName& x, const Term& payload);
bool weak_iota(const Term& t, Calculus c, const VarName& x);

// CBV garbage introduction, the inverse of gcvlax: does `to` contract to
// `from` by one gcvlax step (in any context, or in a weak context)?
bool is_gcvlax_inverse_step(const Term& from, const Term& to, bool weak);

}  // namespace sharecalc::lsc
