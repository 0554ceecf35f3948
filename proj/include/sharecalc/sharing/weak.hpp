#pragma once

#include <string>
#include <vector>

#include "sharecalc/sharing/reduction.hpp"

namespace sharecalc::sharing {

// rho ::= !db | sigma![u/(~t)L] | iota!(u) | !ls | !gc | !req
struct Rulename {
    enum class Kind : std::uint8_t { db, sigma, iota, ls, gc, req };
    Kind kind;
    VarName u;
    Term payload;

    static Rulename top(Kind k) { return {k, {}, {}}; }
};

bool same_rulename(const Rulename& a, const Rulename& b);
std::string to_string(const Rulename& r);
Rulename::Kind to_rulename(Rule r);

struct WeakStep {
    Rulename name;
    Term result;
    Path position;
};

// Top-level weak steps (!db, !ls, !gc, !req).  No evaluation under a
// lambda, a grant or a promotion, except the promoted argument of a needed
// substitution.  Listed in rule order.
std::vector<WeakStep> weak_eval(const Term& t);

// Auxiliary judgments: positions a sigma![u/-] step may fill, the steps for a
// given payload, and t ->iota!(u) t.
std::vector<Path> sigma_sites(const Term& t, const VarName& u);
std::vector<WeakStep> weak_sigma_steps(const Term& t, const VarName& u, const Term& payload);
bool weak_iota(const Term& t, const VarName& u);

}  // namespace sharecalc::sharing
