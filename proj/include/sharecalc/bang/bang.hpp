#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sharecalc/syntax/ops.hpp"
#include "sharecalc/syntax/type.hpp"

namespace sharecalc::bang {

enum class Rule : std::uint8_t { dbB, lsB, gcB, derB };

struct Step {
    Rule rule;
    Term reduct;
    Path position;
};

const char* rule_name(Rule r);  // "db!", "ls!", "gc!", "d!"

struct SimplifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_simplified(const Term& t);

// Every redex occurrence, root rules first (db!, ls! per occurrence, gc!,
// d!), then the children.  Simplified mode throws on a der node.
std::vector<Step> redexes(const Term& t, bool simplified);
bool is_nf(const Term& t, bool simplified);

// C<<x>>[x := (!s)L] -> C<<s>>[x := !s]L
Term contract_ls(const Term& t, const Path& occ);
// der((!t)L) -> tL
std::optional<Term> contract_der(const Term& t);

// Dereliction unfolding t |x s, decided up to renaming of bound variables.
bool der_unfold(const Term& t, const Term& s);
// Smallest s with t |x s: every der(r) becomes d[d := r'] for a fresh d.
Term canonical_unfold(const Term& t);

// Typing.  Environments map variables to types of shape !A.
using Env = std::map<VarName, Type>;
Type typecheck(const Env& env, const Term& t);
void check(const Env& env, const Term& t, const Type& expected);
struct Principal {
    Env env;
    Type type;
};
std::optional<Principal> principal(const Term& t);
Principal infer_principal(const Term& t);  // throws TypeError

}  // namespace sharecalc::bang
