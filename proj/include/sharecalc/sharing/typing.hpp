#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sharecalc/syntax/term.hpp"
#include "sharecalc/syntax/type.hpp"

namespace sharecalc::sharing {

// Delta: unrestricted variables; Gamma: linear variables, each consumed once.
struct TypingEnv {
    std::map<VarName, Type> delta;
    std::map<VarName, Type> gamma;
};

enum class TypingRule : std::uint8_t { lvar, uvar, abs, app, grant, request, prom, sub };
const char* typing_rule_name(TypingRule r);

using Context = std::vector<std::pair<VarName, Type>>;

// Node of a typing derivation Delta; Gamma |- term : type.  Delta lists every
// unrestricted variable in scope; Gamma exactly the consumed linear ones.
struct TypingNode {
    TypingRule rule;
    Term term;
    Context delta;
    Context gamma;
    Type type;
    std::vector<TypingNode> premises;
};

struct TypingResult {
    Type type;
    VarSet consumed;
    TypingEnv env;  // in principal mode, the invented entries for free variables
    TypingNode derivation;
};

// Synthesizes the type and consumed linear variables.  Binders are renamed
// apart first, so the derivation talks about an α-variant of t.  Throws
// TypeError with the first (leftmost-innermost) failure.
TypingResult typecheck(const TypingEnv& env, const Term& t);

// Free variables get fresh metavariables; metas are renumbered from 0.
std::optional<TypingResult> principal(const Term& t);
TypingResult infer_principal(const Term& t);  // throws TypeError

}  // namespace sharecalc::sharing
