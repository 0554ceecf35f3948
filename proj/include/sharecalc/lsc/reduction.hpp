#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sharecalc/syntax/ops.hpp"
#include "sharecalc/syntax/term.hpp"

namespace sharecalc::lsc {

enum class Rule : std::uint8_t { db, ls, lsv, lsw, gc, gcvlax };

// N = {db, ls, gc}, V = {db, lsv, gcvlax}, S = {db, lsw, gc}, Nd = {db, lsv, gc}.
enum class Calculus : std::uint8_t { cbn, cbv, cbs, cbnd };

struct Step {
    Rule rule;
    Term reduct;
    Path position;  // of the contracted redex
};

const char* rule_name(Rule r);
const char* calculus_name(Calculus c);
std::optional<Calculus> calculus_from_name(const std::string& s);

Rule subst_rule(Calculus c);
Rule gc_rule(Calculus c);

// Strict values are abstractions; lax values are variables or abstractions.
bool is_strict_value(const Term& t);
bool is_lax_value(const Term& t);
// vL with v a strict value.
bool is_answer(const Term& t);

// One entry per redex occurrence.  Root rules come first (db, then one entry
// per substituted occurrence, then garbage collection), then the children left
// to right.
std::vector<Step> redexes(const Term& t, Calculus c);
bool is_nf(const Term& t, Calculus c);

// Root contractions, shared with weak evaluation.
// (\x.t)L s -> t[x:=s]L
std::optional<Term> contract_db(const Term& t);
// t = body[x := arg]; copies into the occurrence of x at `occ` (a path inside
// body).  The rule decides what is copied and whether L is extruded.
Term contract_subst(const Term& t, Rule rule, const Path& occ);
bool subst_applies(const Term& t, Rule rule);
std::optional<Term> contract_gc(const Term& t, Rule rule);

}  // namespace sharecalc::lsc
