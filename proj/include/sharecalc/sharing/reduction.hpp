#pragma once

#include <optional>
#include <vector>

#include "sharecalc/syntax/ops.hpp"

namespace sharecalc::sharing {

enum class Rule : std::uint8_t { sdb, sreq, sls, sgc };

struct Step {
    Rule rule;
    Term reduct;
    Path position;
};

const char* rule_name(Rule r);  // "!db", "!req", "!ls", "!gc"

// Every redex occurrence: at each node the root rules in the order
// !db, !req, !ls (one entry per occurrence of u), !gc, then the children.
std::vector<Step> redexes(const Term& t);
bool is_nf(const Term& t);

// (\'a.t)L s -> t{a:=s}L
std::optional<Term> contract_db(const Term& t);
// open((~t)L) -> tL
std::optional<Term> contract_req(const Term& t);
// t = body[u := (!(~s)L1)L2]; copies (~s)L1 into the occurrence at `occ`
// (a path inside body) and extrudes L2.
bool ls_applies(const Term& t);
Term contract_ls(const Term& t, const Path& occ);
// t[u := (!s)L] -> tL when u is not free in t
std::optional<Term> contract_gc(const Term& t);

// (!(~s)L1)L2 shape of an ES argument.
bool is_shareable(const Term& arg);

}  // namespace sharecalc::sharing
