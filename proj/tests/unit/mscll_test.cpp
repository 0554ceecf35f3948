#include "doctest.h"
#include "helpers.hpp"

#include "sharecalc/mscll/derivation.hpp"

using namespace sharecalc;
using namespace sharecalc::mscll;
using namespace testing_util;

namespace {
Formula F(const std::string& s) { return parse_formula(s); }
}  // namespace

TEST_CASE("linear negation") {
    CHECK(neg(F("a * b")) == F("a^ | b^"));
    CHECK(neg(F("~a")) == F("@a^"));
    CHECK(neg(neg(F("!a"))) == F("!a"));
    CHECK(print_formula(F("?(a | !b^) * ~c")) == "?(a | !b^) * ~c");
}

TEST_CASE("mell embedding") {
    CHECK(embed_mell(F("!a")) == F("!~a"));
    CHECK(embed_mell(F("?a^")) == F("?@a^"));
    CHECK(embed_mell(F("a * b")) == F("a * b"));
    CHECK_THROWS(embed_mell(F("~a")));
}

TEST_CASE("types to formulas") {
    auto T = [](const std::string& s) { return parse_type(s, TypeSyntax::sharing); };
    CHECK(type_to_formula(T("a -o b")) == F("a^ | b"));
    CHECK(type_to_formula(T("~a")) == F("~a"));
    CHECK(type_to_formula(T("!a")) == F("!a"));
}

TEST_CASE("derivation checker") {
    Derivation ax{Rule::ax, Sequent({F("a"), F("a^")}), {}, {}};
    CHECK(check_derivation(ax).empty());
    Derivation bad{Rule::ax, Sequent({F("a"), F("a")}), {}, {}};
    CHECK(check_derivation(bad).size() == 1);

    Derivation dem{Rule::demandI, Sequent({F("@a^"), F("a")}), {ax}, {}};
    Derivation good_der{Rule::derD, Sequent({F("?@a^"), F("a")}), {dem}, {}};
    CHECK(check_derivation(good_der).empty());
    // the plain MELL dereliction shape is not a rule
    Derivation mell_der{Rule::derD, Sequent({F("?a^"), F("a")}), {ax}, {}};
    CHECK_FALSE(check_derivation(mell_der).empty());
    Derivation drop_demand{Rule::derD, Sequent({F("?a^"), F("a")}), {dem}, {}};
    CHECK_FALSE(check_derivation(drop_demand).empty());
}

TEST_CASE("compile typing derivations") {
    auto compiled = [](const std::string& term, sharing::TypingEnv env) {
        auto r = sharing::typecheck(env, st(term));
        Derivation d = compile_typing(r.derivation);
        CHECK(check_derivation(d).empty());
        CHECK(d.conclusion == soundness_sequent(r.derivation.delta, r.derivation.gamma, r.derivation.type));
        return d;
    };
    Type a = Type::atom("a");
    Derivation lv = compiled("'x", {{}, {{VarName::linear("x"), a}}});
    CHECK(lv.rule == Rule::ax);
    CHECK(lv.conclusion == Sequent({F("a^"), F("a")}));

    Derivation uv = compiled("u", {{{VarName::unrestricted("u"), a}}, {}});
    CHECK(uv.conclusion == Sequent({F("?@a^"), F("~a")}));
    CHECK(uv.rule == Rule::grantI);
    REQUIRE(uv.premises.size() == 1);
    CHECK(uv.premises[0].rule == Rule::derD);

    Derivation gr = compiled("~'x", {{}, {{VarName::linear("x"), a}}});
    CHECK(gr.rule == Rule::grantI);
    CHECK(gr.premises[0].rule == Rule::ax);

    compiled("\\'a. (!~(!u))[u := 'a]", {});
    compiled("(\\'b. 'b) (open(u))[u := !~v]", {{{VarName::unrestricted("v"), a}}, {}});
}
