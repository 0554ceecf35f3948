#include "doctest.h"
#include "helpers.hpp"

#include "sharecalc/bang/bang.hpp"

using namespace sharecalc;
using namespace testing_util;

TEST_CASE("bang rules") {
    auto full = bang::redexes(bt("der((!x)[y := !z])"), false);
    REQUIRE(full.size() == 2);  // the inner garbage ES is a gc! redex too
    CHECK(full[0].rule == bang::Rule::derB);
    CHECK(pr(full[0].reduct) == "x[y := !z]");
    CHECK(full[1].rule == bang::Rule::gcB);

    auto ls = bang::redexes(bt("w[w := (!x)[y := !z]]"), true);
    REQUIRE(ls.size() >= 1);
    CHECK(ls[0].rule == bang::Rule::lsB);
    CHECK(pr(ls[0].reduct) == "x[w := !x][y := !z]");

    auto gc = bang::redexes(bt("x[y := !z]"), true);
    REQUIRE(gc.size() == 1);
    CHECK(gc[0].rule == bang::Rule::gcB);
    CHECK(pr(gc[0].reduct) == "x");

    CHECK_THROWS_AS(bang::redexes(bt("der(x)"), true), bang::SimplifiedError);
}

TEST_CASE("dereliction unfolding") {
    CHECK(bang::der_unfold(bt("der(!x)"), bt("z[z := !x]")));
    CHECK(bang::der_unfold(bt("x"), bt("x[y := !z]")));
    CHECK_FALSE(bang::der_unfold(bt("x"), bt("y")));
    CHECK(bang::der_unfold(bt("\\x. der(x)"), bt("\\y. d[d := y]")));
    Term t = bt("der(der(!(!x))) y");
    CHECK(bang::der_unfold(t, bang::canonical_unfold(t)));
    CHECK(bang::is_simplified(bang::canonical_unfold(t)));
}

TEST_CASE("bang typing") {
    auto A = parse_type("!a", TypeSyntax::bang);
    bang::Env env{{VarName::plain("x"), A}};
    CHECK(print_type(bang::typecheck(env, bt("x")), TypeSyntax::bang) == "a");
    CHECK(print_type(bang::typecheck(env, bt("!x")), TypeSyntax::bang) == "!a");
    CHECK_THROWS_AS(bang::typecheck({}, bt("x")), TypeError);
    auto p = bang::principal(bt("\\x. x"));
    REQUIRE(p);
    CHECK(print_type(p->type, TypeSyntax::bang) == "!A -> A");
}
