#include "doctest.h"
#include "helpers.hpp"

using namespace sharecalc;
using namespace testing_util;

TEST_CASE("parsing builds the expected trees") {
    Term t = lt("\\x. x x");
    CHECK(t.kind() == Kind::abs);
    CHECK(t.body().kind() == Kind::app);

    Term s = st("open(u)[u := !~v]");
    REQUIRE(s.kind() == Kind::es);
    CHECK(s.body().kind() == Kind::request);
    CHECK(s.name() == VarName::unrestricted("u"));
    CHECK(s.arg().kind() == Kind::prom);
    CHECK(s.arg().child().kind() == Kind::grant);

    Term b = bt("der(!x)");
    CHECK(b.kind() == Kind::der);
    CHECK(b.child().kind() == Kind::prom);
}

TEST_CASE("printing round-trips") {
    for (const char* src : {"\\'a. open('a)[u := !~v]", "(u v)[u := !((\\'a. 'a) (~w))]", "!~(!u)"})
        CHECK(alpha_eq(st(pr(st(src))), st(src)));
    CHECK(pr(lt("(x y) z")) == "x y z");
    CHECK(pr(lt("x (y z)")) == "x (y z)");
}

TEST_CASE("free variables") {
    CHECK(lt("\\x. x y").fv().size() == 1);
    CHECK(lt("\\x. x y").is_free(VarName::plain("y")));
    Term s = st("open(u)[u := !v]");
    CHECK(s.fv().size() == 1);
    CHECK(s.is_free(VarName::unrestricted("v")));
    CHECK(st("(open(u) open(u))[u := !v]").fv().size() == 1);
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(lt("\\x. x"), lt("\\y. y")));
    CHECK_FALSE(alpha_eq(st("\\'a. 'a"), st("\\'a. 'b")));
    CHECK(alpha_eq(st("v0[u := !w]"), st("v0[v := !w]")));
    CHECK(alpha_hash(lt("\\x. x z")) == alpha_hash(lt("\\y. y z")));
}

TEST_CASE("capture-avoiding substitution") {
    Term r = subst_linear(st("\\'b. 'a"), VarName::linear("a"), st("'b"));
    REQUIRE(r.kind() == Kind::abs);
    CHECK(r.name() != VarName::linear("b"));
    CHECK(r.body() == st("'b"));
    CHECK(alpha_eq(substitute(lt("\\y. x y"), VarName::plain("x"), lt("y")), lt("\\z. y z")));
}

TEST_CASE("sort discipline") {
    CHECK_THROWS(parse_term("'a", Language::lsc));
    CHECK_THROWS(parse_term("\\u. u", Language::sharing));
    CHECK_THROWS(parse_term("der(x)", Language::lsc));
    CHECK_THROWS(parse_term("\\'a. (", Language::sharing));
}
