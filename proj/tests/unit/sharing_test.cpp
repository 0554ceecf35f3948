#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

#include "sharecalc/sharing/flatten.hpp"
#include "sharecalc/sharing/normal_forms.hpp"
#include "sharecalc/sharing/reduction.hpp"
#include "sharecalc/sharing/to_lsc.hpp"
#include "sharecalc/sharing/typing.hpp"
#include "sharecalc/sharing/weak.hpp"

using namespace sharecalc;
using namespace sharecalc::sharing;
using namespace testing_util;

namespace {

std::vector<std::string> steps(const Term& t) {
    std::vector<std::string> out;
    for (auto& s : redexes(t)) out.push_back(std::string(rule_name(s.rule)) + " " + pr(s.reduct));
    return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("request") {
    CHECK(contains(steps(st("open((~'a)[u := !v])")), "!req 'a[u := !v]"));
}

TEST_CASE("no substitution without a grant") {
    CHECK(redexes(st("(open(u) open(u))[u := !v]")).empty());
    CHECK_FALSE(ls_applies(st("(open(u) open(u))[u := !v]")));
    CHECK(is_shareable(st("!~v")));
    CHECK_FALSE(is_shareable(st("!v")));
}

TEST_CASE("garbage collection through a substitution list") {
    CHECK(contains(steps(st("u0[u := (!~v)[w := !v2]]")), "!gc u0[w := !v2]"));
}

TEST_CASE("normal form classes") {
    CHECK(classify_nf(st("'a")) == NfTag::var);
    CHECK(std::string(tag_name(*classify_nf(st("(open(u) open(u))[u := !v]")))) == "app");
    CHECK(std::string(tag_name(*classify_nf(st("!~u")))) == "banggrant");
    CHECK_FALSE(classify_nf(st("open(~u)")).has_value());
}

TEST_CASE("flattening") {
    auto cls = flatten_class(st("u0[v := (!~u1)[w := !u2]]"));
    CHECK(cls.size() == 2);
    CHECK(equiv_flatten(st("u0[v := (!~u1)[w := !u2]]"), st("u0[v := !~u1][w := !u2]")));
    CHECK(flatten_class(st("'a")).size() == 1);
    CHECK(flatten_class(st("w[v := (!~u1)[w := !u2]]")).size() == 1);
}

TEST_CASE("weak evaluation") {
    auto one = [](const std::string& src) {
        auto ss = weak_eval(st(src));
        REQUIRE(ss.size() == 1);
        return to_string(ss[0].name) + " " + pr(ss[0].result);
    };
    CHECK(one("(!u)[u := !~v]") == "!ls (!~v)[u := !~v]");
    CHECK(one("(u v)[u := !((\\'a.'a)(~w))]") == "!db (u v)[u := !~w]");
    CHECK(weak_eval(st("\\'a. (\\'b. 'b) 'a")).empty());
}

TEST_CASE("typing example") {
    auto p = principal(st("\\'a. (!~(!u))[u := 'a]"));
    REQUIRE(p.has_value());
    CHECK(print_type(normalize_metas(p->type), TypeSyntax::sharing) == "!~A -o !~(!~A)");
    CHECK_FALSE(principal(st("'a 'a")).has_value());
}

TEST_CASE("translation to LSC") {
    Term g = to_lsc(st("~u"));
    REQUIRE(g.kind() == Kind::abs);
    CHECK_FALSE(g.body().is_free(g.name()));
    Term o = to_lsc(st("open('a)"));
    CHECK(o.kind() == Kind::app);
    CHECK(alpha_eq(o.arg(), lt("\\w. w")));
}
