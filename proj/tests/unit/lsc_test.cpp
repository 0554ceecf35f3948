#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

#include "sharecalc/lsc/fusion.hpp"
#include "sharecalc/lsc/reduction.hpp"
#include "sharecalc/lsc/weak.hpp"

using namespace sharecalc;
using namespace sharecalc::lsc;
using namespace testing_util;

namespace {

std::vector<std::string> reducts(const Term& t, Calculus c, const char* rule) {
    std::vector<std::string> out;
    for (auto& s : redexes(t, c))
        if (std::string(rule_name(s.rule)) == rule) out.push_back(pr(s.reduct));
    return out;
}

bool has(const std::vector<Term>& ts, const Term& t) {
    return std::any_of(ts.begin(), ts.end(), [&](const Term& s) { return alpha_eq(s, t); });
}

}  // namespace

TEST_CASE("db at a distance") {
    CHECK(reducts(lt("(\\x. x)[y := z] w"), Calculus::cbn, "db") == std::vector<std::string>{"x[x := w][y := z]"});
}

TEST_CASE("cbv substitutes strict values only") {
    CHECK(redexes(lt("x[x := y]"), Calculus::cbv).empty());
    CHECK_FALSE(is_nf(lt("x[y := \\z. z]"), Calculus::cbv));
    CHECK(is_strict_value(lt("\\x. x")));
    CHECK_FALSE(is_strict_value(lt("x")));
    CHECK(is_lax_value(lt("x")));
}

TEST_CASE("cbs substitutes answers") {
    auto r = reducts(lt("(x x)[x := \\y. y]"), Calculus::cbs, "lsw");
    std::sort(r.begin(), r.end());
    CHECK(r == std::vector<std::string>{"((\\y. y) x)[x := \\y. y]", "(x (\\y. y))[x := \\y. y]"});
    CHECK(is_answer(lt("(\\x. x)[y := z]")));
    CHECK_FALSE(is_nf(lt("x[y := z z]"), Calculus::cbs));
}

TEST_CASE("normal forms") {
    CHECK(is_nf(lt("x"), Calculus::cbn));
    CHECK(is_nf(lt("x"), Calculus::cbv));
    CHECK(is_nf(lt("x"), Calculus::cbs));
    CHECK_FALSE(is_nf(lt("(\\x. x) y"), Calculus::cbn));
}

TEST_CASE("weak evaluation examples") {
    auto names = [](const std::vector<WeakStep>& ss) {
        std::vector<std::string> out;
        for (auto& s : ss) out.push_back(to_string(s.name) + " " + pr(s.result));
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(names(weak_eval_steps(lt("(x x y)[x := \\w. w]"), Calculus::cbn)) ==
          std::vector<std::string>{"ls ((\\w. w) x y)[x := \\w. w]"});
    auto both = names(weak_eval_steps(lt("((\\x. x) y)[z := \\w. w]"), Calculus::cbn));
    REQUIRE(both.size() == 2);
    CHECK(both[0].rfind("db", 0) == 0);
    CHECK(both[1].rfind("gc", 0) == 0);
    CHECK(names(weak_eval_steps(lt("(x y)[x := z z][z := \\w. w]"), Calculus::cbs)) ==
          std::vector<std::string>{"lsw (x y)[x := (\\w. w) z][z := \\w. w]"});
    CHECK(weak_eval_steps(lt("\\x. (\\y. y) x"), Calculus::cbn).empty());
}

TEST_CASE("fusion") {
    CHECK(has(fusion_steps(lt("x[y := \\z. z]")), lt("x")));
    CHECK(has(fusion_steps(lt("x[x := s][y := s]")), lt("y[y := s]")));
    CHECK(has(fusion_steps(lt("\\x. t[y := s]")), lt("(\\x. t)[y := s]")));
    CHECK_FALSE(has(fusion_steps(lt("\\x. t[y := x]")), lt("(\\x. t)[y := x]")));
}
