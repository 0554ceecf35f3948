#include "doctest.h"
#include "helpers.hpp"

#include "sharecalc/translations/translate.hpp"

using namespace sharecalc;
using namespace sharecalc::translations;
using namespace testing_util;

TEST_CASE("cbn translation") {
    CHECK(pr(translate(lt("x"), TranslationKind::cbn)) == "open(x)");
    CHECK(pr(translate(lt("\\x. x"), TranslationKind::cbn)) == "\\'a. open(x)[x := 'a]");
    CHECK(print_type(translate_type(parse_type("A -> A", TypeSyntax::simple), TranslationKind::cbn), TypeSyntax::sharing) == "!~A -o A");
}

TEST_CASE("cbv translation") {
    CHECK(pr(translate(lt("x"), TranslationKind::cbv)) == "!x");
    CHECK(pr(translate(lt("x y"), TranslationKind::cbv)) == "open(u)[u := !x] (!y)");
}

TEST_CASE("cbs translation") {
    CHECK(pr(translate(lt("x"), TranslationKind::cbs)) == "x");
    CHECK(pr(translate(lt("x y"), TranslationKind::cbs)) == "open(x) (!y)");
}

TEST_CASE("bang translation") {
    CHECK(pr(translate(bt("!x"), TranslationKind::bang)) == "!~open(x)");
    CHECK(pr(translate(bt("x y"), TranslationKind::bang)) == "open(x) open(y)");
    CHECK_THROWS_AS(translate(bt("der(x)"), TranslationKind::bang), TranslationError);
}

TEST_CASE("image membership and inverse") {
    CHECK(in_image(st("open(~(open(u)))"), TranslationKind::cbn));
    CHECK(in_image(st("open(u)[u := !x]"), TranslationKind::cbv));
    for (auto k : {TranslationKind::cbn, TranslationKind::cbv, TranslationKind::cbs, TranslationKind::bang})
        CHECK_FALSE(in_image(st("~u"), k));
    CHECK(pr(inverse(st("open(x)"), TranslationKind::cbn)) == "x");
    CHECK(pr(inverse(st("open(u)[u := !x] (!y)"), TranslationKind::cbv)) == "x y");
    CHECK_THROWS_AS(inverse(st("~u"), TranslationKind::cbs), TranslationError);
}

#include "sharecalc/translations/rulenames.hpp"

namespace {
std::string seq(const std::vector<sharing::Rulename>& rs) {
    std::string out;
    for (const auto& r : rs) out += (out.empty() ? "" : ",") + sharing::to_string(r);
    return out;
}
}  // namespace

TEST_CASE("rulename translation") {
    using LK = lsc::Rulename::Kind;
    CHECK(seq(translate_rulename(lsc::Rulename::top(LK::db), TranslationKind::cbv)) == "!ls,!req,!db,!gc");
    CHECK(seq(translate_rulename(lsc::Rulename::top(LK::gc), TranslationKind::cbn)) == "!gc");
    CHECK(seq(translate_rulename(lsc::Rulename::top(LK::ls), TranslationKind::cbn)) == "!ls,!req");
    CHECK(seq(translate_rulename(lsc::Rulename::top(LK::db), TranslationKind::cbs)) == "!req,!db");
    CHECK(seq(translate_rulename(lsc::Rulename::sigma(VarName::plain("x"), lt("y")), TranslationKind::cbn)) ==
          "sigma![x/~open(y)],!req");
    CHECK_THROWS_AS(translate_rulename(lsc::Rulename::top(LK::lsv), TranslationKind::cbn), TranslationError);

    auto inv = inverse_rulename(sharing::Rulename::top(sharing::Rulename::Kind::req), TranslationKind::cbn);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0].empty());
    CHECK(inverse_rulename(sharing::Rulename::top(sharing::Rulename::Kind::ls), TranslationKind::cbv).size() == 2);
}
