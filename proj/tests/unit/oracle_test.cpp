#include <map>
#include <tuple>
#include <unordered_set>

#include "doctest.h"
#include "helpers.hpp"

#include "sharecalc/oracle/properties.hpp"
#include "sharecalc/sharing/flatten.hpp"
#include "sharecalc/translations/rulenames.hpp"

using namespace sharecalc;
using namespace sharecalc::oracle;
using namespace testing_util;

namespace {

// Counts by the size recurrence, independent of the enumerator: a term of
// size n is a variable (n = 1) or a constructor over smaller terms.
struct CountOracle {
    Language lang;
    std::uint64_t pool;
    int unaries;
    std::map<std::tuple<int, int, int>, std::uint64_t> memo;

    std::uint64_t operator()(int n, int outer, int linear) {
        auto key = std::make_tuple(n, outer, linear);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t c = 0;
        if (n == 1) {
            c = pool + outer + linear;
        } else {
            c += lang == Language::sharing ? (*this)(n - 1, outer, linear + 1) : (*this)(n - 1, outer + 1, linear);
            for (int i = 1; i < n - 1; ++i) {
                c += (*this)(i, outer, linear) * (*this)(n - 1 - i, outer, linear);
                c += (*this)(i, outer + 1, linear) * (*this)(n - 1 - i, outer, linear);
            }
            c += unaries * (*this)(n - 1, outer, linear);
        }
        return memo[key] = c;
    }
};

bool has_alpha(const std::vector<Term>& ts, const Term& t) {
    for (const Term& s : ts)
        if (alpha_eq(s, t)) return true;
    return false;
}

}  // namespace

TEST_CASE("enumeration examples") {
    Enumerator one(Language::lsc, {VarName::plain("x")});
    auto size1 = one.all(1);
    REQUIRE(size1.size() == 1);
    CHECK(pr(size1[0]) == "x");

    Enumerator sh(Language::sharing, {VarName::unrestricted("u")});
    auto size2 = sh.all(2);
    for (const char* s : {"~u", "open(u)", "!u", "\\'a.'a"}) CHECK(has_alpha(size2, st(s)));

    auto size3 = one.all(3);
    CHECK(has_alpha(size3, lt("\\x. \\y. y")));
    CHECK(has_alpha(size3, lt("\\x. x x")) == false);  // four nodes
    CHECK(has_alpha(one.all(4), lt("\\x. x x")));
    CountOracle lsc1{Language::lsc, 1, 0, {}};
    CHECK(size3.size() == lsc1(3, 0, 0));
}

TEST_CASE("enumeration counts follow the size recurrence") {
    CountOracle lsc{Language::lsc, 3, 0, {}};
    CountOracle sharing{Language::sharing, 4, 3, {}};
    CountOracle bang_full{Language::bang, 3, 2, {}};
    CountOracle bang_simple{Language::bang, 3, 1, {}};
    Enumerator el(Language::lsc), es(Language::sharing), ebf(Language::bang), ebs(Language::bang, true);
    for (int n = 1; n <= 9; ++n) CHECK(el.count(n) == lsc(n, 0, 0));
    for (int n = 1; n <= 8; ++n) {
        CHECK(es.count(n) == sharing(n, 0, 0));
        CHECK(ebf.count(n) == bang_full(n, 0, 0));
        CHECK(ebs.count(n) == bang_simple(n, 0, 0));
    }
    CHECK(sharing(9, 0, 0) == 34665296);
}

TEST_CASE("enumerated terms are pairwise alpha-distinct") {
    Enumerator es(Language::sharing);
    for (int n = 1; n <= 5; ++n) {
        std::unordered_set<Term, AlphaHash, AlphaEq> seen;
        auto all = es.all(n);
        for (const Term& t : all) {
            CHECK(t.size() == static_cast<std::uint32_t>(n));
            seen.insert(t);
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("reachable sets") {
    auto x = reachable_set(lt("x"), lsc_stepper(lsc::Calculus::cbn));
    CHECK(x.nodes.size() == 1);
    CHECK_FALSE(x.truncated);

    auto g = reachable_set(lt("(\\x. x) y"), lsc_stepper(lsc::Calculus::cbn));
    CHECK(g.nodes.size() == 4);
    CHECK(g.find(lt("x[x := y]")) < 4);
    CHECK(g.find(lt("y[x := y]")) < 4);
    CHECK(g.find(lt("y")) < 4);
    CHECK(longest_path(g) == std::optional<std::size_t>(3));
    CHECK_FALSE(g.truncated);

    Term omega = st("(\\'a. 'a 'a) (\\'a. 'a 'a)");
    auto capped = reachable_set(omega, sharing_stepper(), Caps{10000, 20});
    CHECK(capped.truncated);
    CHECK_FALSE(longest_path(capped).has_value());

    auto few = reachable_set(st("(u u)[u := !~(\\'a. 'a)]"), sharing_stepper(), Caps{2});
    CHECK(few.truncated);
    CHECK(few.nodes.size() <= 2);
}

TEST_CASE("re-expanding a reachable set adds nothing") {
    Term t = st("(u u)[u := !~(\\'a. 'a)]");
    auto g = reachable_set(t, sharing_stepper());
    for (const Term& n : g.nodes) {
        auto h = reachable_set(n, sharing_stepper());
        for (const Term& m : h.nodes) CHECK(g.find(m) < g.nodes.size());
    }
    CHECK(reachable_set(t, sharing_stepper()).nodes.size() == g.nodes.size());
}

TEST_CASE("alpha canonical representatives") {
    CHECK(alpha_canonical(lt("\\a. \\b. a b")) == alpha_canonical(lt("\\p. \\q. p q")));
    CHECK(pr(alpha_canonical(lt("\\w. w w1"))) == "\\w. w w1");
    CHECK(pr(alpha_canonical(lt("\\p. p w"))) == "\\w1. w1 w");
}

TEST_CASE("confluence on the flattening peak") {
    Term t = st("u0[u := (!v)[v := (!~u1)[w := !u2]]]");
    auto r = check_confluence_mod_flatten(t);
    CHECK(r.ok());
    CHECK(r.checked == 1);
    CHECK(r.inconclusive == 0);
    auto g = reachable_set(t, sharing_stepper());
    std::vector<Term> nfs;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (g.terminal(i)) nfs.push_back(g.nodes[i]);
    REQUIRE(nfs.size() == 1);
    CHECK(pr(nfs[0]) == "u0");
}

TEST_CASE("simulation of a cbn substitution step") {
    using translations::TranslationKind;
    auto seq = translations::translate_rulename(lsc::Rulename::top(lsc::Rulename::Kind::ls), TranslationKind::cbn);
    REQUIRE(seq.size() == 2);
    CHECK(sharing::to_string(seq[0]) == "!ls");
    CHECK(sharing::to_string(seq[1]) == "!req");
    auto r = check_simulation(lt("x[x := y]"), TranslationKind::cbn);
    CHECK(r.ok());
    CHECK(r.checked > 0);
}

TEST_CASE("strong normalization fixture") {
    Term t = translations::translate(lt("(\\x. x) y"), translations::TranslationKind::cbn);
    auto n = check_sn(t);
    REQUIRE(n.has_value());
    CHECK(*n >= 1);
    CHECK(*n <= 5000);
    CHECK_FALSE(check_sn(st("(\\'a. 'a 'a) (\\'a. 'a 'a)"), 5000).has_value());
}

TEST_CASE("reports keep the first counterexample") {
    Enumerator e(Language::lsc);
    auto r = run_exhaustive("demo", e, 4, [](const Term& t) {
        PropertyReport p;
        p.checked = 1;
        if (t.size() >= 3) p.fail(pr(t), "small", "big");
        return p;
    });
    CHECK(r.checked == 3 + 4 + 26 + 97);
    CHECK(r.failure_count == 26 + 97);
    CHECK(r.failures.size() == PropertyReport::kept);
    CHECK(r.failures[0].input == pr(e.all(3)[0]));
    CHECK_FALSE(r.ok());
    CHECK(report_text(r).rfind("demo: 130 checked, 123 failed, 0 inconclusive", 0) == 0);
}

TEST_CASE("formula enumeration") {
    std::size_t n = 0;
    each_formula({"a"}, 1, 1, [&](const mscll::Formula&) { ++n; });
    CHECK(n == 2 + 4 * 2 + 2 * 2 * 2);
    std::size_t deep = 0;
    each_formula({"a"}, 0, 2, [&](const mscll::Formula& f) {
        if (f.depth() == 2) ++deep;
    });
    // depth exactly 2: unary over depth 1, or binary with an atomic side
    CHECK(deep == 4 * 16 + 2 * (2 * 16 + 2 * 16));
}
