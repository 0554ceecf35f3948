#include "sharecalc/oracle/enumerate.hpp"

namespace sharecalc::oracle {

namespace {

constexpr std::uint32_t kCacheLimit = 6;

VarName indexed(Sort s, const char* base, std::uint32_t depth) {
    VarName v(s, base);
    if (depth > 0) v.index = depth;
    return v;
}

}  // namespace

std::vector<VarName> default_pool(Language lang) {
    if (lang == Language::sharing)
        return {VarName::linear("a"), VarName::linear("b"), VarName::unrestricted("u"), VarName::unrestricted("v")};
    return {VarName::plain("x"), VarName::plain("y"), VarName::plain("z")};
}

Enumerator::Enumerator(Language lang, bool simplified) : Enumerator(lang, default_pool(lang), simplified) {}

Enumerator::Enumerator(Language lang, std::vector<VarName> pool, bool simplified)
    : lang_(lang), pool_(std::move(pool)), simplified_(simplified) {}

VarName Enumerator::outer_binder(std::uint32_t depth) const {
    return indexed(lang_ == Language::sharing ? Sort::unrestricted : Sort::plain, "w", depth);
}

VarName Enumerator::linear_binder(std::uint32_t depth) const { return indexed(Sort::linear, "c", depth); }

void Enumerator::each(std::uint32_t size, const Sink& f) {
    if (size >= 1) gen(size, Scope{}, f);
}

std::vector<Term> Enumerator::all(std::uint32_t size) {
    std::vector<Term> out;
    each(size, [&](const Term& t) { out.push_back(t); });
    return out;
}

std::uint64_t Enumerator::count(std::uint32_t size) {
    std::uint64_t n = 0;
    each(size, [&](const Term&) { ++n; });
    return n;
}

const std::vector<Term>& Enumerator::cached(std::uint32_t size, Scope sc) {
    auto key = std::make_tuple(size, sc.outer, sc.linear);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<Term> out;
    build(size, sc, [&](const Term& t) { out.push_back(t); });
    return cache_.emplace(key, std::move(out)).first->second;
}

void Enumerator::gen(std::uint32_t size, Scope sc, const Sink& f) {
    if (size > kCacheLimit) return build(size, sc, f);
    for (const Term& t : cached(size, sc)) f(t);
}

void Enumerator::build(std::uint32_t size, Scope sc, const Sink& f) {
    if (size == 1) {
        for (const VarName& v : pool_) f(Term::var(v));
        for (std::uint32_t d = 0; d < sc.outer; ++d) f(Term::var(outer_binder(d)));
        for (std::uint32_t d = 0; d < sc.linear; ++d) f(Term::var(linear_binder(d)));
        return;
    }
    const std::uint32_t rest = size - 1;

    // Abstractions bind a linear variable in sharing terms.
    if (lang_ == Language::sharing) {
        VarName a = linear_binder(sc.linear);
        gen(rest, Scope{sc.outer, sc.linear + 1}, [&](const Term& b) { f(Term::abs(a, b)); });
    } else {
        VarName x = outer_binder(sc.outer);
        gen(rest, Scope{sc.outer + 1, sc.linear}, [&](const Term& b) { f(Term::abs(x, b)); });
    }

    for (std::uint32_t i = 1; i + 1 <= rest; ++i) {
        std::uint32_t j = rest - i;
        gen(i, sc, [&](const Term& l) { gen(j, sc, [&](const Term& r) { f(Term::app(l, r)); }); });
    }

    VarName x = outer_binder(sc.outer);
    for (std::uint32_t i = 1; i + 1 <= rest; ++i) {
        std::uint32_t j = rest - i;
        gen(i, Scope{sc.outer + 1, sc.linear},
            [&](const Term& b) { gen(j, sc, [&](const Term& a) { f(Term::es(b, x, a)); }); });
    }

    auto unary = [&](Kind k) { gen(rest, sc, [&](const Term& c) { f(Term::unary(k, c)); }); };
    if (lang_ == Language::sharing) {
        unary(Kind::grant);
        unary(Kind::request);
        unary(Kind::prom);
    } else if (lang_ == Language::bang) {
        unary(Kind::prom);
        if (!simplified_) unary(Kind::der);
    }
}

}  // namespace sharecalc::oracle
