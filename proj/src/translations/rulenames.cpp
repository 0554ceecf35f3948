#include "sharecalc/translations/rulenames.hpp"

namespace sharecalc::translations {

namespace {

using LK = lsc::Rulename::Kind;
using SK = sharing::Rulename::Kind;

sharing::Rulename top(SK k) { return sharing::Rulename::top(k); }

VarName to_unrestricted(const VarName& x) { return {Sort::unrestricted, x.name, x.index}; }
VarName to_plain(const VarName& u) { return {Sort::plain, u.name, u.index}; }

[[noreturn]] void foreign(const std::string& what, TranslationKind k) {
    throw TranslationError(what + " is not a " + kind_name(k) + " rulename");
}

sharing::Rulename sigma(const VarName& x, Term payload) {
    return {SK::sigma, to_unrestricted(x), std::move(payload)};
}

}  // namespace

std::vector<sharing::Rulename> translate_rulename(const lsc::Rulename& r, TranslationKind k) {
    const bool is_sigma = r.kind == LK::sigma || r.kind == LK::sigma2;
    switch (k) {
    case TranslationKind::cbn:
        if (r.kind == LK::db) return {top(SK::db)};
        if (r.kind == LK::sigma) return {sigma(r.x, Term::grant(translate(r.payload, k))), top(SK::req)};
        if (r.kind == LK::ls) return {top(SK::ls), top(SK::req)};
        if (r.kind == LK::gc) return {top(SK::gc)};
        break;
    case TranslationKind::cbv:
        if (r.kind == LK::db) return {top(SK::ls), top(SK::req), top(SK::db), top(SK::gc)};
        if (r.kind == LK::sigma && r.payload.kind() == Kind::abs)
            // v* is !~(value translation); the payload drops the promotion
            return {sigma(r.x, translate(r.payload, k).child())};
        if (r.kind == LK::lsv) return {top(SK::ls)};
        if (r.kind == LK::gcvlax) return {top(SK::gc)};
        break;
    case TranslationKind::cbs:
        if (r.kind == LK::db) return {top(SK::req), top(SK::db)};
        if (is_sigma && lsc::is_answer(r.payload)) return {sigma(r.x, translate(r.payload, k))};
        if (r.kind == LK::lsw) return {top(SK::ls)};
        if (r.kind == LK::gc) return {top(SK::gc)};
        if (r.kind == LK::iota) return {{SK::iota, to_unrestricted(r.x), {}}};
        break;
    case TranslationKind::bang: break;
    }
    foreign(lsc::to_string(r), k);
}

std::vector<std::vector<lsc::Rulename>> inverse_rulename(const sharing::Rulename& r, TranslationKind k) {
    auto one = [](LK kind) { return std::vector<std::vector<lsc::Rulename>>{{lsc::Rulename::top(kind)}}; };
    switch (r.kind) {
    case SK::db:
        if (k == TranslationKind::bang) break;
        return one(LK::db);
    case SK::req:
        if (k == TranslationKind::bang) break;
        return {{}};
    case SK::ls:
        if (k == TranslationKind::cbn) return one(LK::ls);
        if (k == TranslationKind::cbv) return {{lsc::Rulename::top(LK::lsv)}, {lsc::Rulename::top(LK::gcvlax_inv)}};
        if (k == TranslationKind::cbs) return one(LK::lsw);
        break;
    case SK::gc:
        if (k == TranslationKind::cbn || k == TranslationKind::cbs) return one(LK::gc);
        if (k == TranslationKind::cbv) return one(LK::gcvlax);
        break;
    case SK::iota:
        if (k == TranslationKind::cbs) return {{lsc::Rulename::iota(to_plain(r.u))}};
        break;
    case SK::sigma: {
        // The payload alone is not an image term; wrap it back into the
        // construct it was cut from before inverting.
        Term source;
        if (k == TranslationKind::cbn && r.payload.kind() == Kind::grant && in_image(Term::request(r.payload), k))
            source = inverse(Term::request(r.payload), k);
        else if (k == TranslationKind::cbv && r.payload.kind() == Kind::grant && in_image(Term::prom(r.payload), k))
            source = inverse(Term::prom(r.payload), k);
        else if (k == TranslationKind::cbs && in_image(r.payload, k) && peel(r.payload).core.kind() == Kind::grant)
            source = inverse(r.payload, k);
        if (!source) break;
        return {{lsc::Rulename::sigma(to_plain(r.u), source)}};
    }
    }
    foreign(sharing::to_string(r), k);
}

}  // namespace sharecalc::translations
