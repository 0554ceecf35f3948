#include "sharecalc/sharing/normal_forms.hpp"

namespace sharecalc::sharing {

const char* tag_name(NfTag t) {
    switch (t) {
    case NfTag::var: return "var";
    case NfTag::lam: return "lam";
    case NfTag::app: return "app";
    case NfTag::req: return "req";
    case NfTag::grant: return "grant";
    case NfTag::bang: return "bang";
    case NfTag::banggrant: return "banggrant";
    }
    return "?";
}

std::optional<NfTag> classify_nf(const Term& t) {
    switch (t.kind()) {
    case Kind::var: return NfTag::var;
    case Kind::abs:
        if (!classify_nf(t.body())) return std::nullopt;
        return NfTag::lam;
    case Kind::grant:
        if (!classify_nf(t.child())) return std::nullopt;
        return NfTag::grant;
    case Kind::prom: {
        auto c = classify_nf(t.child());
        if (!c) return std::nullopt;
        return *c == NfTag::grant ? NfTag::banggrant : NfTag::bang;
    }
    case Kind::app: {
        auto f = classify_nf(t.fn());
        if (!f || *f == NfTag::lam || !classify_nf(t.arg())) return std::nullopt;
        return NfTag::app;
    }
    case Kind::request: {
        auto c = classify_nf(t.child());
        if (!c || *c == NfTag::grant) return std::nullopt;
        return NfTag::req;
    }
    case Kind::es: {
        auto b = classify_nf(t.body());
        if (!b) return std::nullopt;
        auto s = classify_nf(t.arg());
        if (!s || *s == NfTag::banggrant) return std::nullopt;
        if (!t.body().is_free(t.name()) && *s == NfTag::bang) return std::nullopt;
        return b;
    }
    default: return std::nullopt;
    }
}

}  // namespace sharecalc::sharing
