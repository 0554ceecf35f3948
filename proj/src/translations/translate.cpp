#include "sharecalc/translations/translate.hpp"

#include "sharecalc/syntax/ops.hpp"
#include "sharecalc/syntax/text.hpp"

namespace sharecalc::translations {

const char* kind_name(TranslationKind k) {
    switch (k) {
    case TranslationKind::cbn: return "cbn";
    case TranslationKind::cbv: return "cbv";
    case TranslationKind::cbs: return "cbs";
    case TranslationKind::bang: return "bang";
    }
    return "?";
}

std::optional<TranslationKind> kind_from_name(const std::string& s) {
    if (s == "cbn") return TranslationKind::cbn;
    if (s == "cbv") return TranslationKind::cbv;
    if (s == "cbs") return TranslationKind::cbs;
    if (s == "bang") return TranslationKind::bang;
    return std::nullopt;
}

Language source_language(TranslationKind k) { return k == TranslationKind::bang ? Language::bang : Language::lsc; }

namespace {

VarName to_u(const VarName& x) { return {Sort::unrestricted, x.name, x.index}; }
VarName to_plain(const VarName& u) { return {Sort::plain, u.name, u.index}; }

struct Forward {
    TranslationKind k;
    VarName u;  // binder of the CBV application pattern

    VarName linear(unsigned depth) const {
        return depth == 0 ? VarName::linear("a") : VarName(Sort::linear, "a", depth);
    }

    Term lam(const Term& t, unsigned depth) {
        VarName a = linear(depth);
        return Term::abs(a, Term::es(run(t.body(), depth + 1), to_u(t.name()), Term::var(a)));
    }

    Term run(const Term& t, unsigned depth) {
        switch (t.kind()) {
        case Kind::var: {
            Term x = Term::var(to_u(t.name()));
            switch (k) {
            case TranslationKind::cbn:
            case TranslationKind::bang: return Term::request(x);
            case TranslationKind::cbv: return Term::prom(x);
            case TranslationKind::cbs: return x;
            }
            break;
        }
        case Kind::abs: {
            Term l = lam(t, depth);
            if (k == TranslationKind::cbv) return Term::prom(Term::grant(l));
            if (k == TranslationKind::cbs) return Term::grant(l);
            return l;
        }
        case Kind::app: {
            Term f = run(t.fn(), depth), s = run(t.arg(), depth);
            switch (k) {
            case TranslationKind::cbn: return Term::app(f, Term::prom(Term::grant(s)));
            case TranslationKind::cbv: return Term::app(Term::es(Term::request(Term::var(u)), u, f), s);
            case TranslationKind::cbs: return Term::app(Term::request(f), Term::prom(s));
            case TranslationKind::bang: return Term::app(f, s);
            }
            break;
        }
        case Kind::es: {
            Term b = run(t.body(), depth), s = run(t.arg(), depth);
            switch (k) {
            case TranslationKind::cbn: s = Term::prom(Term::grant(s)); break;
            case TranslationKind::cbs: s = Term::prom(s); break;
            default: break;
            }
            return Term::es(b, to_u(t.name()), s);
        }
        case Kind::prom:
            if (k == TranslationKind::bang) return Term::prom(Term::grant(run(t.child(), depth)));
            break;
        case Kind::der:
            if (k == TranslationKind::bang)
                throw TranslationError("der(...) has no Bang translation; apply dereliction unfolding first");
            break;
        default: break;
        }
        throw TranslationError(std::string("unexpected ") + sharecalc::kind_name(t.kind()) + " in a " +
                               language_name(source_language(k)) + " term");
    }
};

// Recognizer and inverse in one pass.
struct Backward {
    TranslationKind k;
    std::vector<std::string>* witness;

    std::optional<Term> fail() const { return std::nullopt; }
    void note(const char* prod) const {
        if (witness) witness->push_back(prod);
    }

    // \'a. t[x := 'a] with a not free in t
    bool lam_shape(const Term& t) const {
        if (t.kind() != Kind::abs || t.body().kind() != Kind::es) return false;
        const Term& es = t.body();
        return es.arg().kind() == Kind::var && es.arg().name() == t.name() && !es.body().is_free(t.name()) &&
               es.name().sort == Sort::unrestricted;
    }

    std::optional<Term> lam_inv(const Term& t) {
        auto b = run(t.body().body());
        if (!b) return fail();
        return Term::abs(to_plain(t.body().name()), *b);
    }

    static bool is_uvar(const Term& t) { return t.kind() == Kind::var && t.name().sort == Sort::unrestricted; }
    static bool is_prom_grant(const Term& t) { return t.kind() == Kind::prom && t.child().kind() == Kind::grant; }

    std::optional<Term> binary(const Term& t, const Term& l, const Term& r) {
        auto a = run(l);
        if (!a) return fail();
        auto b = run(r);
        if (!b) return fail();
        if (t.kind() == Kind::app) return Term::app(*a, *b);
        return Term::es(*a, to_plain(t.name()), *b);
    }

    std::optional<Term> run(const Term& t) {
        switch (k) {
        case TranslationKind::cbn:
        case TranslationKind::bang: return run_nb(t);
        case TranslationKind::cbv: return run_v(t);
        case TranslationKind::cbs: return run_s(t);
        }
        return fail();
    }

    std::optional<Term> run_nb(const Term& t) {
        bool bang = k == TranslationKind::bang;
        switch (t.kind()) {
        case Kind::request:
            if (is_uvar(t.child())) {
                note("open(u)");
                return Term::var(to_plain(t.child().name()));
            }
            if (t.child().kind() == Kind::grant) {
                note("open(~t)");
                return run(t.child().child());
            }
            return fail();
        case Kind::abs:
            if (!lam_shape(t)) return fail();
            note("\\'a.t[u := 'a]");
            return lam_inv(t);
        case Kind::app:
            if (bang) {
                note("t s");
                return binary(t, t.fn(), t.arg());
            }
            if (!is_prom_grant(t.arg())) return fail();
            note("t (!~s)");
            return binary(t, t.fn(), t.arg().child().child());
        case Kind::es:
            if (bang) {
                note("t[u := s]");
                return binary(t, t.body(), t.arg());
            }
            if (!is_prom_grant(t.arg())) return fail();
            note("t[u := !~s]");
            return binary(t, t.body(), t.arg().child().child());
        case Kind::prom:
            if (!bang || t.child().kind() != Kind::grant) return fail();
            note("!~t");
            if (auto c = run(t.child().child())) return Term::prom(*c);
            return fail();
        default: return fail();
        }
    }

    std::optional<Term> run_v(const Term& t) {
        switch (t.kind()) {
        case Kind::prom:
            if (is_uvar(t.child())) {
                note("!x");
                return Term::var(to_plain(t.child().name()));
            }
            if (t.child().kind() == Kind::grant && lam_shape(t.child().child())) {
                note("!~\\'a.t[x := 'a]");
                return lam_inv(t.child().child());
            }
            return fail();
        case Kind::request:
            if (t.child().kind() == Kind::grant && lam_shape(t.child().child())) {
                note("open(~\\'a.t[x := 'a])");
                return lam_inv(t.child().child());
            }
            return fail();
        case Kind::abs:
            if (!lam_shape(t)) return fail();
            note("\\'a.t[x := 'a]");
            return lam_inv(t);
        case Kind::app:
            note("t s");
            return binary(t, t.fn(), t.arg());
        case Kind::es:
            if (t.body().kind() == Kind::request && is_uvar(t.body().child()) && t.body().child().name() == t.name()) {
                note("open(u)[u := t]");
                return run(t.arg());
            }
            note("t[u := s]");
            return binary(t, t.body(), t.arg());
        default: return fail();
        }
    }

    std::optional<Term> run_s(const Term& t) {
        switch (t.kind()) {
        case Kind::var:
            if (!is_uvar(t)) return fail();
            note("x");
            return Term::var(to_plain(t.name()));
        case Kind::grant:
            if (!lam_shape(t.child())) return fail();
            note("~\\'a.t[x := 'a]");
            return lam_inv(t.child());
        case Kind::request:
            note("open(t)");
            return run(t.child());
        case Kind::abs:
            if (!lam_shape(t)) return fail();
            note("\\'a.t[x := 'a]");
            return lam_inv(t);
        case Kind::app:
            if (t.arg().kind() != Kind::prom) return fail();
            note("t (!s)");
            return binary(t, t.fn(), t.arg().child());
        case Kind::es:
            if (t.arg().kind() != Kind::prom) return fail();
            note("t[u := !s]");
            return binary(t, t.body(), t.arg().child());
        default: return fail();
        }
    }
};

}  // namespace

Term translate(const Term& t, TranslationKind k) {
    validate(t, source_language(k));
    Forward f{k, {}};
    if (k == TranslationKind::cbv) {
        VarSet names;
        for (const auto& v : all_names(t)) insert(names, to_u(v));
        f.u = fresh_var(VarName::unrestricted("u"), names);
    }
    return f.run(t, 0);
}

Type translate_type(const Type& a, TranslationKind k) {
    switch (a.kind()) {
    case TypeKind::atom:
    case TypeKind::meta: return a;
    case TypeKind::arrow: {
        if (k == TranslationKind::bang) {
            if (a.left().kind() != TypeKind::bang) throw TranslationError("Bang arrow domain must be !A");
            return Type::lolli(Type::bang(Type::grant(translate_type(a.left().child(), k))), translate_type(a.right(), k));
        }
        Type dom = Type::bang(Type::grant(translate_type(a.left(), k)));
        Type cod = translate_type(a.right(), k);
        if (k == TranslationKind::cbv) cod = Type::bang(Type::grant(cod));
        if (k == TranslationKind::cbs) cod = Type::grant(cod);
        return Type::lolli(dom, cod);
    }
    case TypeKind::bang:
        if (k == TranslationKind::bang) return Type::bang(Type::grant(translate_type(a.child(), k)));
        break;
    default: break;
    }
    throw TranslationError("type outside the source discipline");
}

Type translate_judgment_type(const Type& a, TranslationKind k) {
    Type t = translate_type(a, k);
    if (k == TranslationKind::cbv) return Type::bang(Type::grant(t));
    if (k == TranslationKind::cbs) return Type::grant(t);
    return t;
}

Type translate_env_type(const Type& a, TranslationKind k) {
    if (k == TranslationKind::bang) {
        if (a.kind() != TypeKind::bang) throw TranslationError("Bang variables have !-types");
        return translate_type(a.child(), k);
    }
    return translate_type(a, k);
}

std::optional<ImageMembership> in_image(const Term& t, TranslationKind k) {
    ImageMembership m{k, {}};
    Backward b{k, &m.witness};
    if (!b.run(t)) return std::nullopt;
    return m;
}

Term inverse(const Term& t, TranslationKind k) {
    Backward b{k, nullptr};
    auto r = b.run(t);
    if (!r) throw TranslationError(std::string("term is not in the ") + kind_name(k) + " image");
    return *r;
}

}  // namespace sharecalc::translations
