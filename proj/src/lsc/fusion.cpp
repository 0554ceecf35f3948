#include "sharecalc/lsc/fusion.hpp"

#include "sharecalc/syntax/ops.hpp"

namespace sharecalc::lsc {

namespace {

// Renames the binder of the ES `inner` away from `x` and the names in `avoid`.
Term es_binder_off(const Term& inner, const VarName& x, const VarSet& avoid) {
    if (inner.name() != x) return inner;
    VarSet a = set_union(avoid, all_names(inner));
    insert(a, x);
    VarName y2 = fresh_var(inner.name(), a);
    return Term::es(rename_free(inner.body(), inner.name(), y2), y2, inner.arg());
}

void root(const Term& t, std::vector<Term>& out) {
    switch (t.kind()) {
    case Kind::es: {
        const Term& b = t.body();
        const VarName& y = t.name();
        if (!b.is_free(y)) out.push_back(b);
        if (b.kind() == Kind::es) {
            Term in = es_binder_off(b, y, t.arg().fv());
            const VarName& x = in.name();
            // c
            if (!in.arg().is_free(y) && alpha_eq(in.arg(), t.arg()))
                out.push_back(Term::es(rename_free(in.body(), x, y), y, t.arg()));
            // esL
            if (!t.arg().is_free(x) && !in.arg().is_free(y))
                out.push_back(Term::es(Term::es(in.body(), y, t.arg()), x, in.arg()));
        }
        if (t.arg().kind() == Kind::es) {
            Term in = es_binder_off(t.arg(), y, b.fv());
            if (!b.is_free(in.name()))
                out.push_back(Term::es(Term::es(b, y, in.body()), in.name(), in.arg()));
        }
        break;
    }
    case Kind::abs:
        if (t.body().kind() == Kind::es) {
            Term in = es_binder_off(t.body(), t.name(), {});
            if (!in.arg().is_free(t.name()))
                out.push_back(Term::es(Term::abs(t.name(), in.body()), in.name(), in.arg()));
        }
        break;
    case Kind::app:
        if (t.fn().kind() == Kind::es && !t.arg().is_free(t.fn().name())) {
            const Term& f = t.fn();
            out.push_back(Term::es(Term::app(f.body(), t.arg()), f.name(), f.arg()));
        }
        if (t.arg().kind() == Kind::es && !t.fn().is_free(t.arg().name())) {
            const Term& a = t.arg();
            out.push_back(Term::es(Term::app(t.fn(), a.body()), a.name(), a.arg()));
        }
        break;
    default: break;
    }
}

void collect(const Term& t, std::vector<Term>& out) {
    root(t, out);
    for (int i = 0; i < t.arity(); ++i) {
        std::size_t before = out.size();
        collect(t.at(i), out);
        for (std::size_t k = before; k < out.size(); ++k)
            out[k] = i == 0 ? with_children(t, out[k], t.at(1)) : with_children(t, t.at(0), out[k]);
    }
}

}  // namespace

std::vector<Term> fusion_steps(const Term& t) {
    std::vector<Term> out;
    collect(t, out);
    return out;
}

}  // namespace sharecalc::lsc
