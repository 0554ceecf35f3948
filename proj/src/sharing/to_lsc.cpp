#include "sharecalc/sharing/to_lsc.hpp"

#include <map>

#include "sharecalc/syntax/ops.hpp"

namespace sharecalc::sharing {

Type unit_type() { return Type::arrow(Type::atom("iota"), Type::atom("iota")); }

Term star() {
    VarName w = VarName::plain("w");
    return Term::abs(w, Term::var(w));
}

namespace {

struct Translator {
    std::map<VarName, VarName> names;  // sharing variable -> plain variable

    VarName plain_of(const VarName& v) {
        auto it = names.find(v);
        return it == names.end() ? VarName(Sort::plain, v.name, v.index) : it->second;
    }

    Term run(const Term& t) {
        switch (t.kind()) {
        case Kind::var: return Term::var(plain_of(t.name()));
        case Kind::abs: return Term::abs(plain_of(t.name()), run(t.body()));
        case Kind::es: return Term::es(run(t.body()), plain_of(t.name()), run(t.arg()));
        case Kind::app: return Term::app(run(t.fn()), run(t.arg()));
        case Kind::grant: {
            Term c = run(t.child());
            VarName z = fresh_var(VarName::plain("z"), c.fv());
            return Term::abs(z, c);
        }
        case Kind::request: return Term::app(run(t.child()), star());
        case Kind::prom: return run(t.child());
        default: throw std::invalid_argument("to_lsc: not a sharing term");
        }
    }
};

}  // namespace

Term to_lsc(const Term& t0) {
    Term t = rename_binders_apart(t0);
    Translator tr;
    // the two sorts collapse: free variables keep their names (linear ones win
    // a clash), binders get plain names clear of everything else
    VarSet taken;
    auto assign = [&](const VarName& v) {
        VarName p(Sort::plain, v.name, v.index);
        if (contains(taken, p)) p = fresh_var(p, taken);
        insert(taken, p);
        tr.names[v] = p;
    };
    for (const auto& v : t.fv()) assign(v);
    for (const auto& v : all_names(t))
        if (!t.is_free(v)) assign(v);
    return tr.run(t);
}

Type to_lsc_type(const Type& a) {
    switch (a.kind()) {
    case TypeKind::atom:
    case TypeKind::meta: return a;
    case TypeKind::lolli:
    case TypeKind::arrow: return Type::arrow(to_lsc_type(a.left()), to_lsc_type(a.right()));
    case TypeKind::grant: return Type::arrow(unit_type(), to_lsc_type(a.child()));
    case TypeKind::bang: return to_lsc_type(a.child());
    }
    return a;
}

}  // namespace sharecalc::sharing
