#include "sharecalc/sharing/flatten.hpp"

#include <deque>
#include <unordered_set>

#include "sharecalc/syntax/ops.hpp"

namespace sharecalc::sharing {

namespace {

Term binder_off(const Term& es, const VarName& x, const VarSet& avoid) {
    if (es.name() != x) return es;
    VarSet a = set_union(avoid, all_names(es));
    insert(a, x);
    VarName y = fresh_var(es.name(), a);
    return Term::es(rename_free(es.body(), es.name(), y), y, es.arg());
}

void root(const Term& t, std::vector<Term>& out) {
    if (t.kind() != Kind::es) return;
    const Term& b = t.body();
    if (t.arg().kind() == Kind::es) {
        Term in = binder_off(t.arg(), t.name(), b.fv());
        if (!b.is_free(in.name())) out.push_back(Term::es(Term::es(b, t.name(), in.body()), in.name(), in.arg()));
    }
    if (b.kind() == Kind::es) {
        Term in = binder_off(b, t.name(), t.arg().fv());
        if (!in.body().is_free(t.name()))
            out.push_back(Term::es(in.body(), in.name(), Term::es(in.arg(), t.name(), t.arg())));
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

std::vector<Term> flatten_steps(const Term& t) {
    std::vector<Term> out;
    collect(t, out);
    return out;
}

std::vector<Term> flatten_class(const Term& t) {
    std::vector<Term> cls{t};
    std::unordered_set<Term, AlphaHash, AlphaEq> seen{t};
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (Term& s : flatten_steps(cls[i]))
            if (seen.insert(s).second) cls.push_back(std::move(s));
    return cls;
}

bool equiv_flatten(const Term& t, const Term& s) {
    if (t.size() != s.size() || t.fv() != s.fv()) return false;
    if (alpha_eq(t, s)) return true;
    for (const Term& c : flatten_class(t))
        if (alpha_eq(c, s)) return true;
    return false;
}

}  // namespace sharecalc::sharing
