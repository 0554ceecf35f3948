#include "sharecalc/lsc/reduction.hpp"

namespace sharecalc::lsc {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::db: return "db";
    case Rule::ls: return "ls";
    case Rule::lsv: return "lsv";
    case Rule::lsw: return "lsw";
    case Rule::gc: return "gc";
    case Rule::gcvlax: return "gcvlax";
    }
    return "?";
}

const char* calculus_name(Calculus c) {
    switch (c) {
    case Calculus::cbn: return "cbn";
    case Calculus::cbv: return "cbv";
    case Calculus::cbs: return "cbs";
    case Calculus::cbnd: return "cbnd";
    }
    return "?";
}

std::optional<Calculus> calculus_from_name(const std::string& s) {
    if (s == "cbn") return Calculus::cbn;
    if (s == "cbv") return Calculus::cbv;
    if (s == "cbs") return Calculus::cbs;
    if (s == "cbnd") return Calculus::cbnd;
    return std::nullopt;
}

Rule subst_rule(Calculus c) {
    switch (c) {
    case Calculus::cbn: return Rule::ls;
    case Calculus::cbs: return Rule::lsw;
    default: return Rule::lsv;
    }
}

Rule gc_rule(Calculus c) { return c == Calculus::cbv ? Rule::gcvlax : Rule::gc; }

bool is_strict_value(const Term& t) { return t.kind() == Kind::abs; }
bool is_lax_value(const Term& t) { return t.kind() == Kind::abs || t.kind() == Kind::var; }
bool is_answer(const Term& t) { return is_strict_value(peel(t).core); }

std::optional<Term> contract_db(const Term& t) {
    if (t.kind() != Kind::app) return std::nullopt;
    Peeled p = peel(t.fn());
    if (p.core.kind() != Kind::abs) return std::nullopt;
    Term f = freshen_frames(t.fn(), p.depth, t.arg().fv());
    Term lam = peel(f).core;
    return replace_core(f, p.depth, Term::es(lam.body(), lam.name(), t.arg()));
}

bool subst_applies(const Term& t, Rule rule) {
    if (t.kind() != Kind::es || !t.body().is_free(t.name())) return false;
    switch (rule) {
    case Rule::ls: return true;
    case Rule::lsv:
    case Rule::lsw: return is_answer(t.arg());
    default: return false;
    }
}

namespace {

// body[x := ...] with x renamed away from `copy`'s free variables.
std::pair<Term, VarName> rename_binder_off(const Term& body, const VarName& x, const Term& copy) {
    if (!copy.is_free(x)) return {body, x};
    VarName x2 = fresh_var(x, set_union(copy.fv(), all_names(body)));
    return {rename_free(body, x, x2), x2};
}

}  // namespace

Term contract_subst(const Term& t, Rule rule, const Path& occ) {
    const Term& arg = t.arg();
    if (rule == Rule::lsv) {
        // C<<x>>[x := vL] -> C<<v>>[x := v]L
        VarSet avoid = t.body().fv();
        insert(avoid, t.name());
        Peeled p = peel(arg);
        Term a = freshen_frames(arg, p.depth, avoid);
        Term v = peel(a).core;
        auto [body, x] = rename_binder_off(t.body(), t.name(), v);
        return replace_core(a, p.depth, Term::es(replace_at(body, occ, v), x, v));
    }
    // ls copies the whole argument; lsw copies the answer vL whole
    auto [body, x] = rename_binder_off(t.body(), t.name(), arg);
    return Term::es(replace_at(body, occ, arg), x, arg);
}

std::optional<Term> contract_gc(const Term& t, Rule rule) {
    if (t.kind() != Kind::es || t.body().is_free(t.name())) return std::nullopt;
    if (rule == Rule::gc) return t.body();
    Peeled p = peel(t.arg());
    if (!is_lax_value(p.core)) return std::nullopt;
    Term a = freshen_frames(t.arg(), p.depth, t.body().fv());
    return replace_core(a, p.depth, t.body());
}

namespace {

// Returns true on the first redex when `out` is null.
bool collect(const Term& t, Calculus c, Path& pos, std::vector<Step>* out) {
    if (t.kind() == Kind::app) {
        if (out) {
            if (auto r = contract_db(t)) out->push_back({Rule::db, *r, pos});
        } else if (peel(t.fn()).core.kind() == Kind::abs) {
            return true;
        }
    }
    if (t.kind() == Kind::es) {
        Rule sr = subst_rule(c);
        if (subst_applies(t, sr)) {
            if (!out) return true;
            for (const Path& occ : occurrence_paths(t.body(), t.name()))
                out->push_back({sr, contract_subst(t, sr, occ), pos});
        }
        Rule gr = gc_rule(c);
        if (!t.body().is_free(t.name()) && (gr == Rule::gc || is_lax_value(peel(t.arg()).core))) {
            if (!out) return true;
            out->push_back({gr, *contract_gc(t, gr), pos});
        }
    }
    for (int i = 0; i < t.arity(); ++i) {
        pos.push_back(static_cast<std::uint8_t>(i));
        std::size_t before = out ? out->size() : 0;
        bool found = collect(t.at(i), c, pos, out);
        pos.pop_back();
        if (!out && found) return true;
        if (out) {
            for (std::size_t k = before; k < out->size(); ++k) {
                Step& s = (*out)[k];
                s.reduct = i == 0 ? with_children(t, s.reduct, t.at(1)) : with_children(t, t.at(0), s.reduct);
            }
        }
    }
    return false;
}

}  // namespace

std::vector<Step> redexes(const Term& t, Calculus c) {
    std::vector<Step> out;
    Path pos;
    collect(t, c, pos, &out);
    return out;
}

bool is_nf(const Term& t, Calculus c) {
    Path pos;
    return !collect(t, c, pos, nullptr);
}

}  // namespace sharecalc::lsc
