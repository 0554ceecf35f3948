#include "sharecalc/sharing/reduction.hpp"

namespace sharecalc::sharing {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::sdb: return "!db";
    case Rule::sreq: return "!req";
    case Rule::sls: return "!ls";
    case Rule::sgc: return "!gc";
    }
    return "?";
}

std::optional<Term> contract_db(const Term& t) {
    if (t.kind() != Kind::app) return std::nullopt;
    Peeled p = peel(t.fn());
    if (p.core.kind() != Kind::abs) return std::nullopt;
    Term f = freshen_frames(t.fn(), p.depth, t.arg().fv());
    Term lam = peel(f).core;
    return replace_core(f, p.depth, subst_linear(lam.body(), lam.name(), t.arg()));
}

std::optional<Term> contract_req(const Term& t) {
    if (t.kind() != Kind::request) return std::nullopt;
    Peeled p = peel(t.child());
    if (p.core.kind() != Kind::grant) return std::nullopt;
    return replace_core(t.child(), p.depth, p.core.child());
}

bool is_shareable(const Term& arg) {
    Peeled p = peel(arg);
    return p.core.kind() == Kind::prom && peel(p.core.child()).core.kind() == Kind::grant;
}

bool ls_applies(const Term& t) {
    return t.kind() == Kind::es && t.body().is_free(t.name()) && is_shareable(t.arg());
}

Term contract_ls(const Term& t, const Path& occ) {
    VarSet avoid = t.body().fv();
    insert(avoid, t.name());
    Peeled p = peel(t.arg());
    Term a = freshen_frames(t.arg(), p.depth, avoid);
    Term copy = peel(a).core.child();
    Term body = t.body();
    VarName u = t.name();
    if (copy.is_free(u)) {
        VarName u2 = fresh_var(u, set_union(copy.fv(), all_names(body)));
        body = rename_free(body, u, u2);
        u = u2;
    }
    return replace_core(a, p.depth, Term::es(replace_at(body, occ, copy), u, Term::prom(copy)));
}

std::optional<Term> contract_gc(const Term& t) {
    if (t.kind() != Kind::es || t.body().is_free(t.name())) return std::nullopt;
    Peeled p = peel(t.arg());
    if (p.core.kind() != Kind::prom) return std::nullopt;
    Term a = freshen_frames(t.arg(), p.depth, t.body().fv());
    return replace_core(a, p.depth, t.body());
}

namespace {

bool collect(const Term& t, Path& pos, std::vector<Step>* out) {
    switch (t.kind()) {
    case Kind::app:
        if (peel(t.fn()).core.kind() == Kind::abs) {
            if (!out) return true;
            out->push_back({Rule::sdb, *contract_db(t), pos});
        }
        break;
    case Kind::request:
        if (peel(t.child()).core.kind() == Kind::grant) {
            if (!out) return true;
            out->push_back({Rule::sreq, *contract_req(t), pos});
        }
        break;
    case Kind::es:
        if (ls_applies(t)) {
            if (!out) return true;
            for (const Path& occ : occurrence_paths(t.body(), t.name()))
                out->push_back({Rule::sls, contract_ls(t, occ), pos});
        }
        if (!t.body().is_free(t.name()) && peel(t.arg()).core.kind() == Kind::prom) {
            if (!out) return true;
            out->push_back({Rule::sgc, *contract_gc(t), pos});
        }
        break;
    default: break;
    }
    for (int i = 0; i < t.arity(); ++i) {
        pos.push_back(static_cast<std::uint8_t>(i));
        std::size_t before = out ? out->size() : 0;
        bool found = collect(t.at(i), pos, out);
        pos.pop_back();
        if (!out && found) return true;
        if (out)
            for (std::size_t k = before; k < out->size(); ++k) {
                Step& s = (*out)[k];
                s.reduct = i == 0 ? with_children(t, s.reduct, t.at(1)) : with_children(t, t.at(0), s.reduct);
            }
    }
    return false;
}

}  // namespace

std::vector<Step> redexes(const Term& t) {
    std::vector<Step> out;
    Path pos;
    collect(t, pos, &out);
    return out;
}

bool is_nf(const Term& t) {
    Path pos;
    return !collect(t, pos, nullptr);
}

}  // namespace sharecalc::sharing
