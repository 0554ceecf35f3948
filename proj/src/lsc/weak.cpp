#include "sharecalc/lsc/weak.hpp"

#include <algorithm>
#include <stdexcept>

#include "sharecalc/syntax/text.hpp"

namespace sharecalc::lsc {

bool same_rulename(const Rulename& a, const Rulename& b) {
    // sigma2 is the same label derived by another rule
    auto norm = [](Rulename::Kind k) { return k == Rulename::Kind::sigma2 ? Rulename::Kind::sigma : k; };
    if (norm(a.kind) != norm(b.kind)) return false;
    switch (a.kind) {
    case Rulename::Kind::sigma:
    case Rulename::Kind::sigma2: return a.x == b.x && alpha_eq(a.payload, b.payload);
    case Rulename::Kind::iota: return a.x == b.x;
    default: return true;
    }
}

std::string to_string(const Rulename& r) {
    switch (r.kind) {
    case Rulename::Kind::db: return "db";
    case Rulename::Kind::ls: return "ls";
    case Rulename::Kind::gc: return "gc";
    case Rulename::Kind::lsv: return "lsv";
    case Rulename::Kind::gcvlax: return "gcvlax";
    case Rulename::Kind::lsw: return "lsw";
    case Rulename::Kind::gcvlax_inv: return "gcvlax^-1";
    case Rulename::Kind::iota: return "iota(" + r.x.str() + ")";
    case Rulename::Kind::sigma:
    case Rulename::Kind::sigma2: return "sigma[" + r.x.str() + "/" + print_term(r.payload) + "]";
    }
    return "?";
}

Rulename::Kind to_rulename(Rule r) {
    switch (r) {
    case Rule::db: return Rulename::Kind::db;
    case Rule::ls: return Rulename::Kind::ls;
    case Rule::lsv: return Rulename::Kind::lsv;
    case Rule::lsw: return Rulename::Kind::lsw;
    case Rule::gc: return Rulename::Kind::gc;
    case Rule::gcvlax: return Rulename::Kind::gcvlax;
    }
    return Rulename::Kind::db;
}

namespace {

void push(std::vector<SigmaSite>& out, const Path& p, bool es_arg) {
    for (const auto& s : out)
        if (s.path == p) return;
    out.push_back({p, es_arg});
}

bool iota_rec(const Term& t, Calculus c, const VarName& x) {
    switch (t.kind()) {
    case Kind::var: return t.name() == x;
    case Kind::app: return iota_rec(t.fn(), c, x);
    case Kind::es:
        if (t.name() != x && iota_rec(t.body(), c, x)) return true;
        return iota_rec(t.body(), c, t.name()) && iota_rec(t.arg(), c, x);
    default: return false;
    }
}

void sites_rec(const Term& t, Calculus c, const VarName& x, Path& p, std::vector<SigmaSite>& out) {
    if (!t.is_free(x)) return;
    auto go = [&](int i) {
        p.push_back(static_cast<std::uint8_t>(i));
        sites_rec(t.at(i), c, x, p, out);
        p.pop_back();
    };
    switch (t.kind()) {
    case Kind::var: push(out, p, false); return;
    case Kind::app: go(0); return;
    case Kind::es:
        if (c == Calculus::cbs && t.arg().kind() == Kind::var && t.arg().name() == x) {
            p.push_back(1);
            push(out, p, true);
            p.pop_back();
        }
        if (t.name() != x) go(0);
        if (c == Calculus::cbv || (c == Calculus::cbs && iota_rec(t.body(), c, t.name()))) go(1);
        return;
    default: return;
    }
}

void weak_rec(const Term& t, Calculus c, Path& pos, std::vector<WeakStep>& out) {
    auto lift = [&](int i) {
        std::size_t before = out.size();
        pos.push_back(static_cast<std::uint8_t>(i));
        weak_rec(t.at(i), c, pos, out);
        pos.pop_back();
        for (std::size_t k = before; k < out.size(); ++k)
            out[k].result = i == 0 ? with_children(t, out[k].result, t.at(1)) : with_children(t, t.at(0), out[k].result);
    };
    if (t.kind() == Kind::app) {
        if (auto r = contract_db(t)) out.push_back({Rulename::top(Rulename::Kind::db), *r, pos});
        lift(0);
        return;
    }
    if (t.kind() != Kind::es) return;
    Rule sr = subst_rule(c);
    if (subst_applies(t, sr)) {
        std::vector<SigmaSite> sites;
        Path p;
        sites_rec(t.body(), c, t.name(), p, sites);
        for (const auto& s : sites) out.push_back({Rulename::top(to_rulename(sr)), contract_subst(t, sr, s.path), pos});
    }
    Rule gr = gc_rule(c);
    if (auto r = contract_gc(t, gr)) out.push_back({Rulename::top(to_rulename(gr)), *r, pos});
    lift(0);
    if (c == Calculus::cbv || (c == Calculus::cbs && iota_rec(t.body(), c, t.name()))) lift(1);
}

}  // namespace

std::vector<WeakStep> weak_eval_steps(const Term& t, Calculus c) {
    if (c == Calculus::cbnd) throw std::invalid_argument("CBNd has no weak evaluation system");
    std::vector<WeakStep> out;
    Path pos;
    weak_rec(t, c, pos, out);
    return out;
}

std::vector<SigmaSite> sigma_sites(const Term& t, Calculus c, const VarName& x) {
    std::vector<SigmaSite> out;
    Path p;
    sites_rec(t, c, x, p, out);
    return out;
}

std::vector<WeakStep> weak_sigma_steps(const Term& t, Calculus c, const VarName& x, const Term& payload) {
    std::vector<WeakStep> out;
    for (const auto& s : sigma_sites(t, c, x)) {
        Rulename n{s.on_es_argument ? Rulename::Kind::sigma2 : Rulename::Kind::sigma, x, payload};
        out.push_back({n, replace_at(t, s.path, payload), s.path});
    }
    return out;
}

bool weak_iota(const Term& t, Calculus c, const VarName& x) { return iota_rec(t, c, x); }

bool is_gcvlax_inverse_step(const Term& from, const Term& to, bool weak) {
    if (to.size() <= from.size()) return false;
    if (weak) {
        for (const auto& s : weak_eval_steps(to, Calculus::cbv))
            if (s.name.kind == Rulename::Kind::gcvlax && alpha_eq(s.result, from)) return true;
        return false;
    }
    for (const auto& s : redexes(to, Calculus::cbv))
        if (s.rule == Rule::gcvlax && alpha_eq(s.reduct, from)) return true;
    return false;
}

}  // namespace sharecalc::lsc
