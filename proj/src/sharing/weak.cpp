#include "sharecalc/sharing/weak.hpp"

#include "sharecalc/syntax/text.hpp"

namespace sharecalc::sharing {

bool same_rulename(const Rulename& a, const Rulename& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Rulename::Kind::sigma) return a.u == b.u && alpha_eq(a.payload, b.payload);
    if (a.kind == Rulename::Kind::iota) return a.u == b.u;
    return true;
}

std::string to_string(const Rulename& r) {
    switch (r.kind) {
    case Rulename::Kind::db: return "!db";
    case Rulename::Kind::ls: return "!ls";
    case Rulename::Kind::gc: return "!gc";
    case Rulename::Kind::req: return "!req";
    case Rulename::Kind::iota: return "iota!(" + r.u.str() + ")";
    case Rulename::Kind::sigma: return "sigma![" + r.u.str() + "/" + print_term(r.payload) + "]";
    }
    return "?";
}

Rulename::Kind to_rulename(Rule r) {
    switch (r) {
    case Rule::sdb: return Rulename::Kind::db;
    case Rule::sreq: return Rulename::Kind::req;
    case Rule::sls: return Rulename::Kind::ls;
    case Rule::sgc: return Rulename::Kind::gc;
    }
    return Rulename::Kind::db;
}

namespace {

bool iota_rec(const Term& t, const VarName& u) {
    switch (t.kind()) {
    case Kind::var: return t.name() == u;
    case Kind::app: return iota_rec(t.fn(), u);
    case Kind::request: return iota_rec(t.child(), u);
    case Kind::es:
        if (t.name() != u && iota_rec(t.body(), u)) return true;
        if (iota_rec(t.arg(), u)) return true;
        return t.arg().kind() == Kind::prom && iota_rec(t.body(), t.name()) && iota_rec(t.arg().child(), u);
    default: return false;
    }
}

void add(std::vector<Path>& out, const Path& p) {
    for (const auto& q : out)
        if (q == p) return;
    out.push_back(p);
}

void sites_rec(const Term& t, const VarName& u, Path& p, std::vector<Path>& out) {
    if (!t.is_free(u)) return;
    auto go = [&](std::initializer_list<std::uint8_t> steps, const Term& sub) {
        for (auto s : steps) p.push_back(s);
        sites_rec(sub, u, p, out);
        for (std::size_t i = 0; i < steps.size(); ++i) p.pop_back();
    };
    switch (t.kind()) {
    case Kind::var: add(out, p); return;
    case Kind::prom:
        // !u -> !((~t)L)
        if (t.child().kind() == Kind::var) {
            p.push_back(0);
            add(out, p);
            p.pop_back();
        }
        return;
    case Kind::app: go({0}, t.fn()); return;
    case Kind::request: go({0}, t.child()); return;
    case Kind::es:
        if (t.name() != u) go({0}, t.body());
        go({1}, t.arg());
        if (t.arg().kind() == Kind::prom && iota_rec(t.body(), t.name())) go({1, 0}, t.arg().child());
        return;
    default: return;
    }
}

void weak_rec(const Term& t, Path& pos, std::vector<WeakStep>& out) {
    auto lift = [&](std::initializer_list<std::uint8_t> steps, const Term& sub, auto&& wrap) {
        std::size_t before = out.size();
        for (auto s : steps) pos.push_back(s);
        weak_rec(sub, pos, out);
        for (std::size_t i = 0; i < steps.size(); ++i) pos.pop_back();
        for (std::size_t k = before; k < out.size(); ++k) out[k].result = wrap(out[k].result);
    };
    switch (t.kind()) {
    case Kind::app:
        if (auto r = contract_db(t)) out.push_back({Rulename::top(Rulename::Kind::db), *r, pos});
        lift({0}, t.fn(), [&](const Term& f) { return Term::app(f, t.arg()); });
        return;
    case Kind::request:
        if (auto r = contract_req(t)) out.push_back({Rulename::top(Rulename::Kind::req), *r, pos});
        lift({0}, t.child(), [&](const Term& c) { return Term::request(c); });
        return;
    case Kind::es: {
        if (ls_applies(t)) {
            std::vector<Path> sites;
            Path p;
            sites_rec(t.body(), t.name(), p, sites);
            for (const auto& s : sites) out.push_back({Rulename::top(Rulename::Kind::ls), contract_ls(t, s), pos});
        }
        if (auto r = contract_gc(t)) out.push_back({Rulename::top(Rulename::Kind::gc), *r, pos});
        lift({0}, t.body(), [&](const Term& b) { return Term::es(b, t.name(), t.arg()); });
        lift({1}, t.arg(), [&](const Term& a) { return Term::es(t.body(), t.name(), a); });
        if (t.arg().kind() == Kind::prom && iota_rec(t.body(), t.name()))
            lift({1, 0}, t.arg().child(), [&](const Term& s) { return Term::es(t.body(), t.name(), Term::prom(s)); });
        return;
    }
    default: return;
    }
}

}  // namespace

std::vector<WeakStep> weak_eval(const Term& t) {
    std::vector<WeakStep> out;
    Path pos;
    weak_rec(t, pos, out);
    return out;
}

std::vector<Path> sigma_sites(const Term& t, const VarName& u) {
    std::vector<Path> out;
    Path p;
    sites_rec(t, u, p, out);
    return out;
}

std::vector<WeakStep> weak_sigma_steps(const Term& t, const VarName& u, const Term& payload) {
    std::vector<WeakStep> out;
    for (const auto& p : sigma_sites(t, u)) out.push_back({{Rulename::Kind::sigma, u, payload}, replace_at(t, p, payload), p});
    return out;
}

bool weak_iota(const Term& t, const VarName& u) { return iota_rec(t, u); }

}  // namespace sharecalc::sharing
