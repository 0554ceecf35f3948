#include "sharecalc/syntax/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sharecalc {

namespace {

void collect_names(const Term& t, std::unordered_set<VarName, VarNameHash>& out) {
    if (t.kind() == Kind::var || t.is_binder()) out.insert(t.name());
    for (int i = 0; i < t.arity(); ++i) collect_names(t.at(i), out);
}

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Term subst_rec(const Term& t, const VarName& x, const Term& s) {
    if (!t.is_free(x)) return t;
    switch (t.kind()) {
    case Kind::var: return s;
    case Kind::abs:
    case Kind::es: {
        Term arg = t.kind() == Kind::es ? subst_rec(t.arg(), x, s) : Term();
        VarName y = t.name();
        Term b = t.body();
        if (y != x) {
            if (s.is_free(y) && b.is_free(x)) {
                VarSet avoid = set_union(s.fv(), b.fv());
                insert(avoid, x);
                VarName y2 = fresh_var(y, avoid);
                b = subst_rec(b, y, Term::var(y2));
                y = y2;
            }
            b = subst_rec(b, x, s);
        }
        return t.kind() == Kind::abs ? Term::abs(y, b) : Term::es(b, y, arg);
    }
    case Kind::app: return Term::app(subst_rec(t.fn(), x, s), subst_rec(t.arg(), x, s));
    default: return Term::unary(t.kind(), subst_rec(t.child(), x, s));
    }
}

void occ_rec(const Term& t, const VarName& x, Path& p, std::vector<Path>& out) {
    if (!t.is_free(x)) return;
    if (t.kind() == Kind::var) {
        out.push_back(p);
        return;
    }
    for (int i = 0; i < t.arity(); ++i) {
        p.push_back(static_cast<std::uint8_t>(i));
        occ_rec(t.at(i), x, p, out);
        p.pop_back();
    }
}

Term replace_rec(const Term& t, const Path& p, std::size_t i, const Term& s, bool avoid) {
    if (i == p.size()) return s;
    int c = p[i];
    if (c >= t.arity()) throw std::out_of_range("replace_at: path leaves the term");
    if (avoid && c == 0 && t.is_binder() && s.is_free(t.name())) {
        VarSet names = all_names(t.body());
        VarSet avoidset = set_union(names, s.fv());
        VarName y2 = fresh_var(t.name(), avoidset);
        Term b = rename_free(t.body(), t.name(), y2);
        b = replace_rec(b, p, i + 1, s, avoid);
        return t.kind() == Kind::abs ? Term::abs(y2, b) : Term::es(b, y2, t.arg());
    }
    if (c == 0) return with_children(t, replace_rec(t.at(0), p, i + 1, s, avoid), t.at(1));
    return with_children(t, t.at(0), replace_rec(t.at(1), p, i + 1, s, avoid));
}

using Env = std::vector<std::pair<VarName, VarName>>;

bool aeq(const Term& a, const Term& b, Env& env) {
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    if (env.empty() && a == b) return true;
    switch (a.kind()) {
    case Kind::hole: return true;
    case Kind::var: {
        long ia = -1, ib = -1;
        for (long i = static_cast<long>(env.size()) - 1; i >= 0; --i) {
            if (ia < 0 && env[i].first == a.name()) ia = i;
            if (ib < 0 && env[i].second == b.name()) ib = i;
            if (ia >= 0 && ib >= 0) break;
        }
        if (ia < 0 && ib < 0) return a.name() == b.name();
        return ia == ib;
    }
    case Kind::abs:
    case Kind::es: {
        if (a.name().sort != b.name().sort) return false;
        if (a.kind() == Kind::es && !aeq(a.arg(), b.arg(), env)) return false;
        env.emplace_back(a.name(), b.name());
        bool r = aeq(a.body(), b.body(), env);
        env.pop_back();
        return r;
    }
    case Kind::app: return aeq(a.fn(), b.fn(), env) && aeq(a.arg(), b.arg(), env);
    default: return aeq(a.child(), b.child(), env);
    }
}

std::size_t ahash(const Term& t, std::vector<VarName>& stack) {
    switch (t.kind()) {
    case Kind::hole: return 0x77;
    case Kind::var: {
        for (std::size_t d = 0; d < stack.size(); ++d)
            if (stack[stack.size() - 1 - d] == t.name()) return mix(0x11, d);
        return mix(0x12, VarNameHash{}(t.name()));
    }
    case Kind::abs:
    case Kind::es: {
        std::size_t h = mix(t.kind() == Kind::abs ? 0x13 : 0x14, static_cast<std::size_t>(t.name().sort));
        if (t.kind() == Kind::es) h = mix(h, ahash(t.arg(), stack));
        stack.push_back(t.name());
        h = mix(h, ahash(t.body(), stack));
        stack.pop_back();
        return h;
    }
    case Kind::app: return mix(mix(0x15, ahash(t.fn(), stack)), ahash(t.arg(), stack));
    default: return mix(0x20 + static_cast<std::size_t>(t.kind()), ahash(t.child(), stack));
    }
}

Term apart_rec(const Term& t, VarSet& used) {
    switch (t.kind()) {
    case Kind::var: case Kind::hole: return t;
    case Kind::abs:
    case Kind::es: {
        Term arg = t.kind() == Kind::es ? apart_rec(t.arg(), used) : Term();
        VarName y = t.name();
        Term b = t.body();
        if (contains(used, y)) {
            VarName y2 = fresh_var(y, set_union(used, all_names(b)));
            b = rename_free(b, y, y2);
            y = y2;
        }
        insert(used, y);
        b = apart_rec(b, used);
        return t.kind() == Kind::abs ? Term::abs(y, b) : Term::es(b, y, arg);
    }
    default: {
        Term c0 = apart_rec(t.at(0), used);
        Term c1 = t.arity() == 2 ? apart_rec(t.at(1), used) : Term();
        return with_children(t, c0, c1);
    }
    }
}

}  // namespace

VarSet all_names(const Term& t) {
    std::unordered_set<VarName, VarNameHash> names;
    collect_names(t, names);
    VarSet out(names.begin(), names.end());
    std::sort(out.begin(), out.end());
    return out;
}

Term substitute(const Term& t, const VarName& x, const Term& s) { return subst_rec(t, x, s); }

Term rename_free(const Term& t, const VarName& from, const VarName& to) {
    if (from == to) return t;
    return subst_rec(t, from, Term::var(to));
}

Term subst_linear(const Term& t, const VarName& a, const Term& s) {
    if (a.sort != Sort::linear) throw std::invalid_argument("subst_linear: " + a.str() + " is not linear");
    return subst_rec(t, a, s);
}

std::vector<Path> occurrence_paths(const Term& t, const VarName& x) {
    std::vector<Path> out;
    Path p;
    occ_rec(t, x, p, out);
    return out;
}

const Term& subterm_at(const Term& t, const Path& p) {
    const Term* cur = &t;
    for (auto c : p) cur = &cur->at(c);
    return *cur;
}

Term replace_at(const Term& t, const Path& p, const Term& s) { return replace_rec(t, p, 0, s, true); }
Term replace_at_capturing(const Term& t, const Path& p, const Term& s) { return replace_rec(t, p, 0, s, false); }

bool alpha_eq(const Term& a, const Term& b) {
    if (a.size() != b.size() || a.fv() != b.fv()) return false;
    Env env;
    return aeq(a, b, env);
}

std::size_t alpha_hash(const Term& t) {
    std::vector<VarName> stack;
    return ahash(t, stack);
}

Term rename_binders_apart(const Term& t) {
    VarSet used = t.fv();
    return apart_rec(t, used);
}

Peeled peel(const Term& t) {
    Peeled p{t, 0};
    while (p.core.kind() == Kind::es) {
        p.core = p.core.body();
        ++p.depth;
    }
    return p;
}

Term replace_core(const Term& t, std::size_t depth, const Term& core) {
    if (depth == 0) return core;
    return Term::es(replace_core(t.body(), depth - 1, core), t.name(), t.arg());
}

Term freshen_frames(const Term& t, std::size_t depth, const VarSet& avoid) {
    if (depth == 0) return t;
    VarName y = t.name();
    Term b = t.body();
    if (contains(avoid, y)) {
        VarName y2 = fresh_var(y, set_union(avoid, all_names(t)));
        b = rename_free(b, y, y2);
        y = y2;
    }
    return Term::es(freshen_frames(b, depth - 1, avoid), y, t.arg());
}

Path hole_path(const Term& ctx) {
    if (!ctx.has_hole()) throw std::invalid_argument("context has no hole");
    Path p;
    const Term* cur = &ctx;
    while (cur->kind() != Kind::hole) {
        int c = cur->at(0) && cur->at(0).has_hole() ? 0 : 1;
        p.push_back(static_cast<std::uint8_t>(c));
        cur = &cur->at(c);
    }
    return p;
}

Term plug(const Term& ctx, const Term& t, Capture mode) {
    Path p = hole_path(ctx);
    return mode == Capture::with ? replace_at_capturing(ctx, p, t) : replace_at(ctx, p, t);
}

}  // namespace sharecalc
