#include "sharecalc/bang/bang.hpp"

#include <unordered_map>

#include "sharecalc/lsc/reduction.hpp"
#include "sharecalc/sharing/reduction.hpp"

namespace sharecalc::bang {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::dbB: return "db!";
    case Rule::lsB: return "ls!";
    case Rule::gcB: return "gc!";
    case Rule::derB: return "d!";
    }
    return "?";
}

bool is_simplified(const Term& t) {
    if (t.kind() == Kind::der) return false;
    for (int i = 0; i < t.arity(); ++i)
        if (!is_simplified(t.at(i))) return false;
    return true;
}

// The ls and gc schemas only look at the promotion under L, so the sharing
// contractions apply unchanged.
Term contract_ls(const Term& t, const Path& occ) { return sharing::contract_ls(t, occ); }

std::optional<Term> contract_der(const Term& t) {
    if (t.kind() != Kind::der) return std::nullopt;
    Peeled p = peel(t.child());
    if (p.core.kind() != Kind::prom) return std::nullopt;
    return replace_core(t.child(), p.depth, p.core.child());
}

namespace {

bool collect(const Term& t, bool simplified, Path& pos, std::vector<Step>* out) {
    auto hit = [&](Rule r, Term reduct) {
        if (out) out->push_back({r, std::move(reduct), pos});
        return !out;
    };
    switch (t.kind()) {
    case Kind::app:
        if (auto r = lsc::contract_db(t); r && hit(Rule::dbB, *r)) return true;
        break;
    case Kind::es:
        if (peel(t.arg()).core.kind() == Kind::prom) {
            if (t.body().is_free(t.name())) {
                for (const Path& occ : occurrence_paths(t.body(), t.name()))
                    if (hit(Rule::lsB, contract_ls(t, occ))) return true;
            } else if (hit(Rule::gcB, *sharing::contract_gc(t))) {
                return true;
            }
        }
        break;
    case Kind::der:
        if (simplified) throw SimplifiedError("der(...) in a simplified Bang term");
        if (auto r = contract_der(t); r && hit(Rule::derB, *r)) return true;
        break;
    default: break;
    }
    for (int i = 0; i < t.arity(); ++i) {
        pos.push_back(static_cast<std::uint8_t>(i));
        std::size_t before = out ? out->size() : 0;
        bool found = collect(t.at(i), simplified, pos, out);
        pos.pop_back();
        if (found) return true;
        if (out)
            for (std::size_t k = before; k < out->size(); ++k) {
                Step& s = (*out)[k];
                s.reduct = i == 0 ? with_children(t, s.reduct, t.at(1)) : with_children(t, t.at(0), s.reduct);
            }
    }
    return false;
}

struct PairHash {
    std::size_t operator()(const std::pair<Term, Term>& p) const { return p.first.hash() * 31 + p.second.hash(); }
};

struct Unfold {
    std::unordered_map<std::pair<Term, Term>, bool, PairHash> memo;

    // Opens the scopes of two binders with one common fresh name.
    static std::pair<Term, Term> common(const Term& tb, const VarName& x, const Term& sb, const VarName& y) {
        if (x == y) return {tb, sb};
        VarName z = fresh_var(x, set_union(all_names(tb), all_names(sb)));
        return {rename_free(tb, x, z), rename_free(sb, y, z)};
    }

    bool run(const Term& t, const Term& s) {
        auto key = std::make_pair(t, s);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool r = decide(t, s);
        memo.emplace(key, r);
        return r;
    }

    bool decide(const Term& t, const Term& s) {
        // garbage: t |x s'[x := !r] with x not free in s'
        if (s.kind() == Kind::es && !s.body().is_free(s.name()) && s.arg().kind() == Kind::prom &&
            run(t, s.body()))
            return true;
        switch (t.kind()) {
        case Kind::var: return s.kind() == Kind::var && s.name() == t.name();
        case Kind::abs: {
            if (s.kind() != Kind::abs) return false;
            auto [a, b] = common(t.body(), t.name(), s.body(), s.name());
            return run(a, b);
        }
        case Kind::app: return s.kind() == Kind::app && run(t.fn(), s.fn()) && run(t.arg(), s.arg());
        case Kind::prom: return s.kind() == Kind::prom && run(t.child(), s.child());
        case Kind::es: {
            if (s.kind() != Kind::es || !run(t.arg(), s.arg())) return false;
            auto [a, b] = common(t.body(), t.name(), s.body(), s.name());
            return run(a, b);
        }
        case Kind::der:
            return s.kind() == Kind::es && s.body().kind() == Kind::var && s.body().name() == s.name() &&
                   run(t.child(), s.arg());
        default: return false;
        }
    }
};

Term unfold_rec(const Term& t) {
    if (t.kind() == Kind::der) {
        Term inner = unfold_rec(t.child());
        VarName d = fresh_var(VarName::plain("d"), inner.fv());
        return Term::es(Term::var(d), d, inner);
    }
    if (t.arity() == 0) return t;
    if (t.arity() == 1) return with_children(t, unfold_rec(t.at(0)));
    return with_children(t, unfold_rec(t.at(0)), unfold_rec(t.at(1)));
}

struct Infer {
    Unifier u;
    Env env;
    bool open = false;

    Type run(const Term& t) {
        switch (t.kind()) {
        case Kind::var: {
            auto it = env.find(t.name());
            if (it == env.end()) {
                if (!open) throw TypeError("unbound variable " + t.name().str());
                it = env.emplace(t.name(), Type::bang(u.fresh())).first;
            }
            Type a = u.fresh();
            u.unify(it->second, Type::bang(a), "variable type is not of shape !A");
            return a;
        }
        case Kind::abs: {
            Type a = Type::bang(u.fresh());
            return Type::arrow(a, scoped(t.name(), a, t.body()));
        }
        case Kind::app: {
            Type f = run(t.fn());
            Type a = run(t.arg());
            Type da = u.fresh();
            u.unify(a, Type::bang(da), "argument type is not of shape !A");
            Type r = u.fresh();
            u.unify(f, Type::arrow(a, r), "arrow mismatch");
            return r;
        }
        case Kind::prom: return Type::bang(run(t.child()));
        case Kind::der: {
            Type a = u.fresh();
            u.unify(run(t.child()), Type::bang(a), "der of a term not of shape !A");
            return a;
        }
        case Kind::es: {
            Type s = run(t.arg());
            u.unify(s, Type::bang(u.fresh()), "ES argument not of shape !A");
            return scoped(t.name(), s, t.body());
        }
        default: throw TypeError(std::string(kind_name(t.kind())) + " is not a Bang construct");
        }
    }

    Type scoped(const VarName& x, const Type& a, const Term& body) {
        auto it = env.find(x);
        std::optional<Type> saved = it == env.end() ? std::nullopt : std::optional<Type>(it->second);
        env[x] = a;
        Type b = run(body);
        if (saved) env[x] = *saved;
        else env.erase(x);
        return b;
    }
};

}  // namespace

std::vector<Step> redexes(const Term& t, bool simplified) {
    std::vector<Step> out;
    Path pos;
    collect(t, simplified, pos, &out);
    return out;
}

bool is_nf(const Term& t, bool simplified) {
    Path pos;
    return !collect(t, simplified, pos, nullptr);
}

bool der_unfold(const Term& t, const Term& s) {
    if (!is_simplified(s)) return false;
    return Unfold{}.run(t, s);
}

Term canonical_unfold(const Term& t) { return unfold_rec(t); }

Type typecheck(const Env& env, const Term& t) {
    Infer in;
    in.env = env;
    Type got = in.u.resolve(in.run(t));
    if (got.has_meta()) throw TypeError("cannot infer binder type");
    return got;
}

void check(const Env& env, const Term& t, const Type& expected) {
    Infer in;
    in.env = env;
    in.u.unify(in.run(t), expected, "type mismatch: term does not have the expected type");
    if (!(in.u.resolve(expected) == expected)) throw TypeError("type mismatch: expected type is too general");
}

std::optional<Principal> principal(const Term& t) {
    try {
        return infer_principal(t);
    } catch (const TypeError&) {
        return std::nullopt;
    }
}

Principal infer_principal(const Term& t) {
    Infer in;
    in.open = true;
    Type all = in.u.resolve(in.run(t));
    std::vector<VarName> names;
    for (auto& [x, a] : in.env) {
        names.push_back(x);
        all = Type::arrow(in.u.resolve(a), all);
    }
    Type norm = normalize_metas(all);
    Principal p;
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
        p.env[*it] = norm.left();
        norm = norm.right();
    }
    p.type = norm;
    return p;
}

}  // namespace sharecalc::bang
