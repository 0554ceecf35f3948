#include "sharecalc/sharing/typing.hpp"

#include <algorithm>

#include "sharecalc/syntax/ops.hpp"

namespace sharecalc::sharing {

const char* typing_rule_name(TypingRule r) {
    switch (r) {
    case TypingRule::lvar: return "lvar";
    case TypingRule::uvar: return "uvar";
    case TypingRule::abs: return "abs";
    case TypingRule::app: return "app";
    case TypingRule::grant: return "grant";
    case TypingRule::request: return "request";
    case TypingRule::prom: return "prom";
    case TypingRule::sub: return "sub";
    }
    return "?";
}

namespace {

struct Out {
    TypingNode node;
    VarSet consumed;
};

struct Checker {
    Unifier u;
    std::map<VarName, Type> delta;  // in scope
    std::map<VarName, Type> gamma;  // in scope

    Context delta_ctx() const { return {delta.begin(), delta.end()}; }

    Context gamma_of(const VarSet& used) const {
        Context c;
        for (const auto& v : used) c.emplace_back(v, gamma.at(v));
        return c;
    }

    Out node(TypingRule r, const Term& t, Type ty, VarSet used, std::vector<TypingNode> prem) {
        TypingNode n{r, t, delta_ctx(), gamma_of(used), std::move(ty), std::move(prem)};
        return {std::move(n), std::move(used)};
    }

    static VarSet disjoint_union(const VarSet& a, const VarSet& b) {
        VarSet both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty()) throw TypeError("linear variable " + both.front().str() + " used twice");
        return set_union(a, b);
    }

    Out run(const Term& t) {
        switch (t.kind()) {
        case Kind::var: {
            const VarName& x = t.name();
            if (x.sort == Sort::linear) {
                auto it = gamma.find(x);
                if (it == gamma.end()) throw TypeError("unbound variable " + x.str());
                return node(TypingRule::lvar, t, it->second, {x}, {});
            }
            if (x.sort != Sort::unrestricted) throw TypeError("variable " + x.str() + " has no sharing sort");
            auto it = delta.find(x);
            if (it == delta.end()) throw TypeError("unbound variable " + x.str());
            return node(TypingRule::uvar, t, Type::grant(it->second), {}, {});
        }
        case Kind::abs: {
            const VarName& a = t.name();
            Type ta = u.fresh();
            gamma[a] = ta;
            Out b = run(t.body());
            if (!contains(b.consumed, a)) throw TypeError("linear variable " + a.str() + " unused");
            VarSet used = b.consumed;
            used.erase(std::lower_bound(used.begin(), used.end(), a));
            Type ty = Type::lolli(ta, b.node.type);
            Out r = node(TypingRule::abs, t, ty, used, {});
            r.node.premises.push_back(std::move(b.node));
            gamma.erase(a);
            return r;
        }
        case Kind::app: {
            Out f = run(t.fn());
            Out s = run(t.arg());
            VarSet used = disjoint_union(f.consumed, s.consumed);
            Type res = u.fresh();
            Type fr = u.resolve(f.node.type);
            if (fr.kind() != TypeKind::meta && fr.kind() != TypeKind::lolli)
                throw TypeError("operand type mismatch: applying a term of non-arrow type");
            u.unify(f.node.type, Type::lolli(s.node.type, res), "operand type mismatch");
            std::vector<TypingNode> prem;
            prem.push_back(std::move(f.node));
            prem.push_back(std::move(s.node));
            return node(TypingRule::app, t, res, used, std::move(prem));
        }
        case Kind::grant: {
            Out c = run(t.child());
            Type ty = Type::grant(c.node.type);
            std::vector<TypingNode> prem;
            prem.push_back(std::move(c.node));
            return node(TypingRule::grant, t, ty, c.consumed, std::move(prem));
        }
        case Kind::request: {
            Out c = run(t.child());
            Type a = u.fresh();
            u.unify(c.node.type, Type::grant(a), "operand type mismatch: open expects a ~-type");
            std::vector<TypingNode> prem;
            prem.push_back(std::move(c.node));
            return node(TypingRule::request, t, a, c.consumed, std::move(prem));
        }
        case Kind::prom: {
            Out c = run(t.child());
            if (!c.consumed.empty())
                throw TypeError("non-empty linear consumption under !: " + c.consumed.front().str());
            Type ty = Type::bang(c.node.type);
            std::vector<TypingNode> prem;
            prem.push_back(std::move(c.node));
            return node(TypingRule::prom, t, ty, {}, std::move(prem));
        }
        case Kind::es: {
            Type a = u.fresh();
            delta[t.name()] = a;
            Out b = run(t.body());
            delta.erase(t.name());
            Out s = run(t.arg());
            u.unify(s.node.type, Type::bang(Type::grant(a)), "ES argument not of shape !~A");
            VarSet used = disjoint_union(b.consumed, s.consumed);
            Type ty = b.node.type;
            std::vector<TypingNode> prem;
            prem.push_back(std::move(b.node));
            prem.push_back(std::move(s.node));
            return node(TypingRule::sub, t, ty, used, std::move(prem));
        }
        default: throw TypeError(std::string(kind_name(t.kind())) + " is not a sharing construct");
        }
    }

    void zonk(TypingNode& n) {
        n.type = u.resolve(n.type);
        for (auto& [x, a] : n.delta) a = u.resolve(a);
        for (auto& [x, a] : n.gamma) a = u.resolve(a);
        for (auto& p : n.premises) zonk(p);
    }
};

struct MetaRenamer {
    std::map<std::uint32_t, std::uint32_t> ids;

    Type operator()(const Type& t) {
        if (!t.has_meta()) return t;
        switch (t.kind()) {
        case TypeKind::meta: return Type::meta(ids.try_emplace(t.meta_id(), static_cast<std::uint32_t>(ids.size())).first->second);
        case TypeKind::grant: return Type::grant((*this)(t.child()));
        case TypeKind::bang: return Type::bang((*this)(t.child()));
        case TypeKind::lolli: {
            Type a = (*this)(t.left());
            return Type::lolli(a, (*this)(t.right()));
        }
        default: {
            Type a = (*this)(t.left());
            return Type::arrow(a, (*this)(t.right()));
        }
        }
    }

    void apply(TypingNode& n) {
        n.type = (*this)(n.type);
        for (auto& [x, a] : n.delta) a = (*this)(a);
        for (auto& [x, a] : n.gamma) a = (*this)(a);
        for (auto& p : n.premises) apply(p);
    }
};

TypingResult finish(Checker& c, Out out, const TypingEnv& env) {
    c.zonk(out.node);
    TypingResult r;
    r.env = env;
    for (auto& [x, a] : r.env.delta) a = c.u.resolve(a);
    for (auto& [x, a] : r.env.gamma) a = c.u.resolve(a);
    MetaRenamer mr;
    r.type = mr(out.node.type);
    for (auto& [x, a] : r.env.gamma) a = mr(a);
    for (auto& [x, a] : r.env.delta) a = mr(a);
    mr.apply(out.node);
    r.consumed = out.consumed;
    r.derivation = std::move(out.node);
    return r;
}

}  // namespace

TypingResult typecheck(const TypingEnv& env, const Term& t) {
    Checker c;
    c.delta = env.delta;
    c.gamma = env.gamma;
    Out out = c.run(rename_binders_apart(t));
    for (const auto& [x, a] : env.gamma)
        if (!contains(out.consumed, x)) throw TypeError("linear variable " + x.str() + " unused");
    return finish(c, std::move(out), env);
}

std::optional<TypingResult> principal(const Term& t) {
    try {
        return infer_principal(t);
    } catch (const TypeError&) {
        return std::nullopt;
    }
}

TypingResult infer_principal(const Term& t) {
    Checker c;
    Term r = rename_binders_apart(t);
    TypingEnv env;
    // every free variable gets a meta up front so all nodes see the same Delta
    for (const auto& x : r.fv()) (x.sort == Sort::linear ? env.gamma : env.delta)[x] = c.u.fresh();
    c.delta = env.delta;
    c.gamma = env.gamma;
    Out out = c.run(r);
    return finish(c, std::move(out), env);
}

}  // namespace sharecalc::sharing
