#include "sharecalc/lsc/typing.hpp"

#include <optional>

namespace sharecalc::lsc {

namespace {

struct Infer {
    Unifier u;
    std::map<VarName, Type> env;
    bool open = false;  // free variables get metas

    Type run(const Term& t) {
        switch (t.kind()) {
        case Kind::var: {
            auto it = env.find(t.name());
            if (it == env.end()) {
                if (!open) throw TypeError("unbound variable " + t.name().str());
                it = env.emplace(t.name(), u.fresh()).first;
            }
            return it->second;
        }
        case Kind::abs: {
            Type a = u.fresh();
            Type b = scoped(t.name(), a, t.body());
            return Type::arrow(a, b);
        }
        case Kind::app: {
            Type f = run(t.fn());
            Type a = run(t.arg());
            Type r = u.fresh();
            Type fr = u.resolve(f);
            if (fr.kind() == TypeKind::atom) throw TypeError("applying a non-arrow");
            u.unify(f, Type::arrow(a, r), "arrow mismatch");
            return r;
        }
        case Kind::es: {
            Type s = run(t.arg());
            return scoped(t.name(), s, t.body());
        }
        default: throw TypeError(std::string(kind_name(t.kind())) + " is not an LSC construct");
        }
    }

    Type scoped(const VarName& x, const Type& a, const Term& body) {
        auto saved = env.find(x) == env.end() ? std::optional<Type>() : std::optional<Type>(env[x]);
        env[x] = a;
        Type b = run(body);
        if (saved) env[x] = *saved;
        else env.erase(x);
        return b;
    }
};

}  // namespace

void check(const Env& env, const Term& t, const Type& expected) {
    Infer in;
    in.env = env;
    Type got = in.run(t);
    in.u.unify(got, expected, "type mismatch: term does not have the expected type");
    // metas left in the expected type's instance must not have been refined
    if (!(in.u.resolve(expected) == expected)) throw TypeError("type mismatch: expected type is too general");
}

Type synthesize(const Env& env, const Term& t) {
    Infer in;
    in.env = env;
    Type got = in.u.resolve(in.run(t));
    if (got.has_meta()) throw TypeError("cannot infer binder type");
    return got;
}

std::optional<Principal> principal(const Term& t, const Env& env) {
    try {
        return infer_principal(t, env);
    } catch (const TypeError&) {
        return std::nullopt;
    }
}

Principal infer_principal(const Term& t, const Env& env) {
    Infer in;
    in.env = env;
    in.open = true;
    Type ty = in.run(t);
    Principal p;
    // renumber metas consistently across env and type
    Type all = in.u.resolve(ty);
    std::vector<std::pair<VarName, Type>> entries;
    for (auto& [x, a] : in.env) {
        Type r = in.u.resolve(a);
        entries.emplace_back(x, r);
        all = Type::arrow(r, all);
    }
    Type norm = normalize_metas(all);
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        p.env[it->first] = norm.left();
        norm = norm.right();
    }
    p.type = norm;
    return p;
}

}  // namespace sharecalc::lsc
