#include "sharecalc/mscll/derivation.hpp"

#include <stdexcept>

namespace sharecalc::mscll {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::ax: return "ax";
    case Rule::cut: return "cut";
    case Rule::tensor: return "tensor";
    case Rule::par: return "par";
    case Rule::promP: return "!p";
    case Rule::weakW: return "?w";
    case Rule::contrC: return "?c";
    case Rule::derD: return "?@d";
    case Rule::grantI: return "~";
    case Rule::demandI: return "@";
    }
    return "?";
}

namespace {

std::string arity_error(std::size_t want, std::size_t got) {
    return "expected " + std::to_string(want) + " premise(s), found " + std::to_string(got);
}

// Does the conclusion equal premise - `removed` + `added` for some choice of
// a principal formula of kind k in the conclusion?  `build` maps a principal
// formula to the formulas it replaces in the premise.
template <class F>
bool unary_match(const Sequent& concl, const Sequent& prem, FKind k, F build) {
    for (const Formula& f : concl.formulas()) {
        if (f.kind() != k) continue;
        Sequent ctx = concl.minus(f);
        if (ctx.plus(Sequent(build(f))) == prem) return true;
    }
    return false;
}

std::string check_node(const Derivation& d) {
    const Sequent& c = d.conclusion;
    const auto& p = d.premises;
    switch (d.rule) {
    case Rule::ax:
        if (!p.empty()) return arity_error(0, p.size());
        if (c.size() != 2 || !(neg(c.formulas()[0]) == c.formulas()[1])) return "axiom must conclude A, A^";
        return {};
    case Rule::cut: {
        if (p.size() != 2) return arity_error(2, p.size());
        if (!d.cut_formula) return "cut formula not recorded";
        bool ok1 = false, ok2 = false;
        Sequent l = p[0].conclusion.minus(d.cut_formula, &ok1);
        Sequent r = p[1].conclusion.minus(neg(d.cut_formula), &ok2);
        if (!ok1) return "left premise lacks the cut formula";
        if (!ok2) return "right premise lacks the negated cut formula";
        if (!(l.plus(r) == c)) return "conclusion is not the union of the premise contexts";
        return {};
    }
    case Rule::tensor: {
        if (p.size() != 2) return arity_error(2, p.size());
        for (const Formula& f : c.formulas()) {
            if (f.kind() != FKind::tensor) continue;
            bool ok1 = false, ok2 = false;
            Sequent l = p[0].conclusion.minus(f.left(), &ok1);
            Sequent r = p[1].conclusion.minus(f.right(), &ok2);
            if (ok1 && ok2 && l.plus(r).plus(f) == c) return {};
        }
        return "no tensor formula splits the premises";
    }
    case Rule::par:
        if (p.size() != 1) return arity_error(1, p.size());
        if (unary_match(c, p[0].conclusion, FKind::par, [](const Formula& f) {
                return std::vector<Formula>{f.left(), f.right()};
            }))
            return {};
        return "no par formula matches the premise";
    case Rule::promP:
        if (p.size() != 1) return arity_error(1, p.size());
        for (const Formula& f : c.formulas()) {
            if (f.kind() != FKind::ofcourse) continue;
            Sequent ctx = c.minus(f);
            bool side_ok = true;
            for (const Formula& g : ctx.formulas()) side_ok = side_ok && g.kind() == FKind::whynot;
            if (!side_ok) continue;
            if (ctx.plus(f.child()) == p[0].conclusion) return {};
        }
        return "promotion needs |- ?G, A over |- ?G, !A";
    case Rule::weakW:
        if (p.size() != 1) return arity_error(1, p.size());
        for (const Formula& f : c.formulas())
            if (f.kind() == FKind::whynot && c.minus(f) == p[0].conclusion) return {};
        return "weakening must add exactly one ?-formula";
    case Rule::contrC:
        if (p.size() != 1) return arity_error(1, p.size());
        for (const Formula& f : c.formulas())
            if (f.kind() == FKind::whynot && c.plus(f) == p[0].conclusion) return {};
        return "contraction must merge two copies of a ?-formula";
    case Rule::derD:
        if (p.size() != 1) return arity_error(1, p.size());
        for (const Formula& f : c.formulas())
            if (f.kind() == FKind::whynot && f.child().kind() == FKind::demand &&
                c.minus(f).plus(f.child()) == p[0].conclusion)
                return {};
        return "dereliction must turn @A into ?@A";
    case Rule::grantI:
    case Rule::demandI: {
        if (p.size() != 1) return arity_error(1, p.size());
        FKind k = d.rule == Rule::grantI ? FKind::grant : FKind::demand;
        if (unary_match(c, p[0].conclusion, k, [](const Formula& f) { return std::vector<Formula>{f.child()}; }))
            return {};
        return std::string("no ") + (k == FKind::grant ? "~" : "@") + "-formula matches the premise";
    }
    }
    return "unknown rule";
}

void check_rec(const Derivation& d, std::vector<std::size_t>& path, std::vector<NodeError>& out) {
    if (std::string e = check_node(d); !e.empty()) out.push_back({path, d.rule, e});
    for (std::size_t k = 0; k < d.premises.size(); ++k) {
        path.push_back(k);
        check_rec(d.premises[k], path, out);
        path.pop_back();
    }
}

// --- compilation -----------------------------------------------------------

Formula delta_formula(const Type& a) { return Formula::whynot(Formula::demand(neg(type_to_formula(a)))); }

Sequent delta_sequent(const sharing::Context& delta) {
    std::vector<Formula> fs;
    for (const auto& [u, a] : delta) fs.push_back(delta_formula(a));
    return Sequent(std::move(fs));
}

Derivation node(Rule r, Sequent c, std::vector<Derivation> prem, Formula cut = {}) {
    return {r, std::move(c), std::move(prem), std::move(cut)};
}

Derivation axiom(const Formula& a) { return node(Rule::ax, Sequent({neg(a), a}), {}); }

Derivation weaken_all(Derivation d, const std::vector<Formula>& extra) {
    for (const Formula& f : extra) {
        Sequent c = d.conclusion.plus(f);
        d = node(Rule::weakW, std::move(c), {std::move(d)});
    }
    return d;
}

Derivation contract_all(Derivation d, const Sequent& delta) {
    for (const Formula& f : delta.formulas()) {
        Sequent c = d.conclusion.minus(f);
        d = node(Rule::contrC, std::move(c), {std::move(d)});
    }
    return d;
}

Derivation unary(Rule r, const Formula& from, const Formula& to, Derivation d) {
    bool ok = false;
    Sequent c = d.conclusion.minus(from, &ok).plus(to);
    if (!ok) throw std::invalid_argument("compile: missing formula " + print_formula(from));
    return node(r, std::move(c), {std::move(d)});
}

Derivation cut(Derivation left, Derivation right, const Formula& a) {
    bool ok1 = false, ok2 = false;
    Sequent c = left.conclusion.minus(a, &ok1).plus(right.conclusion.minus(neg(a), &ok2));
    if (!ok1 || !ok2) throw std::invalid_argument("compile: cut formula missing");
    return node(Rule::cut, std::move(c), {std::move(left), std::move(right)}, a);
}

const sharing::TypingNode& premise(const sharing::TypingNode& n, std::size_t k) {
    if (n.premises.size() <= k) throw std::invalid_argument("compile: malformed typing derivation");
    return n.premises[k];
}

Derivation compile(const sharing::TypingNode& n) {
    Sequent delta = delta_sequent(n.delta);
    Formula goal = type_to_formula(n.type);
    switch (n.rule) {
    case sharing::TypingRule::lvar:
        return weaken_all(axiom(goal), delta.formulas());
    case sharing::TypingRule::uvar: {
        if (n.type.kind() != TypeKind::grant) throw std::invalid_argument("compile: uvar type is not ~A");
        Formula a = type_to_formula(n.type.child());
        // ax, then @ so that dereliction sees @A^, then ?@d and ~
        Derivation d = axiom(a);
        d = unary(Rule::demandI, neg(a), Formula::demand(neg(a)), std::move(d));
        d = unary(Rule::derD, Formula::demand(neg(a)), delta_formula(n.type.child()), std::move(d));
        d = unary(Rule::grantI, a, Formula::grant(a), std::move(d));
        bool ok = false;
        Sequent rest = delta.minus(delta_formula(n.type.child()), &ok);
        if (!ok) throw std::invalid_argument("compile: uvar not in Delta");
        return weaken_all(std::move(d), rest.formulas());
    }
    case sharing::TypingRule::abs: {
        Derivation d = compile(premise(n, 0));
        bool ok1 = false, ok2 = false;
        Sequent c = d.conclusion.minus(goal.left(), &ok1).minus(goal.right(), &ok2).plus(goal);
        if (!ok1 || !ok2) throw std::invalid_argument("compile: abs premise");
        return node(Rule::par, std::move(c), {std::move(d)});
    }
    case sharing::TypingRule::app: {
        Derivation dt = compile(premise(n, 0));
        Derivation ds = compile(premise(n, 1));
        Formula fa = type_to_formula(premise(n, 1).type);
        Formula fab = type_to_formula(premise(n, 0).type);
        Derivation ax = axiom(neg(goal));  // |- B, B^
        Formula t = Formula::tensor(fa, neg(goal));
        bool ok1 = false, ok2 = false;
        Sequent tc = ds.conclusion.minus(fa, &ok1).plus(ax.conclusion.minus(neg(goal), &ok2)).plus(t);
        if (!ok1 || !ok2) throw std::invalid_argument("compile: app premises");
        Derivation tens = node(Rule::tensor, std::move(tc), {std::move(ds), std::move(ax)});
        return contract_all(cut(std::move(dt), std::move(tens), fab), delta);
    }
    case sharing::TypingRule::grant:
        return unary(Rule::grantI, type_to_formula(premise(n, 0).type), goal, compile(premise(n, 0)));
    case sharing::TypingRule::request: {
        Derivation dt = compile(premise(n, 0));
        Derivation side = unary(Rule::demandI, neg(goal), Formula::demand(neg(goal)), axiom(goal));
        return cut(std::move(dt), std::move(side), Formula::grant(goal));
    }
    case sharing::TypingRule::prom:
        return unary(Rule::promP, type_to_formula(premise(n, 0).type), goal, compile(premise(n, 0)));
    case sharing::TypingRule::sub: {
        Derivation dt = compile(premise(n, 0));
        Derivation ds = compile(premise(n, 1));
        return contract_all(cut(std::move(ds), std::move(dt), type_to_formula(premise(n, 1).type)), delta);
    }
    }
    throw std::invalid_argument("compile: unknown typing rule");
}

void text_rec(const Derivation& d, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += rule_name(d.rule);
    if (d.rule == Rule::cut) out += " [" + print_formula(d.cut_formula) + "]";
    out += " " + print_sequent(d.conclusion) + "\n";
    for (const auto& p : d.premises) text_rec(p, depth + 1, out);
}

}  // namespace

std::vector<NodeError> check_derivation(const Derivation& d) {
    std::vector<NodeError> out;
    std::vector<std::size_t> path;
    check_rec(d, path, out);
    return out;
}

std::string print_error(const NodeError& e) {
    std::string p = "root";
    for (auto k : e.path) p += "." + std::to_string(k);
    return p + " (" + rule_name(e.rule) + "): " + e.message;
}

Derivation compile_typing(const sharing::TypingNode& n) { return compile(n); }

Sequent soundness_sequent(const sharing::Context& delta, const sharing::Context& gamma, const Type& a) {
    std::vector<Formula> fs;
    for (const auto& [u, b] : delta) fs.push_back(delta_formula(b));
    for (const auto& [x, b] : gamma) fs.push_back(neg(type_to_formula(b)));
    fs.push_back(type_to_formula(a));
    return Sequent(std::move(fs));
}

std::string derivation_text(const Derivation& d) {
    std::string out;
    text_rec(d, 0, out);
    return out;
}

std::size_t derivation_size(const Derivation& d) {
    std::size_t n = 1;
    for (const auto& p : d.premises) n += derivation_size(p);
    return n;
}

}  // namespace sharecalc::mscll
