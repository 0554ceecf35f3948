#include "sharecalc/oracle/graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "sharecalc/bang/bang.hpp"
#include "sharecalc/lsc/weak.hpp"
#include "sharecalc/sharing/reduction.hpp"
#include "sharecalc/sharing/weak.hpp"
#include "sharecalc/syntax/ops.hpp"

namespace sharecalc::oracle {

namespace {

struct Canon {
    VarSet used;
    std::vector<std::pair<VarName, VarName>> scope;

    VarName lookup(const VarName& x) const {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
            if (it->first == x) return it->second;
        return x;
    }

    VarName fresh(Sort s) {
        VarName v = fresh_var(VarName(s, s == Sort::linear ? "c" : "w"), used);
        insert(used, v);
        return v;
    }

    Term go(const Term& t) {
        switch (t.kind()) {
        case Kind::var: return Term::var(lookup(t.name()));
        case Kind::hole: return t;
        case Kind::abs:
        case Kind::es: {
            VarName y = fresh(t.name().sort);
            // pre-order: the binder is named before the ES argument
            Term arg = t.kind() == Kind::es ? go(t.arg()) : Term();
            scope.emplace_back(t.name(), y);
            Term b = go(t.body());
            scope.pop_back();
            return t.kind() == Kind::abs ? Term::abs(y, b) : Term::es(b, y, arg);
        }
        case Kind::app: {
            Term l = go(t.fn());
            return Term::app(l, go(t.arg()));
        }
        default: return Term::unary(t.kind(), go(t.child()));
        }
    }
};

}  // namespace

Term alpha_canonical(const Term& t) {
    Canon c{t.fv(), {}};
    return c.go(t);
}

Stepper sharing_stepper() {
    return [](const Term& t) {
        std::vector<std::pair<std::string, Term>> out;
        for (auto& s : sharing::redexes(t)) out.emplace_back(sharing::rule_name(s.rule), std::move(s.reduct));
        return out;
    };
}

Stepper lsc_stepper(lsc::Calculus c) {
    return [c](const Term& t) {
        std::vector<std::pair<std::string, Term>> out;
        for (auto& s : lsc::redexes(t, c)) out.emplace_back(lsc::rule_name(s.rule), std::move(s.reduct));
        return out;
    };
}

Stepper bang_stepper(bool simplified) {
    return [simplified](const Term& t) {
        std::vector<std::pair<std::string, Term>> out;
        for (auto& s : bang::redexes(t, simplified)) out.emplace_back(bang::rule_name(s.rule), std::move(s.reduct));
        return out;
    };
}

Stepper weak_sharing_stepper() {
    return [](const Term& t) {
        std::vector<std::pair<std::string, Term>> out;
        for (auto& s : sharing::weak_eval(t)) out.emplace_back(sharing::to_string(s.name), std::move(s.result));
        return out;
    };
}

Stepper weak_lsc_stepper(lsc::Calculus c) {
    return [c](const Term& t) {
        std::vector<std::pair<std::string, Term>> out;
        for (auto& s : lsc::weak_eval_steps(t, c)) out.emplace_back(lsc::to_string(s.name), std::move(s.result));
        return out;
    };
}

Stepper only_rule(Stepper step, std::string rule, bool keep) {
    return [step = std::move(step), rule = std::move(rule), keep](const Term& t) {
        auto all = step(t);
        std::vector<std::pair<std::string, Term>> out;
        for (auto& e : all)
            if ((e.first == rule) == keep) out.push_back(std::move(e));
        return out;
    };
}

std::size_t ReductionGraph::find(const Term& t) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (alpha_eq(nodes[i], t)) return i;
    return nodes.size();
}

ReductionGraph reachable_set(const Term& t, const Stepper& step, const Caps& caps) {
    ReductionGraph g;
    std::unordered_map<Term, std::size_t, AlphaHash, AlphaEq> index;
    auto add = [&](const Term& s, std::size_t d) {
        auto [it, fresh] = index.emplace(s, g.nodes.size());
        if (fresh) {
            g.nodes.push_back(alpha_canonical(s));
            g.depth.push_back(d);
            g.succ.emplace_back();
            g.expanded.push_back(false);
        }
        return it->second;
    };
    add(t, 0);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.depth[i] >= caps.max_depth) {
            g.truncated = true;
            continue;
        }
        std::vector<std::pair<std::string, Term>> next = step(g.nodes[i]);
        std::size_t unseen = 0;
        for (auto& [rule, s] : next)
            if (index.find(s) == index.end()) ++unseen;
        if (g.nodes.size() + unseen > caps.max_nodes) {
            g.truncated = true;
            continue;
        }
        g.expanded[i] = true;
        for (auto& [rule, s] : next) {
            std::size_t j = add(s, g.depth[i] + 1);
            bool dup = false;
            for (std::size_t e : g.succ[i])
                if (g.edges[e].to == j && g.edges[e].rule == rule) dup = true;
            if (dup) continue;
            g.succ[i].push_back(g.edges.size());
            g.edges.push_back({rule, i, j});
        }
    }
    if (!g.truncated && caps.max_depth != std::numeric_limits<std::size_t>::max()) {
        auto len = longest_path(g);
        if (!len || *len > caps.max_depth) g.truncated = true;
    }
    return g;
}

std::optional<std::size_t> longest_path(const ReductionGraph& g) {
    // Iterative DFS: 0 unvisited, 1 on the stack, 2 done.
    std::vector<std::uint8_t> state(g.nodes.size(), 0);
    std::vector<std::size_t> len(g.nodes.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    state[0] = 1;
    while (!stack.empty()) {
        auto& [n, k] = stack.back();
        if (k < g.succ[n].size()) {
            std::size_t m = g.edges[g.succ[n][k++]].to;
            if (state[m] == 1) return std::nullopt;
            if (state[m] == 0) {
                state[m] = 1;
                stack.emplace_back(m, 0);
            }
            continue;
        }
        for (std::size_t e : g.succ[n]) len[n] = std::max(len[n], len[g.edges[e].to] + 1);
        state[n] = 2;
        stack.pop_back();
    }
    return len[0];
}

}  // namespace sharecalc::oracle
