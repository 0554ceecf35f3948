#include "sharecalc/oracle/properties.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "sharecalc/bang/bang.hpp"
#include "sharecalc/lsc/fusion.hpp"
#include "sharecalc/lsc/typing.hpp"
#include "sharecalc/lsc/weak.hpp"
#include "sharecalc/mscll/derivation.hpp"
#include "sharecalc/sharing/flatten.hpp"
#include "sharecalc/sharing/normal_forms.hpp"
#include "sharecalc/sharing/reduction.hpp"
#include "sharecalc/sharing/to_lsc.hpp"
#include "sharecalc/sharing/typing.hpp"
#include "sharecalc/sharing/weak.hpp"
#include "sharecalc/syntax/ops.hpp"
#include "sharecalc/syntax/text.hpp"
#include "sharecalc/translations/rulenames.hpp"

namespace sharecalc::oracle {

using translations::TranslationKind;

namespace {

std::string show(const Term& t) { return print_term(t); }

bool alpha_member(const std::vector<Term>& v, const Term& t) {
    for (const Term& s : v)
        if (alpha_eq(s, t)) return true;
    return false;
}

void push_unique(std::vector<Term>& v, Term t) {
    if (!alpha_member(v, t)) v.push_back(std::move(t));
}

sharing::Rule to_rule(sharing::Rulename::Kind k) {
    switch (k) {
    case sharing::Rulename::Kind::db: return sharing::Rule::sdb;
    case sharing::Rulename::Kind::req: return sharing::Rule::sreq;
    case sharing::Rulename::Kind::ls: return sharing::Rule::sls;
    default: return sharing::Rule::sgc;
    }
}

std::string seq_text(const std::vector<sharing::Rule>& seq) {
    std::string s;
    for (auto r : seq) s += (s.empty() ? "" : " ") + std::string(sharing::rule_name(r));
    return s;
}

// Allowed simulation lengths per source rule.
bool length_ok(TranslationKind k, const std::string& rule, std::size_t n) {
    switch (k) {
    case TranslationKind::cbn:
    case TranslationKind::bang: return n >= 1 && n <= 2;
    case TranslationKind::cbv: return n >= 1 && n <= 4;
    case TranslationKind::cbs: return rule == "db" ? n == 2 : n == 1;
    }
    return false;
}

struct SourceStep {
    std::string rule;
    Term reduct;
    std::vector<sharing::Rule> seq;
};

std::vector<SourceStep> source_steps(const Term& t, TranslationKind k) {
    std::vector<SourceStep> out;
    if (k == TranslationKind::bang) {
        using S = sharing::Rule;
        for (auto& s : bang::redexes(t, true)) {
            std::vector<S> seq;
            switch (s.rule) {
            case bang::Rule::dbB: seq = {S::sdb}; break;
            case bang::Rule::lsB: seq = {S::sls, S::sreq}; break;
            default: seq = {S::sgc}; break;
            }
            out.push_back({bang::rule_name(s.rule), s.reduct, seq});
        }
        return out;
    }
    for (auto& s : lsc::redexes(t, source_calculus(k))) {
        std::vector<sharing::Rule> seq;
        for (auto& rn : translations::translate_rulename(lsc::Rulename::top(lsc::to_rulename(s.rule)), k))
            seq.push_back(to_rule(rn.kind));
        out.push_back({lsc::rule_name(s.rule), s.reduct, seq});
    }
    return out;
}

void forward_full(const Term& t, const Term& tt, TranslationKind k, PropertyReport& r) {
    for (const SourceStep& st : source_steps(t, k)) {
        ++r.checked;
        Term target = translations::translate(st.reduct, k);
        std::vector<Term> frontier{tt};
        for (auto rule : st.seq) {
            std::vector<Term> next;
            for (const Term& cur : frontier)
                for (auto& s : sharing::redexes(cur))
                    if (s.rule == rule) push_unique(next, s.reduct);
            frontier = std::move(next);
        }
        std::string input = show(t) + " -" + st.rule + "-> " + show(st.reduct);
        if (!alpha_member(frontier, target))
            r.fail(input, seq_text(st.seq) + " reaching " + show(target), "not reached");
        else if (!length_ok(k, st.rule, st.seq.size()))
            r.fail(input, "step count within bound", std::to_string(st.seq.size()));
    }
}

std::vector<Term> source_payloads(TranslationKind k) {
    Term id = Term::abs(VarName::plain("w"), Term::var(VarName::plain("w")));
    switch (k) {
    case TranslationKind::cbn: return {Term::var(VarName::plain("y")), id};
    case TranslationKind::cbv: return {id};
    case TranslationKind::cbs: return {id, Term::es(id, VarName(Sort::plain, "w", 1), Term::var(VarName::plain("y")))};
    case TranslationKind::bang: return {};
    }
    return {};
}

// Terms reached from `start` by weak sharing steps labelled by `seq`.
std::vector<Term> follow_weak(const Term& start, const std::vector<sharing::Rulename>& seq) {
    std::vector<Term> frontier{start};
    for (const auto& rn : seq) {
        std::vector<Term> next;
        for (const Term& cur : frontier) {
            if (rn.kind == sharing::Rulename::Kind::sigma) {
                for (auto& s : sharing::weak_sigma_steps(cur, rn.u, rn.payload)) push_unique(next, s.result);
            } else if (rn.kind == sharing::Rulename::Kind::iota) {
                if (sharing::weak_iota(cur, rn.u)) push_unique(next, cur);
            } else {
                for (auto& s : sharing::weak_eval(cur))
                    if (sharing::same_rulename(s.name, rn)) push_unique(next, s.result);
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

std::string names_text(const std::vector<sharing::Rulename>& seq) {
    std::string s;
    for (auto& rn : seq) s += (s.empty() ? "" : " ") + sharing::to_string(rn);
    return s.empty() ? "no step" : s;
}

void forward_weak(const Term& t, const Term& tt, TranslationKind k, PropertyReport& r) {
    lsc::Calculus c = source_calculus(k);
    auto one = [&](const lsc::WeakStep& ws) {
        ++r.checked;
        std::string input = show(t) + " -" + lsc::to_string(ws.name) + "-> " + show(ws.result);
        std::vector<sharing::Rulename> seq;
        try {
            seq = translations::translate_rulename(ws.name, k);
        } catch (const translations::TranslationError& e) {
            r.fail(input, "translatable rulename", e.what());
            return;
        }
        Term target = translations::translate(ws.result, k);
        if (!alpha_member(follow_weak(tt, seq), target))
            r.fail(input, names_text(seq) + " reaching " + show(target), "not reached");
    };
    for (auto& ws : lsc::weak_eval_steps(t, c)) one(ws);
    for (const VarName& x : t.fv()) {
        for (const Term& p : source_payloads(k))
            for (auto& ws : lsc::weak_sigma_steps(t, c, x, p)) one(ws);
        if (k == TranslationKind::cbs && lsc::weak_iota(t, c, x)) {
            ++r.checked;
            auto seq = translations::translate_rulename(lsc::Rulename::iota(x), k);
            if (!alpha_member(follow_weak(tt, seq), tt))
                r.fail(show(t) + " iota(" + x.str() + ")", names_text(seq), "no such judgment");
        }
    }
}

// Source steps from a to b with a ≤ 1 step relation (CBV adds garbage
// introduction).
bool source_step_or_equal(const Term& a, const Term& b, TranslationKind k) {
    if (alpha_eq(a, b)) return true;
    if (k == TranslationKind::bang) {
        for (auto& s : bang::redexes(a, true))
            if (alpha_eq(s.reduct, b)) return true;
        return false;
    }
    for (auto& s : lsc::redexes(a, source_calculus(k)))
        if (alpha_eq(s.reduct, b)) return true;
    return k == TranslationKind::cbv && lsc::is_gcvlax_inverse_step(a, b, false);
}

std::optional<Term> try_inverse(const Term& t, TranslationKind k) {
    if (!translations::in_image(t, k)) return std::nullopt;
    try {
        return translations::inverse(t, k);
    } catch (const translations::TranslationError&) {
        return std::nullopt;
    }
}

void inverse_full(const Term& tt, TranslationKind k, const Caps& caps, PropertyReport& r) {
    ReductionGraph g = reachable_set(tt, sharing_stepper(), caps);
    if (g.truncated) ++r.inconclusive;
    std::vector<std::optional<Term>> inv;
    for (const Term& n : g.nodes) {
        inv.push_back(try_inverse(n, k));
        if (!inv.back()) r.fail(show(n), std::string("member of the ") + translations::kind_name(k) + " image", "not a member");
    }
    for (const Edge& e : g.edges) {
        if (!inv[e.from] || !inv[e.to]) continue;
        ++r.checked;
        if (!source_step_or_equal(*inv[e.from], *inv[e.to], k))
            r.fail(show(g.nodes[e.from]) + " -" + e.rule + "-> " + show(g.nodes[e.to]),
                   "at most one source step from " + show(*inv[e.from]) + " to " + show(*inv[e.to]), "none");
    }
}

bool source_follows(const Term& a, const Term& b, const std::vector<lsc::Rulename>& seq, lsc::Calculus c) {
    using K = lsc::Rulename::Kind;
    if (seq.size() == 1 && seq[0].kind == K::gcvlax_inv) return lsc::is_gcvlax_inverse_step(a, b, true);
    std::vector<Term> frontier{a};
    for (const auto& rn : seq) {
        std::vector<Term> next;
        for (const Term& cur : frontier) {
            if (rn.kind == K::sigma || rn.kind == K::sigma2) {
                for (auto& s : lsc::weak_sigma_steps(cur, c, rn.x, rn.payload)) push_unique(next, s.result);
            } else if (rn.kind == K::iota) {
                if (lsc::weak_iota(cur, c, rn.x)) push_unique(next, cur);
            } else {
                for (auto& s : lsc::weak_eval_steps(cur, c))
                    if (lsc::same_rulename(s.name, rn)) push_unique(next, s.result);
            }
        }
        frontier = std::move(next);
    }
    return alpha_member(frontier, b);
}

void inverse_weak(const Term& tt, TranslationKind k, const Caps& caps, PropertyReport& r) {
    lsc::Calculus c = source_calculus(k);
    std::vector<Term> payloads;
    for (const Term& p : source_payloads(k))
        payloads.push_back(translations::translate_rulename(lsc::Rulename::sigma(VarName::plain("x"), p), k)[0].payload);

    ReductionGraph g = reachable_set(tt, weak_sharing_stepper(), caps);
    if (g.truncated) ++r.inconclusive;
    for (const Term& n : g.nodes) {
        std::optional<Term> a = try_inverse(n, k);
        if (!a) {
            r.fail(show(n), std::string("member of the ") + translations::kind_name(k) + " image", "not a member");
            continue;
        }
        auto one = [&](const sharing::WeakStep& ws) {
            ++r.checked;
            std::string input = show(n) + " -" + sharing::to_string(ws.name) + "-> " + show(ws.result);
            std::optional<Term> b = try_inverse(ws.result, k);
            if (!b) {
                r.fail(input, "reduct in the image", "not a member");
                return;
            }
            for (auto& seq : translations::inverse_rulename(ws.name, k))
                if (source_follows(*a, *b, seq, c)) return;
            r.fail(input, "inverse rulename step " + show(*a) + " to " + show(*b), "none");
        };
        for (auto& ws : sharing::weak_eval(n)) one(ws);
        for (const VarName& u : n.fv()) {
            if (u.sort != Sort::unrestricted) continue;
            for (const Term& p : payloads)
                for (auto& ws : sharing::weak_sigma_steps(n, u, p)) one(ws);
            if (k == TranslationKind::cbs && sharing::weak_iota(n, u)) {
                ++r.checked;
                sharing::Rulename rn{sharing::Rulename::Kind::iota, u, {}};
                bool ok = false;
                try {
                    for (auto& seq : translations::inverse_rulename(rn, k)) ok = ok || source_follows(*a, *a, seq, c);
                } catch (const translations::TranslationError&) {
                }
                if (!ok) r.fail(show(n) + " iota!(" + u.str() + ")", "source iota judgment", "none");
            }
        }
    }
}

sharing::TypingEnv frozen(const sharing::TypingEnv& env) {
    sharing::TypingEnv out;
    for (auto& [x, a] : env.delta) out.delta[x] = freeze_metas(a);
    for (auto& [x, a] : env.gamma) out.gamma[x] = freeze_metas(a);
    return out;
}

template <class Env>
Env frozen_map(const Env& env) {
    Env out;
    for (auto& [x, a] : env) out[x] = freeze_metas(a);
    return out;
}

bool instance_of(const Type& general, const Type& specific) {
    Unifier u;
    return u.try_unify(general, specific);
}

}  // namespace

void PropertyReport::fail(std::string input, std::string expected, std::string actual) {
    ++failure_count;
    if (failures.size() < kept) failures.push_back({std::move(input), std::move(expected), std::move(actual)});
}

void PropertyReport::merge(const PropertyReport& r) {
    checked += r.checked;
    inconclusive += r.inconclusive;
    failure_count += r.failure_count;
    for (const Failure& f : r.failures)
        if (failures.size() < kept) failures.push_back(f);
}

std::string report_text(const PropertyReport& r, bool timing) {
    std::ostringstream out;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    out << r.id << ": " << r.checked << " checked, " << r.failure_count << " failed, " << r.inconclusive
        << " inconclusive";
    if (timing) out << " (" << secs << "s)";
    out << "\n";
    for (const Failure& f : r.failures)
        out << "  input:    " << f.input << "\n  expected: " << f.expected << "\n  actual:   " << f.actual << "\n";
    return out.str();
}

PropertyReport run_exhaustive(const std::string& id, Enumerator& e, std::uint32_t max_size, const Check& check) {
    auto start = std::chrono::steady_clock::now();
    PropertyReport total;
    total.id = id;
    for (std::uint32_t n = 1; n <= max_size; ++n)
        e.each(n, [&](const Term& t) {
            try {
                total.merge(check(t));
            } catch (const std::exception& ex) {
                total.fail(show(t), "no exception", ex.what());
            }
        });
    total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return total;
}

lsc::Calculus source_calculus(TranslationKind k) {
    switch (k) {
    case TranslationKind::cbv: return lsc::Calculus::cbv;
    case TranslationKind::cbs: return lsc::Calculus::cbs;
    default: return lsc::Calculus::cbn;
    }
}

PropertyReport check_confluence_mod_flatten(const Term& t, const Caps& caps) {
    PropertyReport r;
    r.checked = 1;
    ReductionGraph g = reachable_set(t, sharing_stepper(), caps);
    if (g.truncated) {
        r.inconclusive = 1;
        return r;
    }
    const std::size_t n = g.nodes.size();
    // Tarjan's SCC, iteratively.
    std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), comp(n, SIZE_MAX);
    std::vector<bool> on(n, false);
    std::vector<std::size_t> st;
    std::size_t counter = 0, ncomp = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != SIZE_MAX) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        st.push_back(root);
        on[root] = true;
        while (!call.empty()) {
            auto [v, i] = call.back();
            if (i < g.succ[v].size()) {
                ++call.back().second;
                std::size_t w = g.edges[g.succ[v][i]].to;
                if (index[w] == SIZE_MAX) {
                    index[w] = low[w] = counter++;
                    st.push_back(w);
                    on[w] = true;
                    call.emplace_back(w, 0);
                } else if (on[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[v]);
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = st.back();
                    st.pop_back();
                    on[w] = false;
                    comp[w] = ncomp;
                } while (w != v);
                ++ncomp;
            }
        }
    }
    std::vector<bool> bottom(ncomp, true);
    for (const Edge& e : g.edges)
        if (comp[e.from] != comp[e.to]) bottom[comp[e.from]] = false;
    std::vector<std::vector<std::size_t>> members(ncomp);
    for (std::size_t v = 0; v < n; ++v)
        if (bottom[comp[v]]) members[comp[v]].push_back(v);

    std::size_t first = SIZE_MAX;
    for (std::size_t c = 0; c < ncomp; ++c) {
        if (!bottom[c]) continue;
        if (first == SIZE_MAX) {
            first = c;
            continue;
        }
        bool joined = false;
        for (std::size_t a : members[first])
            for (std::size_t b : members[c])
                if (!joined && sharing::equiv_flatten(g.nodes[a], g.nodes[b])) joined = true;
        if (!joined) {
            r.fail(show(t), "reducts joinable modulo flattening",
                   show(g.nodes[members[first][0]]) + " and " + show(g.nodes[members[c][0]]));
            break;
        }
    }
    return r;
}

std::optional<std::size_t> check_sn(const Term& t, std::size_t cap, const Caps& caps) {
    ReductionGraph g = reachable_set(t, sharing_stepper(), caps);
    if (g.truncated) return std::nullopt;
    auto len = longest_path(g);
    if (!len || *len > cap) return std::nullopt;
    return len;
}

PropertyReport check_typed_sn(const Term& t, std::size_t cap) {
    PropertyReport r;
    if (!sharing::principal(t)) return r;
    r.checked = 1;
    if (!check_sn(t, cap)) r.fail(show(t), "normal form within " + std::to_string(cap) + " steps", "no bound");
    return r;
}

PropertyReport check_simulation(const Term& t, TranslationKind k, const Caps& caps, SimulationParts parts) {
    PropertyReport r;
    const bool bang = k == TranslationKind::bang;
    Term tt = translations::translate(t, k);
    if (parts.forward) forward_full(t, tt, k, r);
    if (parts.weak && !bang) forward_weak(t, tt, k, r);
    if (parts.inverse) inverse_full(tt, k, caps, r);
    if (parts.weak_inverse && !bang) inverse_weak(tt, k, caps, r);
    return r;
}

PropertyReport check_left_inverse(const Term& t, TranslationKind k) {
    PropertyReport r;
    r.checked = 1;
    Term back = translations::inverse(translations::translate(t, k), k);
    if (!alpha_eq(back, t)) r.fail(show(t), show(t), show(back));
    return r;
}

PropertyReport check_nf_preservation(const Term& t, TranslationKind k) {
    PropertyReport r;
    r.checked = 1;
    bool src = k == TranslationKind::bang ? bang::is_nf(t, true) : lsc::is_nf(t, source_calculus(k));
    Term tt = translations::translate(t, k);
    bool img = sharing::is_nf(tt);
    if (src != img)
        r.fail(show(t), std::string("translation ") + (src ? "normal" : "reducible"),
               show(tt) + (img ? " is normal" : " is reducible"));
    return r;
}

PropertyReport check_nf_adequacy(const Term& t) {
    PropertyReport r;
    r.checked = 1;
    bool grammar = sharing::classify_nf(t).has_value();
    bool normal = sharing::is_nf(t);
    if (grammar != normal)
        r.fail(show(t), normal ? "generated by the NF grammar" : "not generated",
               grammar ? "classified" : "unclassified");
    return r;
}

PropertyReport check_subject_reduction(const Term& t, Language lang) {
    PropertyReport r;
    switch (lang) {
    case Language::sharing: {
        // Normal terms have nothing to check; skip typing them.
        auto steps = sharing::redexes(t);
        if (steps.empty()) return r;
        auto p = sharing::principal(t);
        if (!p) return r;
        sharing::TypingEnv env = frozen(p->env);
        Type a = freeze_metas(p->type);
        for (auto& s : steps) {
            ++r.checked;
            auto input = [&] { return show(t) + " -" + sharing::rule_name(s.rule) + "-> " + show(s.reduct); };
            try {
                Type b = sharing::typecheck(env, s.reduct).type;
                if (!instance_of(b, a))
                    r.fail(input(), print_type(a, TypeSyntax::sharing), print_type(b, TypeSyntax::sharing));
            } catch (const TypeError& e) {
                r.fail(input(), print_type(a, TypeSyntax::sharing), e.what());
            }
        }
        break;
    }
    case Language::lsc: {
        auto p = lsc::principal(t);
        if (!p) return r;
        lsc::Env env = frozen_map(p->env);
        Type a = freeze_metas(p->type);
        for (auto c : {lsc::Calculus::cbn, lsc::Calculus::cbv, lsc::Calculus::cbs})
            for (auto& s : lsc::redexes(t, c)) {
                ++r.checked;
                try {
                    lsc::check(env, s.reduct, a);
                } catch (const TypeError& e) {
                    r.fail(show(t) + " -" + lsc::rule_name(s.rule) + "-> " + show(s.reduct),
                           print_type(a, TypeSyntax::simple), e.what());
                }
            }
        break;
    }
    case Language::bang: {
        auto steps = bang::redexes(t, false);
        if (steps.empty()) return r;
        auto p = bang::principal(t);
        if (!p) return r;
        bang::Env env = frozen_map(p->env);
        Type a = freeze_metas(p->type);
        for (auto& s : steps) {
            ++r.checked;
            try {
                bang::check(env, s.reduct, a);
            } catch (const TypeError& e) {
                r.fail(show(t) + " -" + bang::rule_name(s.rule) + "-> " + show(s.reduct),
                       print_type(a, TypeSyntax::bang), e.what());
            }
        }
        break;
    }
    }
    return r;
}

PropertyReport check_flatten_bisimulation(const Term& t) {
    PropertyReport r;
    std::vector<Term> cls = sharing::flatten_class(t);
    if (cls.size() == 1) return r;
    auto steps = sharing::redexes(t);
    for (std::size_t i = 1; i < cls.size(); ++i) {
        auto other = sharing::redexes(cls[i]);
        for (auto& s : steps) {
            ++r.checked;
            bool ok = false;
            for (auto& o : other)
                if (!ok && sharing::equiv_flatten(s.reduct, o.reduct)) ok = true;
            if (!ok)
                r.fail(show(t) + " == " + show(cls[i]),
                       "a step matching " + std::string(sharing::rule_name(s.rule)) + " to " + show(s.reduct), "none");
        }
    }
    return r;
}

PropertyReport check_gc_postponement(const Term& t, const Stepper& step, const std::string& gc_rule) {
    PropertyReport r;
    Stepper gc_only = only_rule(step, gc_rule);
    auto first = step(t);
    for (auto& [rule, s] : first) {
        if (rule != gc_rule) continue;
        for (auto& [rule2, u] : step(s)) {
            if (rule2 == gc_rule) continue;
            ++r.checked;
            bool ok = false;
            for (auto& [rule3, s2] : first) {
                if (ok || rule3 != rule2) continue;
                ReductionGraph g = reachable_set(s2, gc_only);
                ok = g.find(u) < g.nodes.size();
            }
            if (!ok)
                r.fail(show(t) + " -" + gc_rule + "-> " + show(s) + " -" + rule2 + "-> " + show(u),
                       rule2 + " then " + gc_rule + "*", "no closing diagram");
        }
    }
    return r;
}

PropertyReport check_sn_simulation(const Term& t, std::size_t max_lsc_steps) {
    PropertyReport r;
    if (!sharing::principal(t)) return r;
    Term lt = sharing::to_lsc(t);
    Stepper lsc_i = only_rule(lsc_stepper(lsc::Calculus::cbn), "gc", false);
    Stepper fuse = [](const Term& s) {
        std::vector<std::pair<std::string, Term>> out;
        for (auto& f : lsc::fusion_steps(s)) out.emplace_back("fuse", std::move(f));
        return out;
    };
    ReductionGraph g = reachable_set(lt, lsc_i, Caps{10000, max_lsc_steps});
    for (auto& s : sharing::redexes(t)) {
        if (s.rule == sharing::Rule::sgc) continue;
        ++r.checked;
        Term target = sharing::to_lsc(s.reduct);
        bool ok = false;
        for (std::size_t i = 1; i < g.nodes.size() && !ok; ++i) {
            if (alpha_eq(g.nodes[i], target)) {
                ok = true;
                break;
            }
            if (g.nodes[i].size() < target.size()) continue;  // fusion never grows a term
            ReductionGraph f = reachable_set(g.nodes[i], fuse);
            ok = f.find(target) < f.nodes.size();
        }
        if (!ok)
            r.fail(show(t) + " -" + sharing::rule_name(s.rule) + "-> " + show(s.reduct),
                   "lsc steps then fusion from " + show(lt) + " to " + show(target), "not reached");
    }
    return r;
}

PropertyReport check_weak_containment_lsc(const Term& t, lsc::Calculus c) {
    PropertyReport r;
    std::vector<Term> full;
    for (auto& s : lsc::redexes(t, c)) full.push_back(s.reduct);
    for (auto& ws : lsc::weak_eval_steps(t, c)) {
        ++r.checked;
        std::string input = show(t) + " -" + lsc::to_string(ws.name) + "-> " + show(ws.result);
        if (!alpha_member(full, ws.result)) r.fail(input, "an ordinary step", "none");
        if (c == lsc::Calculus::cbn) {
            const Term* cur = &t;
            for (auto i : ws.position) {
                if (cur->kind() == Kind::abs) {
                    r.fail(input, "redex outside every abstraction", "under a lambda");
                    break;
                }
                cur = &cur->at(i);
            }
        }
    }
    return r;
}

PropertyReport check_weak_containment_sharing(const Term& t) {
    PropertyReport r;
    std::vector<Term> full;
    for (auto& s : sharing::redexes(t)) full.push_back(s.reduct);
    for (auto& ws : sharing::weak_eval(t)) {
        ++r.checked;
        if (!alpha_member(full, ws.result))
            r.fail(show(t) + " -" + sharing::to_string(ws.name) + "-> " + show(ws.result), "an ordinary step", "none");
    }
    return r;
}

PropertyReport check_bang_mutual_simulation(const Term& t) {
    PropertyReport r;
    Term s = bang::canonical_unfold(t);
    std::vector<Term> s1;
    for (auto& st : bang::redexes(s, true)) s1.push_back(st.reduct);
    auto full = bang::redexes(t, false);

    for (auto& st : full) {
        ++r.checked;
        bool ok = false;
        for (const Term& x : s1) ok = ok || bang::der_unfold(st.reduct, x);
        if (!ok && st.rule == bang::Rule::gcB) {
            // gc! may take any number of simplified steps; two suffice here
            ok = bang::der_unfold(st.reduct, s);
            for (const Term& x : s1) {
                if (ok) break;
                for (auto& st2 : bang::redexes(x, true)) ok = ok || bang::der_unfold(st.reduct, st2.reduct);
            }
        }
        if (!ok)
            r.fail(show(t) + " -" + bang::rule_name(st.rule) + "-> " + show(st.reduct),
                   "simplified steps from " + show(s), "no unfolding of the reduct");
    }
    for (const Term& x : s1) {
        ++r.checked;
        bool ok = bang::der_unfold(t, x);
        for (auto& st : full) ok = ok || bang::der_unfold(st.reduct, x);
        if (!ok) r.fail(show(s) + " -> " + show(x), "at most one full step from " + show(t), "none");
    }
    return r;
}

PropertyReport check_logical_soundness(const Term& t) {
    PropertyReport r;
    auto p = sharing::principal(t);
    if (!p) return r;
    ++r.checked;
    const sharing::TypingNode& root = p->derivation;
    mscll::Derivation d = mscll::compile_typing(root);
    auto errors = mscll::check_derivation(d);
    mscll::Sequent want = mscll::soundness_sequent(root.delta, root.gamma, root.type);
    if (!errors.empty())
        r.fail(show(t), "a valid derivation", mscll::print_error(errors.front()));
    else if (!(d.conclusion == want))
        r.fail(show(t), mscll::print_sequent(want), mscll::print_sequent(d.conclusion));
    return r;
}

void each_formula(const std::vector<std::string>& atoms, int full_depth, int max_depth,
                  const std::function<void(const mscll::Formula&)>& f) {
    using mscll::FKind;
    using mscll::Formula;
    std::vector<Formula> atomic;
    for (const auto& a : atoms) {
        atomic.push_back(Formula::atom(a));
        atomic.push_back(Formula::natom(a));
    }
    const FKind unary[] = {FKind::ofcourse, FKind::whynot, FKind::grant, FKind::demand};
    const FKind binary[] = {FKind::tensor, FKind::par};

    // All formulas of depth <= d, materialized (small depths only).
    std::vector<Formula> level = atomic;
    for (const Formula& a : level) f(a);
    for (int d = 1; d <= full_depth; ++d) {
        std::vector<Formula> next = atomic;
        std::vector<Formula> fresh;
        for (const Formula& a : level)
            for (FKind k : unary) fresh.push_back(Formula::unary(k, a));
        for (const Formula& a : level)
            for (const Formula& b : level)
                if (std::max(a.depth(), b.depth()) + 1 == static_cast<std::uint32_t>(d))
                    for (FKind k : binary) fresh.push_back(Formula::binary(k, a, b));
        for (const Formula& a : fresh) {
            if (a.depth() != static_cast<std::uint32_t>(d)) continue;
            f(a);
        }
        for (const Formula& a : level)
            if (!a.is_atomic()) next.push_back(a);
        for (const Formula& a : fresh)
            if (a.depth() == static_cast<std::uint32_t>(d)) next.push_back(a);
        level = std::move(next);
    }

    // Comb-shaped formulas, streamed.
    std::function<void(int, const std::function<void(const Formula&)>&)> comb =
        [&](int d, const std::function<void(const Formula&)>& out) {
            for (const Formula& a : atomic) out(a);
            if (d == 0) return;
            comb(d - 1, [&](const Formula& c) {
                for (FKind k : unary) out(Formula::unary(k, c));
                for (FKind k : binary)
                    for (const Formula& a : atomic) {
                        out(Formula::binary(k, a, c));
                        if (!c.is_atomic()) out(Formula::binary(k, c, a));
                    }
            });
        };
    comb(max_depth, [&](const Formula& a) {
        if (static_cast<int>(a.depth()) > full_depth) f(a);
    });
}

}  // namespace sharecalc::oracle
