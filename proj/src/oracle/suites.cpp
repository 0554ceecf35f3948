#include "sharecalc/oracle/suites.hpp"

#include "sharecalc/syntax/text.hpp"

namespace sharecalc::oracle {

using translations::TranslationKind;

namespace {

constexpr TranslationKind kKinds[] = {TranslationKind::cbn, TranslationKind::cbv, TranslationKind::cbs,
                                      TranslationKind::bang};

std::string with_kind(const std::string& id, TranslationKind k) { return id + "/" + translations::kind_name(k); }

Language source(TranslationKind k) { return translations::source_language(k); }

std::vector<SuiteEntry> per_kind(const std::string& id, std::uint32_t size, bool bang,
                                 PropertyReport (*check)(const Term&, TranslationKind)) {
    std::vector<SuiteEntry> out;
    for (TranslationKind k : kKinds) {
        if (k == TranslationKind::bang && !bang) continue;
        out.push_back({with_kind(id, k), source(k), true, size, [k, check](const Term& t) { return check(t, k); }});
    }
    return out;
}

std::vector<SuiteEntry> simulation(const std::string& id, std::uint32_t size, SimulationParts parts, bool bang) {
    std::vector<SuiteEntry> out;
    for (TranslationKind k : kKinds) {
        if (k == TranslationKind::bang && !bang) continue;
        out.push_back({with_kind(id, k), source(k), true, size,
                       [k, parts](const Term& t) { return check_simulation(t, k, Caps{}, parts); }});
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"left-inverse", "simulation", "inverse", "nf-preservation", "nf-adequacy", "subject-reduction",
            "confluence", "bisimulation", "postponement", "sn", "sn-simulation", "weak", "bang", "logic"};
}

std::vector<SuiteEntry> suite_entries(const std::string& suite) {
    if (suite == "left-inverse") return per_kind("left-inverse", 8, true, check_left_inverse);
    if (suite == "nf-preservation") return per_kind("nf-preservation", 8, true, check_nf_preservation);
    if (suite == "simulation") return simulation("simulation", 7, {true, false, false, false}, true);
    if (suite == "inverse") return simulation("inverse", 6, {false, false, true, false}, true);
    if (suite == "weak") {
        auto out = simulation("weak-simulation", 7, {false, true, false, true}, false);
        for (auto c : {lsc::Calculus::cbn, lsc::Calculus::cbv, lsc::Calculus::cbs})
            out.push_back({std::string("weak-containment/") + lsc::calculus_name(c), Language::lsc, false, 7,
                           [c](const Term& t) { return check_weak_containment_lsc(t, c); }});
        out.push_back({"weak-containment/sharing", Language::sharing, false, 7, check_weak_containment_sharing});
        return out;
    }
    if (suite == "nf-adequacy") return {{"nf-adequacy", Language::sharing, false, 9, check_nf_adequacy}};
    if (suite == "subject-reduction") {
        std::vector<SuiteEntry> out;
        for (Language l : {Language::sharing, Language::lsc, Language::bang})
            out.push_back({std::string("subject-reduction/") + language_name(l), l, false, 8,
                           [l](const Term& t) { return check_subject_reduction(t, l); }});
        return out;
    }
    if (suite == "confluence")
        return {{"confluence", Language::sharing, false, 8,
                 [](const Term& t) { return check_confluence_mod_flatten(t); }}};
    if (suite == "bisimulation")
        return {{"flatten-bisimulation", Language::sharing, false, 8, check_flatten_bisimulation}};
    if (suite == "postponement")
        return {{"gc-postponement/sharing", Language::sharing, false, 8,
                 [](const Term& t) { return check_gc_postponement(t, sharing_stepper(), "!gc"); }},
                {"gc-postponement/cbn", Language::lsc, false, 7,
                 [](const Term& t) { return check_gc_postponement(t, lsc_stepper(lsc::Calculus::cbn), "gc"); }}};
    if (suite == "sn") return {{"sn", Language::sharing, false, 8, [](const Term& t) { return check_typed_sn(t); }}};
    if (suite == "sn-simulation")
        return {{"sn-simulation", Language::sharing, false, 7, [](const Term& t) { return check_sn_simulation(t); }}};
    if (suite == "bang") return {{"bang-simulation", Language::bang, false, 7, check_bang_mutual_simulation}};
    if (suite == "logic") return {{"logical-soundness", Language::sharing, false, 7, check_logical_soundness}};
    throw UnknownSuite("unknown suite: " + suite);
}

PropertyReport run_entry(const SuiteEntry& e, std::uint32_t size) {
    Enumerator en(e.lang, e.simplified);
    return run_exhaustive(e.id, en, size, e.check);
}

}  // namespace sharecalc::oracle
