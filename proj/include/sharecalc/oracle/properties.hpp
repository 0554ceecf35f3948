#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sharecalc/lsc/reduction.hpp"
#include "sharecalc/mscll/formula.hpp"
#include "sharecalc/oracle/enumerate.hpp"
#include "sharecalc/oracle/graph.hpp"
#include "sharecalc/translations/translate.hpp"

namespace sharecalc::oracle {

struct Failure {
    std::string input, expected, actual;
};

// Outcome of a property over one or many instances.  Only the first few
// failures are kept, in instance order, so the first one is a smallest
// counterexample when instances come from the enumerator.
struct PropertyReport {
    static constexpr std::size_t kept = 8;

    std::string id;
    std::uint64_t checked = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t failure_count = 0;
    std::vector<Failure> failures;
    double seconds = 0;

    bool ok() const { return failure_count == 0 && inconclusive == 0; }
    void fail(std::string input, std::string expected, std::string actual);
    void merge(const PropertyReport& r);
};

// "<id>: <checked> checked, <n> failed, <k> inconclusive (<secs>s)" and the
// kept failures below it.
std::string report_text(const PropertyReport& r, bool timing = true);

using Check = std::function<PropertyReport(const Term&)>;

// Applies `check` to every enumerated term of size 1..max_size, in
// enumeration order, and times the run.
PropertyReport run_exhaustive(const std::string& id, Enumerator& e, std::uint32_t max_size, const Check& check);

// Every bottom component of the reduction graph of a sharing term lies in one
// flattening class.  A truncated graph is inconclusive.
PropertyReport check_confluence_mod_flatten(const Term& t, const Caps& caps = {});

// Length of the longest →! reduction from t, or nothing when some reduction
// is longer than `cap` (or loops, or the graph cap is hit first).
std::optional<std::size_t> check_sn(const Term& t, std::size_t cap = 5000, const Caps& caps = {});

// Typable terms only: check_sn within the cap.
PropertyReport check_typed_sn(const Term& t, std::size_t cap = 5000);

// Parts of the simulation check for a source term (LSC, or simplified Bang
// for the bang kind):
//   forward  every step is matched by the translated rule sequence
//   weak     every weak evaluation step (and sigma / iota judgment) likewise
//   inverse  the →! graph of the translation stays in the image and every
//            edge inverts to at most one source step (CBV: →V or garbage
//            introduction)
//   weak_inverse  the same for weak evaluation, with inverse rulenames
struct SimulationParts {
    bool forward = true;
    bool weak = true;
    bool inverse = true;
    bool weak_inverse = true;
};
PropertyReport check_simulation(const Term& t, translations::TranslationKind k, const Caps& caps = {},
                                SimulationParts parts = {});

lsc::Calculus source_calculus(translations::TranslationKind k);

PropertyReport check_left_inverse(const Term& t, translations::TranslationKind k);
PropertyReport check_nf_preservation(const Term& t, translations::TranslationKind k);
// classify_nf(t) defined iff t has no →! redex.
PropertyReport check_nf_adequacy(const Term& t);

// Every step from a typable term keeps the principal typing (metas frozen
// to atoms).  LSC steps range over all six rules; Bang steps include d!.
PropertyReport check_subject_reduction(const Term& t, Language lang);

// Each step of t is matched, up to ≡, by a step of every member of its
// flattening class.
PropertyReport check_flatten_bisimulation(const Term& t);

// Every peak t →gc s →r u with r another rule closes as t →r s' →gc* u.
PropertyReport check_gc_postponement(const Term& t, const Stepper& step, const std::string& gc_rule);

// For each !db, !ls or !req step t → s of a typable term, [[t]] reaches
// [[s]] by at least one LSC step other than gc followed by fusion.
PropertyReport check_sn_simulation(const Term& t, std::size_t max_lsc_steps = 3);

// Weak steps are ordinary steps.  For CBN also: no step under a lambda.
PropertyReport check_weak_containment_lsc(const Term& t, lsc::Calculus c);
PropertyReport check_weak_containment_sharing(const Term& t);

// Full and simplified Bang reduction simulate each other through the
// dereliction unfolding of t.
PropertyReport check_bang_mutual_simulation(const Term& t);

// compile_typing of the principal derivation passes the checker and
// concludes the soundness sequent.  Untypable terms are skipped.
PropertyReport check_logical_soundness(const Term& t);

// Formulas over the given atoms and their negations: every formula of depth
// at most `full_depth`, then every formula of depth at most `max_depth` in
// which each binary connective has an atomic side.  Each formula is visited
// once.
void each_formula(const std::vector<std::string>& atoms, int full_depth, int max_depth,
                  const std::function<void(const mscll::Formula&)>& f);

}  // namespace sharecalc::oracle
