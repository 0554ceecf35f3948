#pragma once

#include <vector>

#include "sharecalc/lsc/weak.hpp"
#include "sharecalc/sharing/weak.hpp"
#include "sharecalc/translations/translate.hpp"

namespace sharecalc::translations {

// Source rulename to the sequence of sharing rulenames that simulates it.
// Throws TranslationError for a rulename outside the kind's set (and for
// bang, which has no evaluation system).
std::vector<sharing::Rulename> translate_rulename(const lsc::Rulename& r, TranslationKind k);

// Sharing rulename from an image term back to source rulenames.  A set of
// candidate sequences: only CBV's !ls has two (lsv or garbage introduction).
std::vector<std::vector<lsc::Rulename>> inverse_rulename(const sharing::Rulename& r, TranslationKind k);

}  // namespace sharecalc::translations
