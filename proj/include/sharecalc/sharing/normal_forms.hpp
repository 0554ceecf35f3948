#pragma once

#include <optional>

#include "sharecalc/syntax/term.hpp"

namespace sharecalc::sharing {

enum class NfTag : std::uint8_t { var, lam, app, req, grant, bang, banggrant };

const char* tag_name(NfTag t);

// Tag derived by the inductive normal-form grammar, or none when the term is
// not generated by it.
std::optional<NfTag> classify_nf(const Term& t);

}  // namespace sharecalc::sharing
