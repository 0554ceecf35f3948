#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharecalc/syntax/term.hpp"
#include "sharecalc/syntax/type.hpp"

namespace sharecalc::translations {

enum class TranslationKind : std::uint8_t { cbn, cbv, cbs, bang };

const char* kind_name(TranslationKind k);
std::optional<TranslationKind> kind_from_name(const std::string& s);
// Source language of a translation: LSC for cbn/cbv/cbs, Bang for bang.
Language source_language(TranslationKind k);

struct TranslationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Forward translations into sharing terms.  Source variables become
// unrestricted variables of the same name.
//   cbn   x -> open(x)   \x.t -> \'a. t[x := 'a]   t s -> t (!~s)   t[x:=s] -> t[x := !~s]
//   cbv   x -> !x   \x.t -> !~(\'a. t[x := 'a])   t s -> open(u)[u := t] s   t[x:=s] -> t[x := s]
//   cbs   x -> x   \x.t -> ~(\'a. t[x := 'a])   t s -> open(t) (!s)   t[x:=s] -> t[x := !s]
//   bang  x -> open(x)   \x.t as cbn   !t -> !~t   application and ES homomorphic
// The Bang translation rejects der(t).
Term translate(const Term& t, TranslationKind k);
Type translate_type(const Type& a, TranslationKind k);

// Type of the translated judgment for a source term of type A
// (cbv: !~A*, cbs: ~A+, otherwise A translated).
Type translate_judgment_type(const Type& a, TranslationKind k);
// Type of a source variable as recorded in Delta (Bang: x : !A gives A).
Type translate_env_type(const Type& a, TranslationKind k);

// Membership in the reduction-closed image grammar, with the production used
// at each node in pre-order.
struct ImageMembership {
    TranslationKind kind;
    std::vector<std::string> witness;
};
std::optional<ImageMembership> in_image(const Term& t, TranslationKind k);

// Inverse translation; throws TranslationError on terms outside the image.
Term inverse(const Term& t, TranslationKind k);

}  // namespace sharecalc::translations
