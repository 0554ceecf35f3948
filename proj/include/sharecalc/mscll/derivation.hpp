#pragma once

#include <string>
#include <vector>

#include "sharecalc/mscll/formula.hpp"
#include "sharecalc/sharing/typing.hpp"

namespace sharecalc::mscll {

// Primitive rules only: ?w* and ?c* are expanded by whoever builds a tree.
//   derD is  |- G, @A  over  |- G, ?@A  (never the plain MELL dereliction)
enum class Rule : std::uint8_t { ax, cut, tensor, par, promP, weakW, contrC, derD, grantI, demandI };
const char* rule_name(Rule r);

struct Derivation {
    Rule rule;
    Sequent conclusion;
    std::vector<Derivation> premises;
    // cut: the formula A of the left premise (the right one holds A^).
    Formula cut_formula;
};

struct NodeError {
    std::vector<std::size_t> path;  // premise indices from the root
    Rule rule;
    std::string message;
};

// Every node that does not match its rule; empty means the tree is valid.
std::vector<NodeError> check_derivation(const Derivation& d);
std::string print_error(const NodeError& e);

// Builds a derivation of |- ?@(<Delta>^), <Gamma>^, <A> from a typing
// derivation of Delta; Gamma |- t : A.  Metas are read as atoms.  Throws
// std::invalid_argument when the typing tree is malformed.
Derivation compile_typing(const sharing::TypingNode& n);
// The sequent such a derivation must conclude.
Sequent soundness_sequent(const sharing::Context& delta, const sharing::Context& gamma, const Type& a);

// One line per node, premises indented by two spaces:
//   par |- a^ | a
std::string derivation_text(const Derivation& d);
std::size_t derivation_size(const Derivation& d);

}  // namespace sharecalc::mscll
