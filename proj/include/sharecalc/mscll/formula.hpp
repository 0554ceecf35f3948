#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharecalc/syntax/type.hpp"

namespace sharecalc::mscll {

// Formulas.  Printed in ASCII:
//   a  a^  A * B  A | B  !A  ?A  ~A (grant)  @A (demand)
enum class FKind : std::uint8_t { atom, natom, tensor, par, ofcourse, whynot, grant, demand };

class Formula {
public:
    Formula() = default;
    static Formula atom(std::string name);
    static Formula natom(std::string name);
    static Formula tensor(Formula a, Formula b);
    static Formula par(Formula a, Formula b);
    static Formula ofcourse(Formula a);
    static Formula whynot(Formula a);
    static Formula grant(Formula a);
    static Formula demand(Formula a);
    static Formula unary(FKind k, Formula a);
    static Formula binary(FKind k, Formula a, Formula b);

    explicit operator bool() const { return node_ != nullptr; }
    FKind kind() const;
    const std::string& name() const;
    const Formula& left() const;
    const Formula& right() const;
    const Formula& child() const { return left(); }
    bool is_atomic() const { return kind() == FKind::atom || kind() == FKind::natom; }
    bool is_unary() const;
    std::uint32_t depth() const;

    friend bool operator==(const Formula& a, const Formula& b);
    // Total order used to keep sequents sorted.
    friend int compare(const Formula& a, const Formula& b);
    friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

    struct Node;

private:
    friend Formula make_formula(FKind k, std::string name, Formula a, Formula b);
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    FKind kind;
    std::string name;
    Formula a, b;
    std::uint32_t depth = 0;
};

inline FKind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::left() const { return node_->a; }
inline const Formula& Formula::right() const { return node_->b; }
inline std::uint32_t Formula::depth() const { return node_->depth; }

Formula neg(const Formula& a);
std::string print_formula(const Formula& a);
Formula parse_formula(const std::string& text);

// The conservativity embedding: ! becomes !~ and ? becomes ?@.  Throws
// std::invalid_argument on a grant or demand, which are not MELL.
Formula embed_mell(const Formula& a);

// Sharing types to formulas: A -o B is A^ | B, ~ and ! are kept.  Metas map
// to atoms named as printed (A, B, ...).
Formula type_to_formula(const Type& a);

// Sequents are multisets, kept as sorted vectors.
class Sequent {
public:
    Sequent() = default;
    Sequent(std::vector<Formula> fs);
    const std::vector<Formula>& formulas() const { return fs_; }
    std::size_t size() const { return fs_.size(); }
    bool contains(const Formula& f) const;
    Sequent plus(const Formula& f) const;
    Sequent plus(const Sequent& o) const;
    // Removes one occurrence; nullopt-like empty flag through `ok`.
    Sequent minus(const Formula& f, bool* ok = nullptr) const;
    friend bool operator==(const Sequent&, const Sequent&) = default;

private:
    std::vector<Formula> fs_;
};

std::string print_sequent(const Sequent& s);

}  // namespace sharecalc::mscll
