#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "sharecalc/syntax/var.hpp"

namespace sharecalc {

// Which object language a term belongs to.
enum class Language : std::uint8_t { lsc, sharing, bang };

enum class Kind : std::uint8_t { var, abs, app, es, grant, request, prom, der, hole };

// Immutable term shared by the three languages.  Children are reference
// counted, so copies are cheap and subterms are shared freely.
//
//   var      x, 'a, u
//   abs      \x. body
//   app      fn arg
//   es       body[x := arg]
//   grant    ~t          (sharing only)
//   request  open(t)     (sharing only)
//   prom     !t          (sharing, bang)
//   der      der(t)      (bang only)
//   hole     #           (contexts only)
class Term {
public:
    struct Node;

    Term() = default;

    static Term var(VarName x);
    static Term abs(VarName x, Term body);
    static Term app(Term fn, Term arg);
    static Term es(Term body, VarName x, Term arg);
    static Term grant(Term t);
    static Term request(Term t);
    static Term prom(Term t);
    static Term der(Term t);
    static Term hole();
    static Term unary(Kind k, Term t);

    explicit operator bool() const { return node_ != nullptr; }

    Kind kind() const;
    // Variable of a var node, binder of abs and es nodes.
    const VarName& name() const;
    // abs, es: the scope of the binder.
    const Term& body() const;
    const Term& fn() const;
    // app and es: the argument.
    const Term& arg() const;
    // grant, request, prom, der.
    const Term& child() const;
    // Positional access: 0 is body/fn/child, 1 is arg.
    const Term& at(int i) const;
    int arity() const;

    std::uint32_t size() const;
    std::size_t hash() const;
    const VarSet& fv() const;
    bool has_hole() const;

    bool is_free(const VarName& x) const { return contains(fv(), x); }
    bool is_unary() const;
    bool is_binder() const { return kind() == Kind::abs || kind() == Kind::es; }

    bool same_node(const Term& o) const { return node_ == o.node_; }

    // Exact structural equality (names included).
    friend bool operator==(const Term& a, const Term& b);

private:
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    Kind kind;
    VarName var;
    Term c0, c1;
    std::uint32_t size;
    bool hole;
    std::size_t hash;
    VarSet fv;
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

// Rebuilds `t` with new children, keeping its kind and name.
Term with_children(const Term& t, const Term& c0, const Term& c1 = Term());

const char* kind_name(Kind k);

}  // namespace sharecalc
