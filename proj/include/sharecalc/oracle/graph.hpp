#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharecalc/lsc/reduction.hpp"
#include "sharecalc/syntax/term.hpp"

namespace sharecalc::oracle {

// One-step successors labelled by rule name, in the calculus' redex order.
using Stepper = std::function<std::vector<std::pair<std::string, Term>>(const Term&)>;

Stepper sharing_stepper();
Stepper lsc_stepper(lsc::Calculus c);
Stepper bang_stepper(bool simplified);
// Weak evaluation, labelled by rulename.
Stepper weak_sharing_stepper();
Stepper weak_lsc_stepper(lsc::Calculus c);
// Keeps the successors whose label is (or, with keep = false, is not) `rule`.
Stepper only_rule(Stepper step, std::string rule, bool keep = true);

// max_depth bounds the length of the reduction sequences explored: with a
// finite depth cap, a cycle or a longer path also counts as truncation.
struct Caps {
    std::size_t max_nodes = 10000;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
};

struct Edge {
    std::string rule;
    std::size_t from, to;
};

// Nodes in BFS discovery order, the root first.  Node terms are
// α-canonical; edges are distinct triples.  `truncated` is set when a cap
// stopped the expansion, in which case `expanded` tells which nodes had
// their successors computed.
struct ReductionGraph {
    std::vector<Term> nodes;
    std::vector<std::size_t> depth;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> succ;  // edge indices per node
    std::vector<bool> expanded;
    bool truncated = false;

    std::size_t find(const Term& t) const;  // nodes.size() when absent
    bool terminal(std::size_t n) const { return expanded[n] && succ[n].empty(); }
};

ReductionGraph reachable_set(const Term& t, const Stepper& step, const Caps& caps = {});

// Length of the longest path from the root, or nothing when a cycle is
// reachable.
std::optional<std::size_t> longest_path(const ReductionGraph& g);

// Binders renamed in pre-order to the smallest indexed variant of a fixed
// base name per sort (w for plain and unrestricted, 'c for linear) that
// avoids the free variables.  α-equal terms get identical representatives.
Term alpha_canonical(const Term& t);

}  // namespace sharecalc::oracle
