#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "sharecalc/syntax/term.hpp"

namespace sharecalc::oracle {

// Free variables the enumerator draws from: x, y, z for LSC and Bang,
// 'a, 'b, u, v for sharing terms.
std::vector<VarName> default_pool(Language lang);

// Every α-distinct term of a given node count, each exactly once, in a fixed
// order.  Binders are named by their depth (w, w1, ... and 'c, 'c1, ...), so
// two outputs are never α-equal.  Bang terms include der unless `simplified`.
class Enumerator {
public:
    using Sink = std::function<void(const Term&)>;

    explicit Enumerator(Language lang, bool simplified = false);
    Enumerator(Language lang, std::vector<VarName> pool, bool simplified = false);

    void each(std::uint32_t size, const Sink& f);
    std::vector<Term> all(std::uint32_t size);
    std::uint64_t count(std::uint32_t size);

    Language language() const { return lang_; }
    const std::vector<VarName>& pool() const { return pool_; }

private:
    // Bound variables in scope: plain (or unrestricted) and linear binders.
    struct Scope {
        std::uint32_t outer = 0;
        std::uint32_t linear = 0;
        auto key() const { return std::tie(outer, linear); }
    };

    void gen(std::uint32_t size, Scope sc, const Sink& f);
    void build(std::uint32_t size, Scope sc, const Sink& f);
    const std::vector<Term>& cached(std::uint32_t size, Scope sc);
    VarName outer_binder(std::uint32_t depth) const;
    VarName linear_binder(std::uint32_t depth) const;

    Language lang_;
    std::vector<VarName> pool_;
    bool simplified_;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<Term>> cache_;
};

}  // namespace sharecalc::oracle
