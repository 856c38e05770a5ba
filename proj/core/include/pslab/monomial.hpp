#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pslab/errors.hpp"

namespace pslab {

using exp_t = std::uint16_t;

/// Dense exponent vector with cached total degree and a support bitmask used
/// as a fast divisibility prefilter. Rings here stay below 64 variables.
struct Monomial {
    std::vector<exp_t> e;
    int deg = 0;
    std::uint64_t mask = 0;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<exp_t> exps);

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_unit() const { return deg == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    static Monomial variable(int nvars, int v, exp_t k = 1);

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires divides(o) checked by the caller in hot paths.
    Monomial divide_into(const Monomial& o) const;  // o / *this
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const { return (mask & o.mask) == 0 || gcd(o).is_unit(); }

    std::uint64_t hash() const;
};

/// Monomial order: a sequence of blocks compared left to right, each block
/// graded (total degree first) with deg-lex or deg-rev-lex tie-breaking on
/// the block's variables, which are listed largest first. One block gives the
/// usual global orders; two blocks give an elimination order for the first
/// block's variables.
struct MonomialOrder {
    enum class Kind { DegLex, DegRevLex };
    struct Block {
        Kind kind;
        std::vector<int> vars;  // largest first
    };
    std::vector<Block> blocks;
    int nvars = 0;

    static MonomialOrder degrevlex(std::vector<int> vars_largest_first);
    static MonomialOrder deglex(std::vector<int> vars_largest_first);
    /// Elimination of `front` (compared first), inner orders deg-rev-lex.
    static MonomialOrder elimination(std::vector<int> front, std::vector<int> back);

    bool degree_compatible() const { return blocks.size() == 1; }

    int compare(const Monomial& a, const Monomial& b) const;  // <0, 0, >0
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Canonical text form, part of cache keys.
    std::string descriptor() const;
};

/// Variable-name table for a polynomial ring over Q.
struct PolyRing {
    std::vector<std::string> names;

    PolyRing() = default;
    explicit PolyRing(std::vector<std::string> n) : names(std::move(n)) {
        if (names.size() > 64) throw InputError("polynomial rings are limited to 64 variables");
    }
    int nvars() const { return static_cast<int>(names.size()); }
    const std::string& name(int v) const { return names.at(v); }

    PolyRing extended(const std::string& extra) const {
        std::vector<std::string> n = names;
        n.push_back(extra);
        return PolyRing(std::move(n));
    }
};

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

} // namespace pslab
