#pragma once

#include <string>
#include <vector>

#include "pslab/monomial.hpp"
#include "pslab/rational.hpp"

namespace pslab {

struct Term {
    Monomial m;
    Rational c;
};

/// Sparse polynomial; terms kept strictly descending with respect to the
/// order the polynomial was built with. Orders are passed explicitly;
/// `resort` re-establishes the invariant after an order change.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Term> terms) : terms_(std::move(terms)) {}

    static Poly zero() { return Poly(); }
    static Poly constant(int nvars, const Rational& c);
    static Poly from_term(Monomial m, Rational c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().m; }
    const Rational& lc() const { return terms_.front().c; }
    int degree() const;  // total degree, -1 for zero

    bool is_homogeneous() const;
    bool operator==(const Poly& o) const;

    /// Sorts terms descending by `order` and merges duplicates.
    void resort(const MonomialOrder& order);

    Poly negated() const;
    Poly scaled(const Rational& c) const;
    Poly mul_term(const Monomial& m, const Rational& c) const;

    /// Divides out integer content and the denominator lcm; leading
    /// coefficient made positive. No-op on the zero polynomial.
    void make_primitive();
    void make_monic();

    std::string to_string(const PolyRing& ring) const;

private:
    std::vector<Term> terms_;
};

Poly add(const Poly& a, const Poly& b, const MonomialOrder& order);
Poly sub(const Poly& a, const Poly& b, const MonomialOrder& order);
Poly mul(const Poly& a, const Poly& b, const MonomialOrder& order);
Poly pow(const Poly& a, int k, const MonomialOrder& order);

/// Exact division a / b; throws InvariantError if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b, const MonomialOrder& order);

/// var := 1 (chart dehomogenization). The variable stays in the ring.
Poly substitute_one(const Poly& p, int var);

/// var := value (a polynomial in the same ring not involving var).
Poly substitute(const Poly& p, int var, const Poly& value, const MonomialOrder& order);

/// Ring extension helper: reinterpret p over a ring with extra trailing vars.
Poly lift_to(const Poly& p, int new_nvars);
/// Drops trailing vars (they must not occur in p).
Poly restrict_to(const Poly& p, int new_nvars);

} // namespace pslab
