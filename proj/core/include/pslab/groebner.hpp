#pragma once

#include <optional>
#include <vector>

#include "pslab/poly.hpp"

namespace pslab {

/// Ceilings for Buchberger runs. Exceeding one raises ResourceLimitError;
/// partial state is discarded.
struct GroebnerLimits {
    size_t max_basis = 20000;
    size_t max_pairs = 4000000;
    size_t max_reduction_steps = 200000000;
};

/// Reduced Groebner basis: monic elements, no leading term divides another,
/// every element fully reduced against the rest, sorted ascending by leading
/// monomial. Unique for a fixed order, independent of generator ordering.
class ReducedGB {
public:
    ReducedGB(MonomialOrder order, std::vector<Poly> elems);

    const MonomialOrder& order() const { return order_; }
    const std::vector<Poly>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    bool is_zero_ideal() const { return elems_.empty(); }
    bool contains_one() const;

    const std::vector<Monomial>& leading_monomials() const { return leads_; }

    /// Unique remainder of f modulo the basis (fully reduced, tail included).
    Poly normal_form(Poly f) const;
    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

private:
    MonomialOrder order_;
    std::vector<Poly> elems_;
    std::vector<Monomial> leads_;
};

/// Buchberger completion with the normal selection strategy (minimal lcm
/// degree first) and Gebauer-Moeller pair elimination. Deterministic for a
/// fixed order and input list.
ReducedGB buchberger(std::vector<Poly> generators, const MonomialOrder& order,
                     const GroebnerLimits& limits = {});

/// Runs completion but stops early once a unit enters the basis. Returns
/// true iff 1 lies in the ideal. Used for radical membership / cover checks.
bool ideal_contains_one(std::vector<Poly> generators, const MonomialOrder& order,
                        const GroebnerLimits& limits = {});

} // namespace pslab
