#pragma once

#include <vector>

#include "pslab/groebner.hpp"

namespace pslab {

/// J restricted to the subring without `block` variables: computed with a
/// block elimination order, returned as generators in the original ring.
std::vector<Poly> eliminate(const std::vector<Poly>& gens, const PolyRing& ring,
                            const std::vector<int>& block, const GroebnerLimits& limits = {});

std::vector<Poly> intersect(const std::vector<Poly>& a, const std::vector<Poly>& b,
                            const PolyRing& ring, const GroebnerLimits& limits = {});

/// (J : f) = {g : g f in J}, f != 0.
std::vector<Poly> ideal_quotient(const std::vector<Poly>& gens, const Poly& f,
                                 const PolyRing& ring, const GroebnerLimits& limits = {});

/// (J : f^infinity) via elimination of t from J + <1 - t f>.
std::vector<Poly> saturation(const std::vector<Poly>& gens, const Poly& f, const PolyRing& ring,
                             const GroebnerLimits& limits = {});

/// Fixed point of iterated ideal_quotient; cross-check route for saturation.
std::vector<Poly> saturation_iterated(const std::vector<Poly>& gens, const Poly& f,
                                      const PolyRing& ring, const GroebnerLimits& limits = {});

/// f in sqrt(J), decided by 1 in J + <1 - t f>.
bool radical_membership(const Poly& f, const std::vector<Poly>& gens, const PolyRing& ring,
                        const GroebnerLimits& limits = {});

/// Krull dimension of k[active]/in(J): the largest subset T of active_vars
/// such that no leading monomial is supported inside T.
int initial_dim(const ReducedGB& gb, const std::vector<int>& active_vars);

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const PolyRing& ring,
                 const MonomialOrder& order, const GroebnerLimits& limits = {});

/// Default global order for a plain ring: deg-rev-lex with variable 0 largest.
MonomialOrder default_order(const PolyRing& ring);

} // namespace pslab
