#include "pslab/ideal_ops.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "pslab/errors.hpp"

namespace pslab {

namespace {

std::vector<int> all_vars_except(int nvars, const std::vector<int>& block) {
    std::vector<char> drop(nvars, 0);
    for (int v : block) drop[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < nvars; ++v)
        if (!drop[v]) rest.push_back(v);
    return rest;
}

bool involves(const Poly& p, const std::vector<int>& vars) {
    std::uint64_t m = 0;
    for (int v : vars) m |= (std::uint64_t{1} << v);
    for (const Term& t : p.terms())
        if (t.m.mask & m) return true;
    return false;
}

} // namespace

MonomialOrder default_order(const PolyRing& ring) {
    std::vector<int> vars(ring.nvars());
    std::iota(vars.begin(), vars.end(), 0);
    return MonomialOrder::degrevlex(std::move(vars));
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, const PolyRing& ring,
                            const std::vector<int>& block, const GroebnerLimits& limits) {
    if (block.empty()) return gens;
    std::vector<int> rest = all_vars_except(ring.nvars(), block);
    MonomialOrder order = MonomialOrder::elimination(block, rest);
    ReducedGB gb = buchberger(gens, order, limits);
    std::vector<Poly> out;
    for (const Poly& p : gb.elements())
        if (!involves(p, block)) out.push_back(p);
    return out;
}

std::vector<Poly> intersect(const std::vector<Poly>& a, const std::vector<Poly>& b,
                            const PolyRing& ring, const GroebnerLimits& limits) {
    // t*a_i and (1-t)*b_j, then eliminate t.
    const int n = ring.nvars();
    PolyRing ext = ring.extended("@t");
    Poly t = Poly::from_term(Monomial::variable(n + 1, n), Rational(1));
    Poly one_minus_t = Poly(std::vector<Term>{{Monomial(n + 1), Rational(1)}});
    MonomialOrder ext_order = default_order(ext);
    one_minus_t = sub(one_minus_t, t, ext_order);
    std::vector<Poly> gens;
    for (const Poly& p : a) gens.push_back(mul(lift_to(p, n + 1), t, ext_order));
    for (const Poly& p : b) gens.push_back(mul(lift_to(p, n + 1), one_minus_t, ext_order));
    std::vector<Poly> elim = eliminate(gens, ext, {n}, limits);
    std::vector<Poly> out;
    for (const Poly& p : elim) out.push_back(restrict_to(p, n));
    return out;
}

std::vector<Poly> ideal_quotient(const std::vector<Poly>& gens, const Poly& f,
                                 const PolyRing& ring, const GroebnerLimits& limits) {
    if (f.is_zero()) throw InputError("ideal_quotient: divisor is zero");
    std::vector<Poly> meet = intersect(gens, {f}, ring, limits);
    MonomialOrder order = default_order(ring);
    std::vector<Poly> out;
    for (Poly p : meet) {
        p.resort(order);
        Poly q = exact_divide(p, f, order);
        q.make_primitive();
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<Poly> saturation(const std::vector<Poly>& gens, const Poly& f, const PolyRing& ring,
                             const GroebnerLimits& limits) {
    if (f.is_zero()) throw InputError("saturation: divisor is zero");
    const int n = ring.nvars();
    PolyRing ext = ring.extended("@t");
    MonomialOrder ext_order = default_order(ext);
    Poly t = Poly::from_term(Monomial::variable(n + 1, n), Rational(1));
    Poly rab = sub(Poly::constant(n + 1, Rational(1)), mul(t, lift_to(f, n + 1), ext_order),
                   ext_order);
    std::vector<Poly> work;
    for (const Poly& p : gens) work.push_back(lift_to(p, n + 1));
    work.push_back(std::move(rab));
    std::vector<Poly> elim = eliminate(work, ext, {n}, limits);
    std::vector<Poly> out;
    for (const Poly& p : elim) out.push_back(restrict_to(p, n));
    return out;
}

std::vector<Poly> saturation_iterated(const std::vector<Poly>& gens, const Poly& f,
                                      const PolyRing& ring, const GroebnerLimits& limits) {
    MonomialOrder order = default_order(ring);
    std::vector<Poly> current = gens;
    for (int round = 0; round < 64; ++round) {
        std::vector<Poly> next = ideal_quotient(current, f, ring, limits);
        if (ideal_equal(current, next, ring, order, limits)) return current;
        current = std::move(next);
    }
    throw ResourceLimitError("saturation_iterated: no fixed point within 64 rounds");
}

bool radical_membership(const Poly& f, const std::vector<Poly>& gens, const PolyRing& ring,
                        const GroebnerLimits& limits) {
    if (f.is_zero()) return true;
    const int n = ring.nvars();
    PolyRing ext = ring.extended("@t");
    MonomialOrder ext_order = default_order(ext);
    Poly t = Poly::from_term(Monomial::variable(n + 1, n), Rational(1));
    Poly rab = sub(Poly::constant(n + 1, Rational(1)), mul(t, lift_to(f, n + 1), ext_order),
                   ext_order);
    std::vector<Poly> work;
    for (const Poly& p : gens) work.push_back(lift_to(p, n + 1));
    work.push_back(std::move(rab));
    return ideal_contains_one(std::move(work), ext_order, limits);
}

int initial_dim(const ReducedGB& gb, const std::vector<int>& active_vars) {
    if (gb.contains_one()) return -1;  // empty chart
    std::uint64_t active = 0;
    for (int v : active_vars) active |= (std::uint64_t{1} << v);
    std::vector<std::uint64_t> supports;
    for (const Monomial& m : gb.leading_monomials())
        if ((m.mask & ~active) == 0) supports.push_back(m.mask);

    // Largest T inside `active` meeting the support of every listed monomial
    // in the complement. Monomials below `from` are already outside
    // `allowed`, and shrinking `allowed` keeps them outside.
    int best = 0;
    std::function<void(std::uint64_t, size_t)> rec = [&](std::uint64_t allowed, size_t from) {
        size_t blocker = supports.size();
        for (size_t i = from; i < supports.size(); ++i)
            if ((supports[i] & ~allowed) == 0) {
                blocker = i;
                break;
            }
        if (blocker == supports.size()) {
            best = std::max(best, std::popcount(allowed));
            return;
        }
        std::uint64_t s = supports[blocker];
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            std::uint64_t next = allowed & ~(std::uint64_t{1} << v);
            if (std::popcount(next) <= best) continue;
            rec(next, blocker + 1);
        }
    };
    rec(active, 0);
    return best;
}

bool ideal_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const PolyRing& ring,
                 const MonomialOrder& order, const GroebnerLimits& limits) {
    (void)ring;
    ReducedGB ga = buchberger(a, order, limits);
    ReducedGB gb = buchberger(b, order, limits);
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga.elements()[i] == gb.elements()[i])) return false;
    return true;
}

} // namespace pslab
