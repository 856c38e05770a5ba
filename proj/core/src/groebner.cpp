#include "pslab/groebner.hpp"

#include <algorithm>
#include <deque>

#include "pslab/errors.hpp"

namespace pslab {

namespace {

/// Full reduction of f against (basis, leads); alive[] may shrink the
/// reducer set. Counts steps against the limit.
Poly reduce_full(Poly f, const std::vector<Poly>& basis, const std::vector<Monomial>& leads,
                 const std::vector<char>* alive, const MonomialOrder& order,
                 const GroebnerLimits& limits, size_t& steps) {
    std::vector<Term> done;
    while (!f.is_zero()) {
        if (++steps > limits.max_reduction_steps)
            throw ResourceLimitError("groebner: reduction step ceiling exceeded");
        const Monomial& m = f.lm();
        int hit = -1;
        for (size_t k = 0; k < leads.size(); ++k) {
            if (alive && !(*alive)[k]) continue;
            if (leads[k].divides(m)) {
                hit = static_cast<int>(k);
                break;
            }
        }
        if (hit < 0) {
            done.push_back(f.leading());
            std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
            f = Poly(std::move(rest));
        } else {
            Monomial q = leads[hit].divide_into(m);
            Rational c = f.lc() / basis[hit].lc();
            f = sub(f, basis[hit].mul_term(q, c), order);
        }
    }
    return Poly(std::move(done));
}

struct Engine {
    const MonomialOrder& order;
    const GroebnerLimits& limits;
    std::vector<Poly> basis;
    std::vector<Monomial> leads;
    std::vector<char> alive;
    size_t steps = 0;
    size_t pairs_done = 0;

    struct Pair {
        Monomial lcm;
        int i, j;
    };
    std::vector<Pair> pairs;  // unsorted; selection scans for the minimum

    Engine(const MonomialOrder& order, const GroebnerLimits& limits)
        : order(order), limits(limits) {}

    bool pair_less(const Pair& a, const Pair& b) const {
        if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
        int cmp = order.compare(a.lcm, b.lcm);
        if (cmp != 0) return cmp < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }

    /// Gebauer-Moeller update for a new element at index t.
    void update_pairs(int t) {
        struct Cand {
            Monomial lcm;
            int i;
            bool coprime;
            bool keep = true;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i) {
            if (!alive[i]) continue;
            cands.push_back({leads[t].lcm(leads[i]), i, leads[t].coprime(leads[i])});
        }
        // Drop candidates whose lcm is a proper multiple of another
        // candidate's lcm; among equal lcms keep the first.
        for (size_t a = 0; a < cands.size(); ++a) {
            if (!cands[a].keep) continue;
            for (size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !cands[b].keep) continue;
                if (cands[b].lcm.divides(cands[a].lcm)) {
                    if (cands[b].lcm == cands[a].lcm && b > a) continue;
                    cands[a].keep = false;
                    break;
                }
            }
        }
        // Chain criterion on old pairs.
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (const Pair& p : pairs) {
            bool drop = leads[t].divides(p.lcm) && p.lcm != leads[t].lcm(leads[p.i]) &&
                        p.lcm != leads[t].lcm(leads[p.j]);
            if (!drop) kept.push_back(p);
        }
        pairs = std::move(kept);
        for (auto& c : cands)
            if (c.keep && !c.coprime) pairs.push_back({std::move(c.lcm), c.i, t});
        if (pairs.size() > limits.max_pairs)
            throw ResourceLimitError("groebner: pair ceiling exceeded");
    }

    void add_element(Poly h) {
        h.make_primitive();
        int t = static_cast<int>(basis.size());
        leads.push_back(h.lm());
        basis.push_back(std::move(h));
        alive.push_back(1);
        if (basis.size() > limits.max_basis)
            throw ResourceLimitError("groebner: basis ceiling exceeded");
        update_pairs(t);
        for (int i = 0; i < t; ++i)
            if (alive[i] && leads[t].divides(leads[i])) alive[i] = 0;
    }

    /// Runs completion; if stop_on_unit, returns as soon as a constant
    /// element appears.
    bool complete(std::vector<Poly> generators, bool stop_on_unit) {
        for (Poly& g : generators) {
            if (g.is_zero()) continue;
            g.resort(order);
            Poly nf = reduce_full(std::move(g), basis, leads, nullptr, order, limits, steps);
            if (nf.is_zero()) continue;
            if (nf.lm().is_unit()) {
                if (stop_on_unit) return true;
                basis.clear();
                leads.clear();
                alive.clear();
                pairs.clear();
                add_element(Poly::constant(order.nvars, Rational(1)));
                return true;
            }
            add_element(std::move(nf));
        }
        while (!pairs.empty()) {
            size_t best = 0;
            for (size_t k = 1; k < pairs.size(); ++k)
                if (pair_less(pairs[k], pairs[best])) best = k;
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + best);
            ++pairs_done;

            Monomial mi = leads[p.i].divide_into(p.lcm);
            Monomial mj = leads[p.j].divide_into(p.lcm);
            Poly s = sub(basis[p.i].mul_term(mi, 1 / basis[p.i].lc()),
                         basis[p.j].mul_term(mj, 1 / basis[p.j].lc()), order);
            Poly nf = reduce_full(std::move(s), basis, leads, nullptr, order, limits, steps);
            if (nf.is_zero()) continue;
            if (nf.lm().is_unit()) {
                if (stop_on_unit) return true;
                basis.clear();
                leads.clear();
                alive.clear();
                pairs.clear();
                add_element(Poly::constant(order.nvars, Rational(1)));
                return true;
            }
            add_element(std::move(nf));
        }
        return false;
    }
};

} // namespace

ReducedGB::ReducedGB(MonomialOrder order, std::vector<Poly> elems)
    : order_(std::move(order)), elems_(std::move(elems)) {
    leads_.reserve(elems_.size());
    for (const Poly& p : elems_) leads_.push_back(p.lm());
}

bool ReducedGB::contains_one() const {
    return elems_.size() == 1 && elems_[0].lm().is_unit();
}

Poly ReducedGB::normal_form(Poly f) const {
    f.resort(order_);
    std::vector<Term> done;
    while (!f.is_zero()) {
        const Monomial& m = f.lm();
        int hit = -1;
        for (size_t k = 0; k < leads_.size(); ++k)
            if (leads_[k].divides(m)) {
                hit = static_cast<int>(k);
                break;
            }
        if (hit < 0) {
            done.push_back(f.leading());
            std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
            f = Poly(std::move(rest));
        } else {
            Monomial q = leads_[hit].divide_into(m);
            f = sub(f, elems_[hit].mul_term(q, f.lc()), order_);
        }
    }
    return Poly(std::move(done));
}

ReducedGB buchberger(std::vector<Poly> generators, const MonomialOrder& order,
                     const GroebnerLimits& limits) {
    Engine eng(order, limits);
    bool unit = eng.complete(std::move(generators), false);
    if (unit) {
        std::vector<Poly> one{Poly::constant(order.nvars, Rational(1))};
        return ReducedGB(order, std::move(one));
    }

    // Minimal basis: keep elements whose leading monomial is not divisible
    // by another kept leading monomial.
    std::vector<int> keep;
    for (size_t i = 0; i < eng.basis.size(); ++i)
        if (eng.alive[i]) keep.push_back(static_cast<int>(i));

    // Interreduce.
    std::vector<Poly> reduced;
    std::vector<Monomial> lead_subset;
    std::vector<Poly> elem_subset;
    for (int idx : keep) {
        lead_subset.push_back(eng.leads[idx]);
        elem_subset.push_back(eng.basis[idx]);
    }
    size_t steps = 0;
    for (size_t k = 0; k < elem_subset.size(); ++k) {
        std::vector<Monomial> other_leads;
        std::vector<Poly> other_elems;
        for (size_t t = 0; t < elem_subset.size(); ++t) {
            if (t == k) continue;
            other_leads.push_back(lead_subset[t]);
            other_elems.push_back(elem_subset[t]);
        }
        Poly nf = reduce_full(elem_subset[k], other_elems, other_leads, nullptr, order, limits,
                              steps);
        if (nf.is_zero()) continue;
        nf.make_monic();
        reduced.push_back(std::move(nf));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Poly& a, const Poly& b) { return order.less(a.lm(), b.lm()); });
    return ReducedGB(order, std::move(reduced));
}

bool ideal_contains_one(std::vector<Poly> generators, const MonomialOrder& order,
                        const GroebnerLimits& limits) {
    Engine eng(order, limits);
    return eng.complete(std::move(generators), true);
}

} // namespace pslab
