#include "pslab/multilin.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "pslab/cache.hpp"
#include "pslab/errors.hpp"

namespace pslab {

PositionedRing::PositionedRing(const AlgebraPresentation& pres, int d) {
    letters = pres.generator_count();
    positions = d;
    std::vector<std::string> names;
    names.reserve(letters * positions);
    for (int i = 0; i < positions; ++i)
        for (int g = 0; g < letters; ++g)
            names.push_back(pres.generator_name(g) + std::to_string(i));
    ring = PolyRing(std::move(names));
}

std::vector<int> PositionedRing::multidegree(const Monomial& m) const {
    std::vector<int> deg(positions, 0);
    for (int v = 0; v < m.nvars(); ++v)
        if (m.e[v]) deg[position_of(v)] += m.e[v];
    return deg;
}

bool PositionedRing::is_balanced(const Monomial& m, int t) const {
    std::vector<int> deg = multidegree(m);
    return std::all_of(deg.begin(), deg.end(), [t](int x) { return x == t; });
}

int PositionedRing::max_position(const Monomial& m) const {
    for (int v = m.nvars() - 1; v >= 0; --v)
        if (m.e[v]) return position_of(v);
    return -1;
}

MonomialOrder ml_order(const PositionedRing& ring, MLOrderKind kind) {
    std::vector<int> vars;
    vars.reserve(ring.nvars());
    if (kind == MLOrderKind::DegRevLex) {
        // x0 > y0 > z0 > x1 > ... : position-major ascending.
        for (int v = 0; v < ring.nvars(); ++v) vars.push_back(v);
        return MonomialOrder::degrevlex(std::move(vars));
    }
    // deglex with x0 < y0 < z0 < x1 < ...: largest variable last position.
    for (int v = ring.nvars() - 1; v >= 0; --v) vars.push_back(v);
    return MonomialOrder::deglex(std::move(vars));
}

const char* ml_order_name(MLOrderKind kind) {
    return kind == MLOrderKind::DegRevLex ? "degrevlex" : "deglex";
}

Poly shift(const Poly& p, int m, const PositionedRing& ring) {
    if (m == 0) return p;
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        bool dies = false;
        Monomial shifted(ring.nvars());
        for (int v = 0; v < t.m.nvars(); ++v) {
            if (!t.m.e[v]) continue;
            int pos = ring.position_of(v) + m;
            if (pos >= ring.positions) {
                dies = true;
                break;
            }
            int nv = ring.var(ring.generator_of(v), pos);
            shifted.e[nv] = t.m.e[v];
            shifted.mask |= (std::uint64_t{1} << nv);
            shifted.deg += t.m.e[v];
        }
        if (!dies) out.push_back({std::move(shifted), t.c});
    }
    return Poly(std::move(out));
}

Poly iota(const FreePolynomial& r, const PositionedRing& ring) {
    if (!r.is_homogeneous()) throw InputError("iota: input must be homogeneous");
    if (r.is_zero()) return Poly();
    const int n = r.degree();
    if (n > ring.positions) throw InputError("iota: degree exceeds the number of positions");
    std::vector<Term> out;
    for (const auto& [w, c] : r.terms()) {
        Monomial m(ring.nvars());
        for (int i = 0; i < n; ++i) {
            int v = ring.var(w[i], i);
            m.e[v] = static_cast<exp_t>(m.e[v] + 1);
            m.mask |= (std::uint64_t{1} << v);
        }
        m.deg = n;
        out.push_back({std::move(m), c});
    }
    return Poly(std::move(out));
}

MLIdeal::MLIdeal(PositionedRing ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
    for (const Poly& g : gens_) {
        if (g.is_zero()) throw InvariantError("MLIdeal: zero generator");
        std::vector<int> deg = ring_.multidegree(g.terms().front().m);
        for (const Term& t : g.terms())
            if (ring_.multidegree(t.m) != deg)
                throw InvariantError("MLIdeal: generator not N^d-homogeneous");
    }
}

std::shared_ptr<const ReducedGB> MLIdeal::groebner(const MonomialOrder& order,
                                                   const GroebnerLimits& limits,
                                                   GbCache* disk) const {
    const std::string key = order.descriptor();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    std::shared_ptr<const ReducedGB> gb;
    if (disk) {
        gb = disk->get_or_compute(gens_, order, ring_.ring, limits);
    } else {
        gb = std::make_shared<ReducedGB>(buchberger(gens_, order, limits));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, gb);
    return it->second;
}

MLIdeal multilinearize(const AlgebraPresentation& pres, int d) {
    if (d < 1) throw InputError("multilinearize: d must be >= 1");
    PositionedRing ring(pres, d);
    std::vector<Poly> gens;
    for (const auto& r : pres.relations) {
        const int e = r.degree();
        if (e > d) continue;
        Poly base = iota(r, ring);
        for (int m = 0; m + e <= d; ++m) {
            Poly g = shift(base, m, ring);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }
    return MLIdeal(std::move(ring), std::move(gens));
}

std::vector<Monomial> balanced_standard_monomials(const ReducedGB& kgb,
                                                  const PositionedRing& ring, int t,
                                                  size_t ceiling) {
    if (t < 0) throw InputError("balanced_standard_monomials: t must be >= 0");
    const int d = ring.positions;
    const int letters = ring.letters;

    // Per-position degree-t monomial blocks, in a fixed enumeration order.
    std::vector<std::vector<exp_t>> block;
    std::vector<exp_t> current(letters, 0);
    std::function<void(int, int)> gen = [&](int g, int remaining) {
        if (g == letters - 1) {
            current[g] = static_cast<exp_t>(remaining);
            block.push_back(current);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            current[g] = static_cast<exp_t>(k);
            gen(g + 1, remaining - k);
        }
    };
    gen(0, t);

    // Leading monomials grouped by their maximal position: once positions
    // 0..i are fixed, any leading monomial supported there that divides the
    // prefix kills the whole subtree.
    std::vector<std::vector<const Monomial*>> leads_by_maxpos(d);
    for (const Monomial& m : kgb.leading_monomials()) {
        int mp = ring.max_position(m);
        if (mp < 0) return {};  // unit ideal
        leads_by_maxpos[mp].push_back(&m);
    }

    std::vector<Monomial> out;
    Monomial partial(ring.nvars());
    size_t visited = 0;
    std::function<void(int)> rec = [&](int pos) {
        if (++visited > ceiling)
            throw ResourceLimitError("balanced enumeration ceiling exceeded");
        if (pos == d) {
            out.push_back(partial);
            return;
        }
        for (const auto& b : block) {
            Monomial saved = partial;
            for (int g = 0; g < letters; ++g) {
                if (!b[g]) continue;
                int v = ring.var(g, pos);
                partial.e[v] = b[g];
                partial.mask |= (std::uint64_t{1} << v);
            }
            partial.deg += t;
            bool dead = false;
            for (const Monomial* lm : leads_by_maxpos[pos])
                if (lm->divides(partial)) {
                    dead = true;
                    break;
                }
            if (!dead) rec(pos + 1);
            partial = std::move(saved);
        }
    };
    if (t == 0) {
        out.push_back(Monomial(ring.nvars()));
        return out;
    }
    rec(0);
    return out;
}

int balanced_dim(const MLIdeal& K, int t, const MonomialOrder& order,
                 const GroebnerLimits& limits, GbCache* disk) {
    auto gb = K.groebner(order, limits, disk);
    return static_cast<int>(balanced_standard_monomials(*gb, K.positioned_ring(), t).size());
}

bool verify_component_embedding(const AlgebraPresentation& pres, const MLIdeal& K,
                                const ReducedGB& kgb, int samples, unsigned long seed) {
    const PositionedRing& ring = K.positioned_ring();
    const int d = ring.positions;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(0, ring.letters - 1);
    if (pres.relations.empty()) return true;
    std::uniform_int_distribution<size_t> pick(0, pres.relations.size() - 1);
    for (int s = 0; s < samples; ++s) {
        const FreePolynomial& r = pres.relations[pick(rng)];
        const int e = r.degree();
        if (e > d) continue;
        std::uniform_int_distribution<int> left_len(0, d - e);
        int lu = left_len(rng);
        std::uniform_int_distribution<int> right_len(0, d - e - lu);
        int rw = right_len(rng);
        FreeWord u(lu), w(rw);
        for (int& g : u) g = letter(rng);
        for (int& g : w) g = letter(rng);
        FreePolynomial urw = r.sandwich(u, w);
        int n = lu + e + rw;
        std::uniform_int_distribution<int> shift_by(0, d - n);
        Poly img = shift(iota(urw, ring), shift_by(rng), ring);
        if (!kgb.normal_form(img).is_zero()) return false;
    }
    return true;
}

QVector ud_element(const FreePolynomial& f, const ReducedGB& kgb, const PositionedRing& ring,
                   const std::vector<Monomial>& basis) {
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != ring.positions))
        throw InputError("ud_element: input must be homogeneous of degree d");
    Poly nf = kgb.normal_form(iota(f, ring));
    QVector coords(basis.size(), Rational(0));
    for (const Term& t : nf.terms()) {
        auto it = std::find_if(basis.begin(), basis.end(),
                               [&](const Monomial& m) { return m == t.m; });
        if (it == basis.end())
            throw InvariantError("ud_element: normal form leaves the balanced basis");
        coords[it - basis.begin()] = t.c;
    }
    return coords;
}

int UdPresentation::hilbert(int t) const {
    if (t < 0) return 0;
    if (t == 0) return 1;
    const int s = wring.nvars();
    // Enumerate degree-t monomials in the w-ring, prune by leading monomials.
    const auto& leads = kernel->leading_monomials();
    int count = 0;
    Monomial m(s);
    std::function<void(int, int)> rec = [&](int v, int remaining) {
        for (const Monomial& lm : leads)
            if ((lm.mask & ~m.mask) == 0 && lm.divides(m)) return;
        if (v == s) {
            if (remaining == 0) ++count;
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            if (k) {
                m.e[v] = static_cast<exp_t>(k);
                m.mask |= (std::uint64_t{1} << v);
                m.deg += 1;
            }
            if (v == s - 1 && remaining - k != 0) {
            } else {
                rec(v + 1, remaining - k);
            }
        }
        m.deg -= m.e[v];
        m.e[v] = 0;
        m.mask &= ~(std::uint64_t{1} << v);
    };
    rec(0, t);
    return count;
}

UdPresentation ud_presentation(const AlgebraPresentation& pres, const MLIdeal& K,
                               const MonomialOrder& sorder, int degree_bound,
                               const GroebnerLimits& limits, GbCache* disk) {
    UdPresentation ud;
    ud.sring = K.positioned_ring();
    ud.sorder = sorder;
    ud.d = ud.sring.positions;

    auto kgb = K.groebner(sorder, limits, disk);
    ud.basis_monomials = balanced_standard_monomials(*kgb, ud.sring, 1);
    std::sort(ud.basis_monomials.begin(), ud.basis_monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return sorder.less(a, b); });
    for (const Monomial& m : ud.basis_monomials) {
        FreeWord w(ud.sring.positions, 0);
        for (int v = 0; v < m.nvars(); ++v)
            if (m.e[v]) w[ud.sring.position_of(v)] = ud.sring.generator_of(v);
        ud.basis_words.push_back(std::move(w));
    }

    const int sn = ud.sring.nvars();
    const int s = ud.dim_U1();
    std::vector<std::string> wnames;
    for (int j = 0; j < s; ++j) wnames.push_back("w" + std::to_string(j));
    ud.wring = PolyRing(wnames);
    std::vector<int> wvars(s);
    for (int j = 0; j < s; ++j) wvars[j] = j;
    ud.worder = MonomialOrder::degrevlex(wvars);

    // Graph ideal in S(d) (+) w-ring; eliminate the S block.
    PolyRing big;
    {
        std::vector<std::string> names = ud.sring.ring.names;
        names.insert(names.end(), wnames.begin(), wnames.end());
        big = PolyRing(std::move(names));
    }
    std::vector<Poly> gens;
    for (const Poly& g : K.generators()) gens.push_back(lift_to(g, big.nvars()));
    for (int j = 0; j < s; ++j) {
        std::vector<exp_t> e(big.nvars(), 0);
        for (int v = 0; v < sn; ++v) e[v] = ud.basis_monomials[j].e[v];
        Poly graph(std::vector<Term>{{Monomial(std::move(e)), Rational(1)},
                                     {Monomial::variable(big.nvars(), sn + j), Rational(-1)}});
        gens.push_back(std::move(graph));
    }
    std::vector<int> sblock(sn);
    for (int v = 0; v < sn; ++v) sblock[v] = v;
    std::vector<Poly> elim = eliminate(gens, big, sblock, limits);

    std::vector<Poly> kernel;
    for (const Poly& p : elim) {
        std::vector<Term> terms;
        for (const Term& t : p.terms()) {
            std::vector<exp_t> e(t.m.e.begin() + sn, t.m.e.end());
            terms.push_back({Monomial(std::move(e)), t.c});
        }
        Poly q(std::move(terms));
        q.resort(ud.worder);
        q.make_monic();
        kernel.push_back(std::move(q));
    }
    std::sort(kernel.begin(), kernel.end(),
              [&](const Poly& a, const Poly& b) { return ud.worder.less(a.lm(), b.lm()); });
    ud.kernel = std::make_shared<ReducedGB>(ud.worder, std::move(kernel));

    for (const Poly& p : ud.kernel->elements())
        if (p.degree() <= 1)
            throw InvariantError("ud_presentation: kernel has degree <= 1 elements");

    // Optional verification scan: Hilbert function of W/P vs balanced_dim.
    for (int t = 2; t <= degree_bound; ++t) {
        int lhs = ud.hilbert(t);
        int rhs = static_cast<int>(balanced_standard_monomials(*kgb, ud.sring, t).size());
        if (lhs != rhs)
            throw InvariantError("ud_presentation: Hilbert mismatch at degree " +
                                 std::to_string(t));
    }
    return ud;
}

} // namespace pslab
