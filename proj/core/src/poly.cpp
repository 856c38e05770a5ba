#include "pslab/poly.hpp"

#include <algorithm>

namespace pslab {

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p;
    if (!pslab::is_zero(c)) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Poly Poly::from_term(Monomial m, Rational c) {
    Poly p;
    if (!pslab::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.m.deg);
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().m.deg;
    for (const Term& t : terms_)
        if (t.m.deg != d) return false;
    return true;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

void Poly::resort(const MonomialOrder& order) {
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().m == t.m) {
            merged.back().c += t.c;
            if (pslab::is_zero(merged.back().c)) merged.pop_back();
        } else if (!pslab::is_zero(t.c)) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

Poly Poly::negated() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.c = -t.c;
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    if (pslab::is_zero(c)) return Poly();
    Poly out = *this;
    for (auto& t : out.terms_) t.c *= c;
    return out;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
    if (pslab::is_zero(c)) return Poly();
    Poly out = *this;
    for (auto& t : out.terms_) {
        t.m = t.m * m;
        t.c *= c;
    }
    return out;
}

void Poly::make_primitive() {
    if (terms_.empty()) return;
    Integer den(1);
    for (const Term& t : terms_) {
        Integer d = t.c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    Integer num(0);
    for (const Term& t : terms_) {
        Integer scaled = t.c.get_num() * (den / t.c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    if (sgn(num) == 0) return;
    Rational factor(den, num);
    factor.canonicalize();
    if (sgn(terms_.front().c) < 0) factor = -factor;
    if (factor == 1) return;
    for (Term& t : terms_) t.c *= factor;
}

void Poly::make_monic() {
    if (terms_.empty()) return;
    Rational inv = 1 / terms_.front().c;
    if (inv == 1) return;
    for (Term& t : terms_) t.c *= inv;
}

std::string Poly::to_string(const PolyRing& ring) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        Rational a = t.c;
        if (first) {
            if (sgn(a) < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        std::string m = monomial_to_string(t.m, ring);
        if (a != 1 || m == "1") {
            out += pslab::to_string(a);
            if (m != "1") out += "*" + m;
        } else {
            out += m;
        }
        first = false;
    }
    return out;
}

Poly add(const Poly& a, const Poly& b, const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    size_t i = 0, j = 0;
    while (i < a.terms().size() && j < b.terms().size()) {
        int cmp = order.compare(a.terms()[i].m, b.terms()[j].m);
        if (cmp > 0) {
            out.push_back(a.terms()[i++]);
        } else if (cmp < 0) {
            out.push_back(b.terms()[j++]);
        } else {
            Rational c = a.terms()[i].c + b.terms()[j].c;
            if (!pslab::is_zero(c)) out.push_back({a.terms()[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    while (i < a.terms().size()) out.push_back(a.terms()[i++]);
    while (j < b.terms().size()) out.push_back(b.terms()[j++]);
    return Poly(std::move(out));
}

Poly sub(const Poly& a, const Poly& b, const MonomialOrder& order) {
    return add(a, b.negated(), order);
}

Poly mul(const Poly& a, const Poly& b, const MonomialOrder& order) {
    Poly acc;
    if (a.is_zero() || b.is_zero()) return acc;
    const Poly* shorter = a.size() <= b.size() ? &a : &b;
    const Poly* longer = a.size() <= b.size() ? &b : &a;
    for (const Term& t : shorter->terms())
        acc = add(acc, longer->mul_term(t.m, t.c), order);
    return acc;
}

Poly pow(const Poly& a, int k, const MonomialOrder& order) {
    Poly out = Poly::constant(order.nvars, Rational(1));
    Poly base = a;
    while (k > 0) {
        if (k & 1) out = mul(out, base, order);
        k >>= 1;
        if (k) base = mul(base, base, order);
    }
    return out;
}

Poly exact_divide(const Poly& a, const Poly& b, const MonomialOrder& order) {
    if (b.is_zero()) throw InvariantError("exact_divide by zero");
    Poly rem = a;
    std::vector<Term> q;
    while (!rem.is_zero()) {
        if (!b.lm().divides(rem.lm()))
            throw InvariantError("exact_divide: not divisible");
        Monomial m = b.lm().divide_into(rem.lm());
        Rational c = rem.lc() / b.lc();
        q.push_back({m, c});
        rem = sub(rem, b.mul_term(m, c), order);
    }
    return Poly(std::move(q));
}

Poly substitute_one(const Poly& p, int var) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        Monomial m = t.m;
        if (m.e[var]) {
            m.deg -= m.e[var];
            m.e[var] = 0;
            m.mask &= ~(std::uint64_t{1} << var);
        }
        out.push_back({std::move(m), t.c});
    }
    Poly q(std::move(out));
    return q;
}

Poly substitute(const Poly& p, int var, const Poly& value, const MonomialOrder& order) {
    Poly out;
    for (const Term& t : p.terms()) {
        Monomial m = t.m;
        int e = m.e[var];
        if (e) {
            m.deg -= e;
            m.e[var] = 0;
            m.mask &= ~(std::uint64_t{1} << var);
        }
        Poly piece = Poly::from_term(m, t.c);
        if (e) piece = mul(piece, pow(value, e, order), order);
        out = add(out, piece, order);
    }
    return out;
}

Poly lift_to(const Poly& p, int new_nvars) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        std::vector<exp_t> e = t.m.e;
        e.resize(new_nvars, 0);
        out.push_back({Monomial(std::move(e)), t.c});
    }
    return Poly(std::move(out));
}

Poly restrict_to(const Poly& p, int new_nvars) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        for (int v = new_nvars; v < t.m.nvars(); ++v)
            if (t.m.e[v]) throw InvariantError("restrict_to: variable still present");
        std::vector<exp_t> e(t.m.e.begin(), t.m.e.begin() + new_nvars);
        out.push_back({Monomial(std::move(e)), t.c});
    }
    return Poly(std::move(out));
}

} // namespace pslab
