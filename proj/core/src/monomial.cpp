#include "pslab/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pslab {

Monomial::Monomial(std::vector<exp_t> exps) : e(std::move(exps)) {
    for (size_t v = 0; v < e.size(); ++v) {
        deg += e[v];
        if (e[v]) mask |= (std::uint64_t{1} << v);
    }
}

Monomial Monomial::variable(int nvars, int v, exp_t k) {
    Monomial m(nvars);
    m.e[v] = k;
    m.deg = k;
    if (k) m.mask = std::uint64_t{1} << v;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out(nvars());
    for (int v = 0; v < nvars(); ++v) out.e[v] = static_cast<exp_t>(e[v] + o.e[v]);
    out.deg = deg + o.deg;
    out.mask = mask | o.mask;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if ((mask & ~o.mask) != 0 || deg > o.deg) return false;
    for (int v = 0; v < nvars(); ++v)
        if (e[v] > o.e[v]) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial out(nvars());
    int d = 0;
    for (int v = 0; v < nvars(); ++v) {
        out.e[v] = static_cast<exp_t>(o.e[v] - e[v]);
        d += out.e[v];
        if (out.e[v]) out.mask |= (std::uint64_t{1} << v);
    }
    out.deg = d;
    return out;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial out(nvars());
    int d = 0;
    for (int v = 0; v < nvars(); ++v) {
        out.e[v] = std::max(e[v], o.e[v]);
        d += out.e[v];
        if (out.e[v]) out.mask |= (std::uint64_t{1} << v);
    }
    out.deg = d;
    return out;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial out(nvars());
    int d = 0;
    for (int v = 0; v < nvars(); ++v) {
        out.e[v] = std::min(e[v], o.e[v]);
        d += out.e[v];
        if (out.e[v]) out.mask |= (std::uint64_t{1} << v);
    }
    out.deg = d;
    return out;
}

std::uint64_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v = 0; v < nvars(); ++v) {
        h ^= static_cast<std::uint64_t>(e[v]) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<int> vars) {
    MonomialOrder o;
    o.nvars = static_cast<int>(vars.size());
    o.blocks.push_back({Kind::DegRevLex, std::move(vars)});
    return o;
}

MonomialOrder MonomialOrder::deglex(std::vector<int> vars) {
    MonomialOrder o;
    o.nvars = static_cast<int>(vars.size());
    o.blocks.push_back({Kind::DegLex, std::move(vars)});
    return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<int> front, std::vector<int> back) {
    MonomialOrder o;
    o.nvars = static_cast<int>(front.size() + back.size());
    o.blocks.push_back({Kind::DegRevLex, std::move(front)});
    o.blocks.push_back({Kind::DegRevLex, std::move(back)});
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const Block& blk : blocks) {
        int da = 0, db = 0;
        for (int v : blk.vars) {
            da += a.e[v];
            db += b.e[v];
        }
        if (da != db) return da < db ? -1 : 1;
        if (blk.kind == Kind::DegLex) {
            for (int v : blk.vars)
                if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
        } else {
            // Scan smallest variable first; the first difference decides,
            // with the *larger* exponent losing.
            for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it)
                if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it] ? -1 : 1;
        }
    }
    return 0;
}

std::string MonomialOrder::descriptor() const {
    std::ostringstream out;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) out << "|";
        out << (blocks[i].kind == Kind::DegLex ? "dlex" : "drl") << ":";
        for (size_t j = 0; j < blocks[i].vars.size(); ++j) {
            if (j) out << ",";
            out << blocks[i].vars[j];
        }
    }
    return out.str();
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
    if (m.is_unit()) return "1";
    std::string out;
    for (int v = 0; v < m.nvars(); ++v) {
        if (!m.e[v]) continue;
        if (!out.empty()) out += "*";
        out += ring.name(v);
        if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
    }
    return out;
}

} // namespace pslab
