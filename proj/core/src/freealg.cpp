#include "pslab/freealg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pslab/errors.hpp"

namespace pslab {

long TensorDegreeBasis::index_of(const FreeWord& w) const {
    long idx = 0;
    for (int g : w) idx = idx * letters + g;
    return idx;
}

FreeWord TensorDegreeBasis::word_of(long index) const {
    FreeWord w(degree, 0);
    for (int i = degree - 1; i >= 0; --i) {
        w[i] = static_cast<int>(index % letters);
        index /= letters;
    }
    return w;
}

WordOrder WordOrder::declaration_order(int letters) {
    std::vector<int> perm(letters);
    std::iota(perm.begin(), perm.end(), 0);
    return WordOrder(std::move(perm));
}

WordOrder::WordOrder(std::vector<int> p) : perm(std::move(p)) {
    rank.assign(perm.size(), -1);
    for (size_t k = 0; k < perm.size(); ++k) {
        if (perm[k] < 0 || perm[k] >= static_cast<int>(perm.size()) || rank[perm[k]] != -1)
            throw InputError("invalid generator permutation");
        rank[perm[k]] = static_cast<int>(k);
    }
}

bool WordOrder::less(const FreeWord& a, const FreeWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return rank[a[i]] < rank[b[i]];
    return false;
}

namespace {

std::pair<FreeWord, Rational> leading_term(const FreePolynomial& p, const WordOrder& order) {
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

/// First position where `sub` occurs inside `w`, or -1.
int find_subword(const FreeWord& w, const FreeWord& sub) {
    if (sub.size() > w.size()) return -1;
    for (size_t i = 0; i + sub.size() <= w.size(); ++i) {
        bool hit = true;
        for (size_t j = 0; j < sub.size(); ++j)
            if (w[i + j] != sub[j]) {
                hit = false;
                break;
            }
        if (hit) return static_cast<int>(i);
    }
    return -1;
}

FreePolynomial make_monic(FreePolynomial p, const WordOrder& order) {
    if (p.is_zero()) return p;
    auto [w, c] = leading_term(p, order);
    return p * (1 / c);
}

} // namespace

void NCGroebnerBasis::add_element(FreePolynomial p) {
    auto [w, c] = leading_term(p, order_);
    (void)c;
    leading_.push_back(w);
    elements_.push_back(std::move(p));
}

FreePolynomial NCGroebnerBasis::normal_form(FreePolynomial p) const {
    FreePolynomial out;
    while (!p.is_zero()) {
        auto [w, c] = leading_term(p, order_);
        int hit = -1, pos = -1;
        for (size_t k = 0; k < leading_.size(); ++k) {
            pos = find_subword(w, leading_[k]);
            if (pos >= 0) {
                hit = static_cast<int>(k);
                break;
            }
        }
        if (hit < 0) {
            out.add_term(w, c);
            p.add_term(w, -c);
        } else {
            FreeWord left(w.begin(), w.begin() + pos);
            FreeWord right(w.begin() + pos + leading_[hit].size(), w.end());
            p -= elements_[hit].sandwich(left, right) * c;
        }
    }
    return out;
}

std::vector<FreeWord> NCGroebnerBasis::normal_words(int degree) const {
    std::vector<FreeWord> out;
    const int letters = static_cast<int>(order_.perm.size());
    FreeWord word;
    auto blocked_suffix = [&](const FreeWord& w) {
        // Only suffixes ending at the last letter need checking; shorter
        // prefixes were checked at earlier depths.
        for (const FreeWord& lw : leading_) {
            if (lw.size() > w.size()) continue;
            bool hit = true;
            for (size_t j = 0; j < lw.size(); ++j)
                if (w[w.size() - lw.size() + j] != lw[j]) {
                    hit = false;
                    break;
                }
            if (hit) return true;
        }
        return false;
    };
    std::function<void()> rec = [&]() {
        if (static_cast<int>(word.size()) == degree) {
            out.push_back(word);
            return;
        }
        for (int g = 0; g < letters; ++g) {
            word.push_back(g);
            if (!blocked_suffix(word)) rec();
            word.pop_back();
        }
    };
    rec();
    return out;
}

NCGroebnerBasis nc_groebner(const AlgebraPresentation& pres, int D, const WordOrder& order) {
    if (D < 2) throw InputError("nc_groebner: truncation degree must be >= 2");
    NCGroebnerBasis gb(order, D);

    struct Pair {
        int degree;
        FreePolynomial spoly;
    };
    auto pair_cmp = [](const Pair& a, const Pair& b) { return a.degree > b.degree; };
    std::vector<Pair> queue;

    std::vector<char> redundant;

    auto push_spoly = [&](FreePolynomial s, int degree) {
        if (degree > D || s.is_zero()) return;
        queue.push_back({degree, std::move(s)});
        std::push_heap(queue.begin(), queue.end(), pair_cmp);
    };

    // Overlap S-polynomials of elements i and j (i may equal j).
    auto make_overlaps = [&](int i, int j) {
        const FreeWord& u = gb.leading_words()[i];
        const FreeWord& v = gb.leading_words()[j];
        // Proper overlap: a suffix of u equals a prefix of v.
        for (size_t k = 1; k < u.size() && k < v.size(); ++k) {
            bool match = true;
            for (size_t t = 0; t < k; ++t)
                if (u[u.size() - k + t] != v[t]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            int deg = static_cast<int>(u.size() + v.size() - k);
            if (deg > D) continue;
            FreeWord right_ext(v.begin() + k, v.end());
            FreeWord left_ext(u.begin(), u.begin() + (u.size() - k));
            FreePolynomial s = gb.elements()[i].sandwich({}, right_ext);
            s -= gb.elements()[j].sandwich(left_ext, {});
            push_spoly(std::move(s), deg);
        }
        // Containment: v a subword of u (i != j handled both ways by caller).
        if (i != j && v.size() < u.size()) {
            int pos = find_subword(u, v);
            if (pos >= 0) {
                FreeWord left(u.begin(), u.begin() + pos);
                FreeWord right(u.begin() + pos + v.size(), u.end());
                FreePolynomial s = gb.elements()[i];
                s -= gb.elements()[j].sandwich(left, right);
                push_spoly(std::move(s), static_cast<int>(u.size()));
            }
        }
    };

    auto insert_element = [&](FreePolynomial p) {
        p = make_monic(std::move(p), order);
        gb.add_element(std::move(p));
        redundant.push_back(0);
        int idx = static_cast<int>(gb.elements().size()) - 1;
        // Mark older elements whose leading word contains the new one.
        for (int k = 0; k < idx; ++k)
            if (!redundant[k] && find_subword(gb.leading_words()[k], gb.leading_words()[idx]) >= 0)
                redundant[k] = 1;
        for (int k = 0; k <= idx; ++k) {
            if (redundant[k]) continue;
            make_overlaps(idx, k);
            if (k != idx) make_overlaps(k, idx);
        }
    };

    for (const auto& r : pres.relations) {
        if (r.degree() > D) continue;
        FreePolynomial nf = gb.normal_form(r);
        if (!nf.is_zero()) insert_element(std::move(nf));
    }

    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), pair_cmp);
        Pair p = std::move(queue.back());
        queue.pop_back();
        FreePolynomial nf = gb.normal_form(std::move(p.spoly));
        if (!nf.is_zero()) insert_element(std::move(nf));
    }

    // Interreduce: each surviving element fully reduced against the others.
    NCGroebnerBasis reduced(order, D);
    std::vector<std::pair<FreeWord, FreePolynomial>> keep;
    for (size_t k = 0; k < gb.elements().size(); ++k)
        if (!redundant[k]) keep.emplace_back(gb.leading_words()[k], gb.elements()[k]);
    std::sort(keep.begin(), keep.end(),
              [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
    for (size_t k = 0; k < keep.size(); ++k) {
        NCGroebnerBasis others(order, D);
        for (size_t t = 0; t < keep.size(); ++t)
            if (t != k) others.add_element(keep[t].second);
        FreePolynomial nf = others.normal_form(keep[k].second);
        if (!nf.is_zero()) reduced.add_element(make_monic(std::move(nf), order));
    }
    return reduced;
}

NCGroebnerBasis nc_groebner(const AlgebraPresentation& pres, int D) {
    return nc_groebner(pres, D, WordOrder::declaration_order(pres.generator_count()));
}

int algebra_dim(const NCGroebnerBasis& gb, int d) {
    if (d < 0) throw InputError("algebra_dim: degree must be >= 0");
    if (!gb.complete_to(d)) throw InputError("algebra_dim: basis not complete to this degree");
    return static_cast<int>(gb.normal_words(d).size());
}

int algebra_dim(const AlgebraPresentation& pres, int d) {
    if (d == 0) return 1;
    NCGroebnerBasis gb = nc_groebner(pres, std::max(d, 2));
    return algebra_dim(gb, d);
}

SubspaceBasis ideal_component_basis(const AlgebraPresentation& pres, int d) {
    if (d < 2) throw InputError("ideal_component_basis: degree must be >= 2");
    const int letters = pres.generator_count();
    TensorDegreeBasis basis(d, letters);
    const long ambient = basis.size();
    if (ambient > 2'000'000)
        throw ResourceLimitError("ideal_component_basis: ambient dimension too large");
    QMatrix rows;
    for (const auto& r : pres.relations) {
        const int e = r.degree();
        if (e > d) continue;
        for (int left_len = 0; left_len + e <= d; ++left_len) {
            const int right_len = d - e - left_len;
            TensorDegreeBasis lb(left_len, letters), rb(right_len, letters);
            for (long li = 0; li < lb.size(); ++li) {
                FreeWord u = lb.word_of(li);
                for (long ri = 0; ri < rb.size(); ++ri) {
                    FreeWord w = rb.word_of(ri);
                    FreePolynomial prod = r.sandwich(u, w);
                    QVector row(ambient, Rational(0));
                    for (const auto& [word, c] : prod.terms()) row[basis.index_of(word)] = c;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return SubspaceBasis(static_cast<int>(ambient), std::move(rows));
}

} // namespace pslab
