#include "pslab/sparse_solver.hpp"

#include <algorithm>
#include <map>

#include "pslab/errors.hpp"

namespace pslab {

SparseSystem::SparseSystem(long columns) : columns_(columns) {
    parent_.resize(columns);
    ratio_.assign(columns, Rational(1));
    zero_.assign(columns, 0);
    for (long v = 0; v < columns; ++v) parent_[v] = v;
}

long SparseSystem::find(long v) {
    std::vector<long> path;
    long root = v;
    while (parent_[root] != root) {
        path.push_back(root);
        root = parent_[root];
    }
    // Compress back to front; each node's parent is already compressed.
    for (size_t i = path.size(); i-- > 0;) {
        long node = path[i];
        if (parent_[node] != root) {
            ratio_[node] = ratio_[node] * ratio_[parent_[node]];
            parent_[node] = root;
        }
    }
    return root;
}

void SparseSystem::add_row(std::vector<std::pair<long, Rational>> row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long, Rational>> merged;
    for (auto& [col, c] : row) {
        if (col < 0 || col >= columns_) throw InvariantError("SparseSystem: column out of range");
        if (!merged.empty() && merged.back().first == col) {
            merged.back().second += c;
            if (pslab::is_zero(merged.back().second)) merged.pop_back();
        } else if (!pslab::is_zero(c)) {
            merged.emplace_back(col, std::move(c));
        }
    }
    if (merged.empty()) return;
    if (merged.size() == 1) {
        long r = find(merged[0].first);
        zero_[r] = 1;
        return;
    }
    if (merged.size() == 2) {
        // c_a x_a + c_b x_b = 0  =>  x_a = (-c_b/c_a) x_b.
        long a = merged[0].first, b = merged[1].first;
        Rational lambda = -merged[1].second / merged[0].second;
        long ra = find(a), rb = find(b);
        Rational qa = a == ra ? Rational(1) : ratio_[a];
        Rational qb = b == rb ? Rational(1) : ratio_[b];
        // x_a = qa x_ra, x_b = qb x_rb, want qa x_ra = lambda qb x_rb.
        if (ra == rb) {
            if (qa != lambda * qb) zero_[ra] = 1;
            return;
        }
        bool z = zero_[ra] || zero_[rb];
        parent_[ra] = rb;
        ratio_[ra] = lambda * qb / qa;
        if (z) zero_[rb] = 1;
        return;
    }
    general_.push_back(std::move(merged));
}

long SparseSystem::solution_dim() {
    // Rewrite general rows over root columns.
    std::map<long, std::vector<std::pair<long, Rational>>> pivots;
    long rank = 0;
    for (auto& row : general_) {
        std::map<long, Rational> rewritten;
        for (auto& [col, c] : row) {
            long r = find(col);
            if (zero_[r]) continue;
            Rational q = col == r ? Rational(1) : ratio_[col];
            rewritten[r] += c * q;
        }
        std::vector<std::pair<long, Rational>> work;
        for (auto& [col, c] : rewritten)
            if (!pslab::is_zero(c)) work.emplace_back(col, c);
        // Eliminate against existing pivots; the minimal column strictly
        // increases each round because pivot rows start at their pivot.
        while (!work.empty()) {
            long lead = work.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) break;
            Rational factor = work.front().second;  // pivot rows are monic
            std::vector<std::pair<long, Rational>> next;
            size_t i = 0, j = 0;
            const auto& piv = it->second;
            while (i < work.size() && j < piv.size()) {
                if (work[i].first < piv[j].first) {
                    next.push_back(work[i++]);
                } else if (work[i].first > piv[j].first) {
                    next.emplace_back(piv[j].first, -factor * piv[j].second);
                    ++j;
                } else {
                    Rational c = work[i].second - factor * piv[j].second;
                    if (!pslab::is_zero(c)) next.emplace_back(work[i].first, std::move(c));
                    ++i;
                    ++j;
                }
            }
            while (i < work.size()) next.push_back(work[i++]);
            while (j < piv.size()) {
                next.emplace_back(piv[j].first, -factor * piv[j].second);
                ++j;
            }
            work = std::move(next);
        }
        if (work.empty()) continue;
        if (work.size() == 1) {
            zero_[work.front().first] = 1;  // forced zero root
            continue;
        }
        Rational inv = 1 / work.front().second;
        for (auto& [col, c] : work) c *= inv;
        pivots.emplace(work.front().first, std::move(work));
        ++rank;
    }
    general_.clear();

    // Pivot lead columns never get zero-forced (every later row is
    // top-reduced first), so the pivot rows stay in echelon and independent
    // after the zeroed coordinates are substituted away:
    // dim = live classes - pivot count.
    std::vector<char> seen(columns_, 0);
    long classes = 0;
    for (long v = 0; v < columns_; ++v) {
        long r = find(v);
        if (seen[r]) continue;
        seen[r] = 1;
        if (!zero_[r]) ++classes;
    }
    return classes - rank;
}

} // namespace pslab
