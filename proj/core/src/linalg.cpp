#include "pslab/linalg.hpp"

#include <algorithm>

#include "pslab/errors.hpp"

namespace pslab {

std::vector<int> rref(QMatrix& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && is_zero(rows[sel][c])) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = 1 / rows[r][c];
        for (size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            Rational f = rows[i][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    rows.resize(r);
    return pivots;
}

int rank(QMatrix rows) {
    return static_cast<int>(rref(rows).size());
}

QMatrix nullspace(const QMatrix& m, int cols) {
    QMatrix rows = m;
    for (auto& row : rows)
        if (static_cast<int>(row.size()) != cols)
            throw InvariantError("nullspace: ragged matrix");
    std::vector<int> pivots = rref(rows);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    QMatrix basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVector v(cols, Rational(0));
        v[c] = 1;
        for (size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

SubspaceBasis::SubspaceBasis(int ambient, QMatrix spanning) : ambient_(ambient) {
    for (auto& row : spanning)
        if (static_cast<int>(row.size()) != ambient)
            throw InvariantError("SubspaceBasis: vector dimension mismatch");
    pivots_ = rref(spanning);
    rows_ = std::move(spanning);
}

QVector SubspaceBasis::reduce(QVector v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivots_[i]];
        if (pslab::is_zero(c)) continue;
        Rational f = c;
        for (int j = pivots_[i]; j < ambient_; ++j) v[j] -= f * rows_[i][j];
    }
    return v;
}

bool SubspaceBasis::contains(const QVector& v) const {
    QVector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return is_zero(q); });
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_)
        throw InvariantError("SubspaceBasis::intersect: ambient mismatch");
    // x = c . rows(this); impose reduce_other(x) = 0 and solve for c.
    const int n = dim();
    QMatrix constraint;
    for (int j = 0; j < ambient_; ++j) {
        QVector col(n);
        for (int i = 0; i < n; ++i) col[i] = rows_[i][j];
        constraint.push_back(std::move(col));
    }
    // Build the matrix whose rows are reduce_other(basis vector) coordinates.
    QMatrix system;
    for (int i = 0; i < n; ++i) {
        QVector residual = other.reduce(rows_[i]);
        system.push_back(std::move(residual));
    }
    // Solve sum_i c_i * system[i] = 0.
    QMatrix transposed(ambient_, QVector(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < ambient_; ++j) transposed[j][i] = system[i][j];
    QMatrix coeffs = nullspace(transposed, n);
    QMatrix vectors;
    for (const auto& c : coeffs) {
        QVector v(ambient_, Rational(0));
        for (int i = 0; i < n; ++i)
            if (!pslab::is_zero(c[i]))
                for (int j = 0; j < ambient_; ++j) v[j] += c[i] * rows_[i][j];
        vectors.push_back(std::move(v));
    }
    return SubspaceBasis(ambient_, std::move(vectors));
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_)
        throw InvariantError("SubspaceBasis::sum: ambient mismatch");
    QMatrix all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return SubspaceBasis(ambient_, std::move(all));
}

} // namespace pslab
