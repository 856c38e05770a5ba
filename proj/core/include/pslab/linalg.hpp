#pragma once

#include <vector>

#include "pslab/rational.hpp"

namespace pslab {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// In-place reduced row echelon form. Zero rows are removed; returns the
/// pivot column of each remaining row (strictly increasing).
std::vector<int> rref(QMatrix& rows);

int rank(QMatrix rows);

/// Basis of the right nullspace {x : M x = 0}, ambient dimension = #columns.
QMatrix nullspace(const QMatrix& m, int cols);

/// A linear subspace of Q^ambient stored as an RREF basis.
/// Invariants: rows pairwise independent, pivot columns strictly increasing.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(int ambient) : ambient_(ambient) {}
    SubspaceBasis(int ambient, QMatrix spanning);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const QMatrix& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v after reduction against the basis; zero iff v lies in
    /// the subspace.
    QVector reduce(QVector v) const;
    bool contains(const QVector& v) const;
    bool contains(const SubspaceBasis& other) const;
    bool operator==(const SubspaceBasis& other) const;

    SubspaceBasis intersect(const SubspaceBasis& other) const;
    SubspaceBasis sum(const SubspaceBasis& other) const;

private:
    int ambient_ = 0;
    QMatrix rows_;
    std::vector<int> pivots_;
};

} // namespace pslab
