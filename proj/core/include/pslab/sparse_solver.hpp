#pragma once

#include <vector>

#include "pslab/rational.hpp"

namespace pslab {

/// Homogeneous sparse linear system over Q. Rows are (column, coefficient)
/// lists; solution-space dimension = #columns - rank, computed exactly.
///
/// Two-term rows (proportionalities y_a = c y_b) and singletons are folded
/// through a weighted union-find first - in the Cech systems almost every
/// row has this shape - and only the remaining rows see sparse elimination.
class SparseSystem {
public:
    explicit SparseSystem(long columns);

    void add_row(std::vector<std::pair<long, Rational>> row);

    /// Dimension of {x : all rows vanish}. May be called once.
    long solution_dim();

private:
    long find(long v);

    long columns_;
    std::vector<long> parent_;
    std::vector<Rational> ratio_;  // x_v = ratio_[v] * x_{parent chain root}
    std::vector<char> zero_;       // indexed by root
    std::vector<std::vector<std::pair<long, Rational>>> general_;
};

} // namespace pslab
