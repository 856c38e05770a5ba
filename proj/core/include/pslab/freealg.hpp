#pragma once

#include <optional>
#include <vector>

#include "pslab/linalg.hpp"
#include "pslab/presentation.hpp"

namespace pslab {

/// Enumeration of all (n+1)^d words of length d, lexicographic by letter
/// index (first letter most significant).
struct TensorDegreeBasis {
    int degree = 0;
    int letters = 1;  // n+1

    TensorDegreeBasis(int degree, int letters) : degree(degree), letters(letters) {}

    long size() const {
        long s = 1;
        for (int i = 0; i < degree; ++i) s *= letters;
        return s;
    }
    long index_of(const FreeWord& w) const;
    FreeWord word_of(long index) const;
};

/// Left degree-lexicographic word order with a generator permutation.
/// `perm[k]` is the generator of rank k, rank 0 smallest. Words are compared
/// by length first, then letter by letter from the left.
struct WordOrder {
    std::vector<int> perm;
    std::vector<int> rank;  // rank[g], derived from perm

    static WordOrder declaration_order(int letters);
    explicit WordOrder(std::vector<int> perm);

    bool less(const FreeWord& a, const FreeWord& b) const;
};

/// Reduced, degree-truncated two-sided Groebner basis in the free algebra.
/// All S-polynomial overlaps of degree <= truncation_degree reduce to zero,
/// so normal words of degree <= truncation_degree form a basis of A_{<=D}.
class NCGroebnerBasis {
public:
    NCGroebnerBasis(WordOrder order, int truncation_degree)
        : order_(std::move(order)), truncation_(truncation_degree) {}

    const WordOrder& order() const { return order_; }
    int truncation_degree() const { return truncation_; }
    bool complete_to(int degree) const { return degree <= truncation_; }

    const std::vector<FreePolynomial>& elements() const { return elements_; }
    const std::vector<FreeWord>& leading_words() const { return leading_; }

    /// Two-sided normal form; valid for inputs of degree <= truncation.
    FreePolynomial normal_form(FreePolynomial p) const;

    /// All words of the given degree avoiding every leading word as a subword.
    std::vector<FreeWord> normal_words(int degree) const;

    void add_element(FreePolynomial p);  // assumes already reduced + monic

private:
    friend NCGroebnerBasis nc_groebner(const AlgebraPresentation&, int, const WordOrder&);
    WordOrder order_;
    int truncation_;
    std::vector<FreePolynomial> elements_;
    std::vector<FreeWord> leading_;
};

/// Truncated Buchberger-style completion: overlap resolution restricted to
/// degree <= D, interreduced output.
NCGroebnerBasis nc_groebner(const AlgebraPresentation& pres, int D, const WordOrder& order);
NCGroebnerBasis nc_groebner(const AlgebraPresentation& pres, int D);

/// dim A_d counted as normal words of degree d.
int algebra_dim(const NCGroebnerBasis& gb, int d);
int algebra_dim(const AlgebraPresentation& pres, int d);

/// Row-reduced basis of I_d inside V^{tensor d}, computed by direct spanning:
/// I_d = sum over relations r and words u, w with |u| + deg r + |w| = d of
/// u*r*w. Independent of the Groebner route, so the two give a cross-check.
SubspaceBasis ideal_component_basis(const AlgebraPresentation& pres, int d);

} // namespace pslab
