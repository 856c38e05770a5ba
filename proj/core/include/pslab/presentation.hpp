#pragma once

#include <map>
#include <string>
#include <vector>

#include "pslab/rational.hpp"

namespace pslab {

/// A degree-1 generator of the algebra. `index` is the position in
/// declaration order; names are unique within a presentation.
struct GeneratorSymbol {
    std::string name;
    int index = 0;
};

/// A word in the free algebra: the sequence of generator indices.
/// The empty word is the unit; degree = length.
using FreeWord = std::vector<int>;

/// Canonical storage comparison for words: by length, then lexicographically
/// by letter index. (Monomial orders for Groebner runs permute letters on top
/// of this; see freealg.)
struct WordLess {
    bool operator()(const FreeWord& a, const FreeWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Element of the free algebra over the rationals. No zero coefficients are
/// ever stored.
class FreePolynomial {
public:
    using Terms = std::map<FreeWord, Rational, WordLess>;

    FreePolynomial() = default;

    static FreePolynomial monomial(FreeWord w, Rational c = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const FreeWord& w, const Rational& c);
    FreePolynomial& operator+=(const FreePolynomial& other);
    FreePolynomial& operator-=(const FreePolynomial& other);
    FreePolynomial operator*(const Rational& c) const;
    FreePolynomial operator-() const;

    /// Two-sided monomial multiple u * p * w.
    FreePolynomial sandwich(const FreeWord& left, const FreeWord& right) const;

    bool is_homogeneous() const;
    /// Degree of a homogeneous polynomial; -1 for the zero polynomial.
    int degree() const;

    bool operator==(const FreePolynomial& other) const { return terms_ == other.terms_; }

private:
    Terms terms_;
};

struct AlgebraPresentation {
    std::string name;
    std::vector<GeneratorSymbol> generators;
    std::vector<FreePolynomial> relations;
    /// Primes recorded from the input ("char k != p"); informational only,
    /// the coefficient field here is always Q.
    std::vector<int> characteristic_exclusions;

    int generator_count() const { return static_cast<int>(generators.size()); }
    int generator_index(const std::string& name) const;  // -1 if unknown
    const std::string& generator_name(int index) const { return generators.at(index).name; }

    int min_relation_degree() const;  // INT_MAX when there are no relations
    std::vector<int> relation_degrees() const;  // sorted multiset of degrees
};

/// Parses a presentation from the algebra spec file format. Validates
/// homogeneity, degrees >= 2, and generator uniqueness.
AlgebraPresentation parse_presentation(const std::string& text);
AlgebraPresentation parse_presentation_file(const std::string& path);

/// Inverse of parse_presentation on normalized presentations.
std::string print_presentation(const AlgebraPresentation& pres);

/// Renders a polynomial in the relation expression grammar, terms in
/// descending canonical word order.
std::string print_free_polynomial(const FreePolynomial& p, const AlgebraPresentation& pres);
std::string print_free_word(const FreeWord& w, const AlgebraPresentation& pres);

/// Parses one expression in the noncommutative grammar over the given
/// generator names. Exposed separately for tests and for the commutative
/// (s,t)-parameter polynomials of point families.
FreePolynomial parse_expression(const std::string& text, const std::vector<std::string>& symbols);

} // namespace pslab
