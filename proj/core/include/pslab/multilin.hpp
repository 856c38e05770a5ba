#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pslab/freealg.hpp"
#include "pslab/ideal_ops.hpp"
#include "pslab/presentation.hpp"

namespace pslab {

class GbCache;

/// The polynomial ring S(d) on positioned variables (g, i), g a generator
/// index and i a position in [0, d-1]. Variable indexing is position-major:
/// var(g, i) = i * letters + g. S(d) carries the N^d grading where the i-th
/// multidegree component sums the exponents at position i; a monomial is
/// balanced when all components agree.
struct PositionedRing {
    int letters = 0;    // n+1
    int positions = 0;  // d
    PolyRing ring;

    PositionedRing() = default;
    PositionedRing(const AlgebraPresentation& pres, int d);

    int nvars() const { return letters * positions; }
    int var(int g, int pos) const { return pos * letters + g; }
    int generator_of(int v) const { return v % letters; }
    int position_of(int v) const { return v / letters; }

    std::vector<int> multidegree(const Monomial& m) const;
    bool is_balanced(const Monomial& m, int t) const;
    int max_position(const Monomial& m) const;  // -1 for the unit
};

/// Monomial orders on S(d) used in the paper's examples:
///  - degrevlex: x0 > y0 > z0 > x1 > ... (position ascending, declaration
///    ascending); the default everywhere.
///  - deglex: x0 < y0 < z0 < x1 < ... (so the last position's last generator
///    is largest); the order under which Example 2's K(d) has a quadratic
///    basis.
enum class MLOrderKind { DegRevLex, DegLex };
MonomialOrder ml_order(const PositionedRing& ring, MLOrderKind kind);
const char* ml_order_name(MLOrderKind kind);

/// sigma^m: positioned variables shift up by m positions; any term touching
/// position >= d - m dies.
Poly shift(const Poly& p, int m, const PositionedRing& ring);

/// iota_n, n = degree of r: word w0 w1 ... w_{n-1} -> (w0,0)(w1,1)...(w_{n-1},n-1).
Poly iota(const FreePolynomial& r, const PositionedRing& ring);

/// The multilinearized ideal K(d): generated by sigma^m(iota_e(r)) over the
/// relations r (degree e) and shifts 0 <= m <= d - e. Caches reduced Groebner
/// bases per monomial order under an exclusive lock; completed bases are
/// immutable and shared.
class MLIdeal {
public:
    MLIdeal(PositionedRing ring, std::vector<Poly> generators);

    const PositionedRing& positioned_ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }

    std::shared_ptr<const ReducedGB> groebner(const MonomialOrder& order,
                                              const GroebnerLimits& limits = {},
                                              GbCache* disk = nullptr) const;

private:
    PositionedRing ring_;
    std::vector<Poly> gens_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::shared_ptr<const ReducedGB>> cache_;
};

MLIdeal multilinearize(const AlgebraPresentation& pres, int d);

/// Balanced standard monomials of multidegree (t,...,t) with respect to the
/// Groebner basis of K. Enumerated position by position with subtree pruning
/// on already-divisible prefixes; `ceiling` bounds the candidate count.
std::vector<Monomial> balanced_standard_monomials(const ReducedGB& kgb,
                                                  const PositionedRing& ring, int t,
                                                  size_t ceiling = 80'000'000);

/// dim U_d(A)_t = # balanced standard monomials of multidegree (t,...,t).
int balanced_dim(const MLIdeal& K, int t, const MonomialOrder& order,
                 const GroebnerLimits& limits = {}, GbCache* disk = nullptr);

/// Runtime cross-check that the relation-shift generators span iota_n(I_n):
/// samples of sigma^m(iota(u r w)) must reduce to zero mod K.
bool verify_component_embedding(const AlgebraPresentation& pres, const MLIdeal& K,
                                const ReducedGB& kgb, int samples, unsigned long seed);

/// Finite presentation of U_d(A): one w-variable per balanced standard
/// monomial at t = 1 (a basis of U_d(A)_1), with the kernel ideal P of
/// w_j -> m_j computed exactly by graph-ideal elimination.
struct UdPresentation {
    int d = 0;
    PositionedRing sring;
    MonomialOrder sorder;                    // order used for K's basis
    std::vector<Monomial> basis_monomials;   // balanced standard monomials, ascending
    std::vector<FreeWord> basis_words;       // the word each monomial multilinearizes
    PolyRing wring;
    MonomialOrder worder;
    std::shared_ptr<const ReducedGB> kernel; // reduced GB of P in wring

    int dim_U1() const { return static_cast<int>(basis_monomials.size()); }
    /// Hilbert function of (w-ring)/P at degree t by standard-monomial count.
    int hilbert(int t) const;
};

/// Image of a degree-d element of the free algebra in U_d(A)_1, as
/// coefficients over the balanced standard-monomial basis.
QVector ud_element(const FreePolynomial& f, const ReducedGB& kgb, const PositionedRing& ring,
                   const std::vector<Monomial>& basis);

UdPresentation ud_presentation(const AlgebraPresentation& pres, const MLIdeal& K,
                               const MonomialOrder& sorder, int degree_bound = 0,
                               const GroebnerLimits& limits = {}, GbCache* disk = nullptr);

} // namespace pslab
