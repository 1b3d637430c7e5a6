#pragma once

#include <functional>
#include <map>

#include "atlas/lattice.hpp"

namespace atlas {

// Monic integer polynomial of degree 2g whose roots all have modulus
// sqrt(q); the isogeny-class invariant.
struct WeilPolynomial {
    IntPoly f;
    Int q;
    Int p;  // q = p^k
    int k = 1;
    long g = 0;
    bool modulus_suspect = false;  // accepted only under force
};

// Exact functional-equation check; prime-power test on q; numeric
// root-modulus gate at 1e-8 relative tolerance (hard unless force).
WeilPolynomial validate_weil(const IntPoly& f, const Int& q, bool force = false);

// roots of f by Durand-Kerner iteration on the squarefree part
std::vector<std::pair<double, double>> approx_roots(const IntPoly& f);

// One ell-adic factor group of f: the distinguished triple (f_i, hbar, Q)
// together with the Teichmueller shift and the Newton polygon of Q.
struct LocalFactor {
    FFPoly hbar;
    long d = 0;
    WittPoly f_lift;       // over Z/ell^N
    WittRing::Ptr ext;     // S/ell^N, deg = deg hbar
    WittRing::Elem alpha;  // lift of a root of hbar into S
    WittPoly q_shift;      // Q(t) = g(t + alpha), g = conjugate factor of f_lift over S
    NewtonPolygon np;
};

// Replaces the Teichmueller choice in tests of lift-independence; must
// return an element reducing to the given residue.
using LiftChooser = std::function<WittRing::Elem(const FiniteField::Elem&, const WittRing&)>;

struct DecompositionOptions {
    int precision = 0;  // 0 means deg(f) + 2
    uint64_t seed = 0;
    LiftChooser lift;   // empty means Teichmueller
};

std::vector<LocalFactor> local_decomposition(const WeilPolynomial& w, int64_t ell,
                                             const DecompositionOptions& opt = {});

// canonical name of the etale group scheme A(f, N)
struct DistinguishedScheme {
    FFPoly hbar;  // over F_ell
    YoungPolygon partition;
};
bool operator==(const DistinguishedScheme& a, const DistinguishedScheme& b);

struct TorsionClass {
    std::vector<DistinguishedScheme> summands;
    long dim() const;
};
bool operator==(const TorsionClass& a, const TorsionClass& b);
// canonicalize: summands sorted by (deg hbar, coefficients); summands
// sharing hbar merged into one partition
TorsionClass make_class(std::vector<DistinguishedScheme> summands);
// canonical listing order: factor order ascending, partitions decreasing lex
bool class_order_less(const TorsionClass& a, const TorsionClass& b);

// Complete classification of A[ell] over the isogeny class for squarefree f:
// the Cartesian product of admissible partitions of the clamped local
// Newton polygons.
std::vector<TorsionClass> classify_torsion(const WeilPolynomial& w, int64_t ell,
                                           const DecompositionOptions& opt = {});

// |Fix(F^r)| = ell^(dim ker(F^r - 1)) on the direct-sum Frobenius matrix
Int scheme_fixed_points(const TorsionClass& c, int64_t ell, long r);
long scheme_frobenius_order(const TorsionClass& c, int64_t ell);
// counts b_r of degree-r closed points, from Moebius inversion of the
// fixed-point counts; zero entries omitted
std::map<long, int64_t> scheme_point_counts(const TorsionClass& c, int64_t ell, long max_degree);

// monic polynomial with roots q/omega; involution on Weil factors
IntPoly dual_weil(const IntPoly& f, const Int& q);

// pairing of factor indices matching residue roots alpha <-> q/alpha
std::vector<long> dual_polygon_map(const std::vector<LocalFactor>& decomp, const Int& q);

// Elementary divisors of 1 - F on the lattice with the given reduction type
// at one local factor (the ell-part of the point group contributed by that
// factor).  Re-lifts adaptively on PrecisionExhausted, doubling the
// precision up to 64*deg(f) (or TORSION_ATLAS_PRECISION_CAP).
std::vector<long> point_group_at_factor(const WeilPolynomial& w, int64_t ell, size_t factor_index,
                                        const YoungPolygon& partition,
                                        const DecompositionOptions& opt = {});

long precision_cap(long degree);

}  // namespace atlas
