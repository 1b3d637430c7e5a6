#pragma once

#include "atlas/lattice.hpp"

namespace atlas {

// Square matrix with entries in W[t], row major.
struct PolyMat {
    WittRing::Ptr R;
    long n = 0;
    std::vector<WittPoly> e;

    PolyMat() = default;
    PolyMat(WittRing::Ptr ring, long size);
    WittPoly& at(long i, long j) { return e[i * n + j]; }
    const WittPoly& at(long i, long j) const { return e[i * n + j]; }
    static PolyMat scalar(WittRing::Ptr ring, long size, const WittPoly& p);
};

bool operator==(const PolyMat& a, const PolyMat& b);
PolyMat pm_mul(const PolyMat& a, const PolyMat& b);
WittPoly pm_det(const PolyMat& a);
PolyMat pm_adjugate(const PolyMat& a);
PolyMat pm_to_ring(const PolyMat& a, const WittRing::Ptr& ring);

// Pair of r x r matrices over W[t] with Y X = f1 * I and det X = f.  The
// cokernel of X presents an S[t]/f1-module that is free of rank deg f
// over S.
struct MatrixFactorization {
    PolyMat X, Y;
    WittPoly f;   // det X
    WittPoly f1;  // annihilator
    long r = 0;
};

// both defining identities, checked at the ring's precision
bool verify_factorization(const MatrixFactorization& mf);

// Presentation matrix from a module in the adapted basis produced by
// construct_lift: X = (t^(m_i) delta_ji - a_ji) from x^(m_i) v_i =
// sum a_ji(x) v_j, with X = diag(t^(m_1), ..., t^(m_r)) mod ell.  Y is the
// lift of f1 X^(-1) through the adjugate, with every division exact;
// a failed division raises NotPolynomial.
MatrixFactorization factorization_from_generators(const LatticeModel& model,
                                                  const YoungPolygon& partition);

// The factorization (Y, X): det Y = f1^r / f, certified as a polynomial
// identity det(Y) * f = f1^r.
MatrixFactorization swap_partner(const MatrixFactorization& mf);

// Module data read off a presentation: rank = deg det X, and the Jordan
// type of the x-action on T/ellT from the Smith normal form of X mod ell
// over F_(ell^m)[t].
std::pair<long, YoungPolygon> cokernel_module_type(const PolyMat& x, const WittPoly& f1);

}  // namespace atlas
