#pragma once

#include <vector>

#include "atlas/polygon.hpp"
#include "atlas/witt.hpp"

namespace atlas {

// An R-lattice T in V = (S[t]/Q) tensor Q_ell, recorded through the matrix
// of the operator x on a chosen S-basis.  The matrix reduces to a nilpotent
// matrix mod ell and its characteristic polynomial is Q at the ring's
// precision.
struct LatticeModel {
    WittRing::Ptr ring;   // S at the model's precision
    WittMatrix op;        // action of x
    WittPoly charpoly;    // Q, reduced to the model's precision
};

// Explicit witness for the lifting criterion: the lattice generated by
// v_1 = 1 and v_(s+1) = (x^(m_1+...+m_s) + sum a_j x^(...-j)) / ell^s, in
// the basis v_1, x v_1, ..., x^(m_1-1) v_1, v_2, ...  The reduction mod ell
// has Jordan type equal to the partition and char poly Q.  Throws
// NotDominated when the Newton polygon of Q does not dominate the partition
// (that case is impossible to lift).  Each extra generator costs one level
// of precision: the result lives at precision N - (#parts - 1).
LatticeModel construct_lift(const WittPoly& q, const YoungPolygon& partition);

// Jordan type of a nilpotent matrix from its rank sequence.
YoungPolygon nilpotent_jordan_type(const FFMatrix& nbar);

// Block-diagonal lower-shift Jordan cells, ordered by decreasing size.
FFMatrix canonical_nilpotent(FiniteField::Ptr field, const YoungPolygon& partition);

// Frobenius of the distinguished group scheme A(f, N): the matrix
// M(hbar) (x) I_d + I_(deg h) (x) N over F_ell.
FFMatrix frobenius_matrix(const FFPoly& hbar, const YoungPolygon& partition);

// All chains of x-invariant index-ell sublattices of length <= depth,
// including the model itself; each result carries the induced matrix in an
// adapted basis (one level of precision is spent per step).  Test oracle
// for the lifting criterion.
std::vector<LatticeModel> enumerate_invariant_sublattices(const LatticeModel& model, int depth);

// Valuations of the elementary divisors of (shift*I - op), with zeros
// dropped and each entry repeated deg(S) times to expand the S-module
// structure to Z_ell rank.  The cokernel is the direct sum of Z/ell^e.
std::vector<long> cokernel_group(const WittMatrix& op, const WittRing::Elem& shift);
std::vector<long> cokernel_group(const LatticeModel& model, const WittRing::Elem& shift);

}  // namespace atlas
