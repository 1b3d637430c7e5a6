#pragma once

#include <map>
#include <string>
#include <vector>

#include "atlas/surface.hpp"

namespace atlas {

// Rational function presented as a product of polynomials with signed
// exponents.  All factors have constant term 1, so expansions are exact
// integer series.
struct ZetaFactored {
    std::vector<std::pair<IntPoly, int>> factors;

    // coefficients of the power-series expansion up to t^order
    std::vector<Int> series(long order) const;
    // N_d from the logarithmic derivative: Z = exp(sum N_d t^d / d)
    std::vector<Int> log_counts(long order) const;
    std::string str() const;
};

// power sums of the inverse roots of P = prod (1 - rho t)
std::vector<Int> inverse_root_power_sums(const IntPoly& p, long order);

// P_2(t) = det(1 - t F | /\^2), through exact Newton identities
// (tr /\^2 F^k = (p_k^2 - p_2k)/2); works for any even-degree Weil input.
IntPoly exterior_square_poly(const IntPoly& f);

// Z_A = P_1 P_3 / (P_0 P_2 P_4) for an abelian surface
ZetaFactored zeta_abelian(const WeilPolynomial& w);

// counts b_r of degree-r closed points on A[2]
using BVector = std::map<long, long>;
std::string bvector_str(const BVector& b);

// Z_S = 1 / ((1-t) P (1-q^2 t)) with P = P_2 prod (1-(qt)^r)^(b_r); deg P = 22
ZetaFactored kummer_zeta(const WeilPolynomial& w, const BVector& b);

// det(t - F^r), from the power sums of f
IntPoly frobenius_power_charpoly(const IntPoly& f, long r);

// |S(F_(q^r))| = (f_r(1) + f_r(-1))/2 + q^r |A[2](F_(q^r))|; the caller
// passes the two-torsion fixed-point count over the degree-r field
Int kummer_point_count(const WeilPolynomial& w, const Int& two_torsion_points, long r);
Int two_torsion_points_from_bvector(const BVector& b, long r);

// the ell = 2 classification mapped through point counts, deduplicated
std::vector<std::pair<BVector, ZetaFactored>> enumerate_kummer_zetas(const WeilPolynomial& w,
                                                                     uint64_t seed = 0);

struct ClassTable {
    std::string name;
    std::vector<std::pair<std::string, std::string>> rows;  // condition, b-vector
};

// The four classification tables of Kummer-surface b-vectors, computed from
// (hbar, partition) pairs; rows within a block are listed with partitions
// in decreasing lexicographic order.
std::vector<ClassTable> generate_tables();
std::string tables_to_tsv(const std::vector<ClassTable>& tables);

}  // namespace atlas
