#pragma once

#include <optional>
#include <string>

#include "atlas/weil.hpp"

namespace atlas {

struct SurfaceConditions {
    std::string residue_shape;  // factorization of f mod ell
    bool squarefree = true;
    Int a1, a2;
    Int disc_s;   // a1^2 - 4 a2 + 8 q
    Int four_q;   // a1 + a2 + 1 - 2 q
    std::optional<bool> regular;             // case 4: Dedekind regularity
    std::optional<Int> repeated_root;        // cases 7 and 8: r with r^2 = q
    std::optional<Int> p1_at_root;           // case 7: P1(r)
    std::optional<bool> ell2_divides_p1;     // case 7c
};

struct SurfaceCase {
    std::string case_id;  // 1,2,3,4,5,6a,6b,7a,7b,7c_i,7c_ii,8
    SurfaceConditions conditions;
    std::vector<TorsionClass> classes;
};

// The eight-case classification of A[ell] for abelian surfaces, covering
// multiple-root Weil polynomials.  For squarefree f the classes agree with
// classify_torsion.
SurfaceCase classify_surface(const WeilPolynomial& w, int64_t ell,
                             const DecompositionOptions& opt = {});

// Dedekind criterion for Z_ell[t]/f regular in the totally-degenerate
// quartic case: true means the zero nilpotent is excluded.
bool regularity_test(const Int& a1, const Int& a2, const Int& q, int64_t ell);

}  // namespace atlas
