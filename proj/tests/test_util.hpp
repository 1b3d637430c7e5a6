#pragma once

#include <random>
#include <vector>

#include "atlas/polygon.hpp"
#include "atlas/weil.hpp"

namespace atlas::testutil {

// random monic Q of degree d with Q = t^d mod ell and |coeffs| <= bound
inline WittPoly random_q(std::mt19937_64& rng, int64_t ell, long d, int precision,
                         const Int& bound) {
    auto R = WittRing::make(ell, precision);
    std::vector<Int> coeffs(d + 1, 0);
    coeffs[d] = 1;
    Int span = 2 * bound + 1;
    for (long j = 0; j < d; ++j) {
        // uniform-ish in [-bound, bound], then forced into ell Z
        Int v = Int(static_cast<long>(rng() % 1000003));
        v = v % span - bound;
        coeffs[j] = v * ell;
    }
    return WittPoly::from_int_poly(R, IntPoly(std::move(coeffs)));
}

// product of k quadratic Weil polynomials t^2 - b t + q with distinct b,
// |b| <= 2 sqrt(q) (strict when squarefree is required)
inline IntPoly random_weil_product(std::mt19937_64& rng, const Int& q, int k,
                                   bool strictly_squarefree = true) {
    Int sq = sqrt(q);
    long bmax = sq.get_si() * 2;
    std::vector<long> bs;
    while (static_cast<int>(bs.size()) < k) {
        long b = static_cast<long>(rng() % (2 * bmax + 1)) - bmax;
        if (strictly_squarefree && b * b == 4 * q) continue;
        bool dup = false;
        for (long x : bs) dup |= x == b;
        if (!dup) bs.push_back(b);
    }
    IntPoly f = IntPoly::constant(1);
    for (long b : bs) f = f * IntPoly(std::vector<Int>{q, -b, 1});
    return f;
}

inline std::vector<long> primes_below(long n) {
    std::vector<long> out;
    for (long p = 2; p < n; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d) prime &= p % d != 0;
        if (prime) out.push_back(p);
    }
    return out;
}

}  // namespace atlas::testutil
