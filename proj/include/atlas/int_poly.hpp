#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace atlas {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z, constant term first.  The zero
// polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(const Int& c);
    static IntPoly monomial(long degree, const Int& c = 1);
    // Parses "1,-1,8,-7,49" with the leading coefficient first (the order
    // Weil polynomials are usually written in).
    static IntPoly from_leading_first(const std::vector<Int>& coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& coeff(long i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& g) const;
    IntPoly operator-(const IntPoly& g) const;
    IntPoly operator*(const IntPoly& g) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& g) const { return c_ == g.c_; }
    bool operator!=(const IntPoly& g) const { return c_ != g.c_; }

    Int operator()(const Int& x) const;
    Rat operator()(const Rat& x) const;

    IntPoly derivative() const;
    IntPoly pow(unsigned long e) const;
    // f(t + a)
    IntPoly shift_var(const Int& a) const;
    // f(s * t)
    IntPoly scale_var(const Int& s) const;
    // t^deg(f) * f(1/t)
    IntPoly reverse() const;
    // Quotient and remainder by a monic divisor; exact over Z.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const;

    // Power sums p_1..p_k of the roots (f monic), via Newton's identities.
    std::vector<Int> power_sums(long k) const;
    // Monic polynomial of degree d with the given root power sums; every
    // division in the inverse Newton recurrence must be exact.
    static IntPoly from_power_sums(long d, const std::vector<Int>& p);

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> c_;
};

// Monic gcd over Q, returned with integer coefficients scaled primitively.
IntPoly gcd_poly(const IntPoly& f, const IntPoly& g);
bool is_squarefree(const IntPoly& f);

}  // namespace atlas
