#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "atlas/finite_field.hpp"
#include "atlas/int_poly.hpp"

namespace atlas {

// Valuation extended by TOP, the class of "zero at working precision".
// TOP compares strictly greater than every finite value.
struct ExtVal {
    bool top = false;
    long v = 0;

    static ExtVal finite(long k) { return {false, k}; }
    static ExtVal top_val() { return {true, 0}; }
    bool is_top() const { return top; }

    friend bool operator==(const ExtVal& a, const ExtVal& b) {
        return a.top == b.top && (a.top || a.v == b.v);
    }
    friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
    friend bool operator<(const ExtVal& a, const ExtVal& b) {
        if (a.top) return false;
        if (b.top) return true;
        return a.v < b.v;
    }
    friend bool operator<=(const ExtVal& a, const ExtVal& b) { return a < b || a == b; }
    friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
    friend bool operator>=(const ExtVal& a, const ExtVal& b) { return b <= a; }
};

// S/ell^N S for S the ring of integers of the unramified degree-m extension
// of Q_ell, presented as Z[y]/(ell^N, H(y)) with H monic and irreducible
// mod ell.  Elements are coefficient vectors of length m, reduced to
// [0, ell^N).  The prime ring Z/ell^N is the m = 1 case.
class WittRing : public std::enable_shared_from_this<WittRing> {
public:
    using Elem = std::vector<Int>;
    using Ptr = std::shared_ptr<const WittRing>;

    static Ptr make(int64_t ell, int precision);
    // hbar constant-first over F_ell; the lift H defaults to hbar itself
    // with coefficients in [0, ell).
    static Ptr make(int64_t ell, const std::vector<int64_t>& hbar, int precision);
    Ptr with_precision(int precision) const;

    int64_t ell() const { return ell_; }
    int deg() const { return m_; }
    int precision() const { return precision_; }
    const Int& modulus() const { return modulus_; }
    const IntPoly& lift_poly() const { return lift_; }
    FiniteField::Ptr residue_field() const { return residue_; }
    bool same_ring(const WittRing& o) const;

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem gen() const;
    Elem from_int(const Int& n) const;
    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const { return a == one(); }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, unsigned long e) const;
    bool is_unit(const Elem& a) const;
    Elem inv(const Elem& a) const;

    // nu(a), normalized so nu(ell) = 1; TOP when a = 0 at precision N.
    // Callers must treat TOP as ">= N", never as literal infinity.
    ExtVal valuation(const Elem& a) const;
    // exact division of representatives by ell^k; the result is canonical
    // only modulo ell^(N-k) - precision bookkeeping is the caller's job
    Elem div_ell_pow(const Elem& a, long k) const;

    FiniteField::Elem reduce(const Elem& a) const;
    Elem lift_residue(const FiniteField::Elem& a) const;
    // the unique multiplicative lift: x = residue mod ell, x^(ell^m) = x
    Elem teichmueller(const FiniteField::Elem& residue) const;

    Elem canonical(Elem a) const;  // reduce coefficients into [0, ell^N)

private:
    WittRing(int64_t ell, IntPoly lift, int precision, FiniteField::Ptr residue);

    int64_t ell_;
    int m_;
    int precision_;
    Int modulus_;
    IntPoly lift_;
    FiniteField::Ptr residue_;
};

// Polynomial over a Witt ring, constant term first, exact-zero leading
// coefficients trimmed.
struct WittPoly {
    WittRing::Ptr R;
    std::vector<WittRing::Elem> c;

    WittPoly() = default;
    WittPoly(WittRing::Ptr ring, std::vector<WittRing::Elem> coeffs);
    static WittPoly from_int_poly(WittRing::Ptr ring, const IntPoly& f);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    // leading coefficient is exactly 1
    bool monic_exact() const;
    WittRing::Elem coeff(long i) const;
    void normalize();
    std::string str(const std::string& var = "t") const;
};

bool operator==(const WittPoly& a, const WittPoly& b);
bool operator!=(const WittPoly& a, const WittPoly& b);

WittPoly wp_add(const WittPoly& a, const WittPoly& b);
WittPoly wp_sub(const WittPoly& a, const WittPoly& b);
WittPoly wp_mul(const WittPoly& a, const WittPoly& b);
WittPoly wp_scale(const WittPoly& a, const WittRing::Elem& s);
std::pair<WittPoly, WittPoly> wp_divmod_monic(const WittPoly& a, const WittPoly& b);
WittRing::Elem wp_eval(const WittPoly& a, const WittRing::Elem& x);
WittPoly wp_shift_var(const WittPoly& a, const WittRing::Elem& s);  // a(t + s)
FFPoly wp_reduce(const WittPoly& a);
// re-reduce into a ring of the same residue data but lower precision
WittPoly wp_to_ring(const WittPoly& a, const WittRing::Ptr& ring);

// Rectangular matrix over a Witt ring, row major.
struct WittMatrix {
    WittRing::Ptr R;
    long rows = 0, cols = 0;
    std::vector<WittRing::Elem> e;

    WittMatrix() = default;
    WittMatrix(WittRing::Ptr ring, long r, long c);
    WittRing::Elem& at(long i, long j) { return e[i * cols + j]; }
    const WittRing::Elem& at(long i, long j) const { return e[i * cols + j]; }
    static WittMatrix identity(WittRing::Ptr ring, long n);
};

bool operator==(const WittMatrix& a, const WittMatrix& b);
WittMatrix wm_mul(const WittMatrix& a, const WittMatrix& b);
WittMatrix wm_add(const WittMatrix& a, const WittMatrix& b);
WittMatrix wm_sub(const WittMatrix& a, const WittMatrix& b);
FFMatrix wm_reduce(const WittMatrix& a);
WittMatrix wm_to_ring(const WittMatrix& a, const WittRing::Ptr& ring);
// det(t I - M), computed division-free (Berkowitz)
WittPoly wm_charpoly(const WittMatrix& m);

// Two-factor Hensel lifting: f monic over the ring, g0 * h0 = f mod ell
// with g0, h0 monic and coprime.  Returns the unique monic (G, H) with
// G*H = f at full precision.
std::pair<WittPoly, WittPoly> hensel_lift_pair(const WittPoly& f, const FFPoly& g0,
                                               const FFPoly& h0);
// n-way version; parts must be pairwise coprime monic with product f mod ell
std::vector<WittPoly> hensel_lift_groups(const WittPoly& f, const std::vector<FFPoly>& parts);
// Entry point of the grouped lift from an integer polynomial: groups are
// (hbar_i, d_i) with hbar_i irreducible over F_ell, and the returned f_i
// satisfy f_i = hbar_i^(d_i) mod ell, prod f_i = f mod ell^precision.
std::vector<WittPoly> hensel_lift_grouped(const IntPoly& f,
                                          const std::vector<std::pair<FFPoly, int>>& groups,
                                          int64_t ell, int precision);

// Smith normal form over the local ring, minimal-valuation pivoting.
struct SnfResult {
    std::vector<ExtVal> divisors;  // nondecreasing valuations e_1 <= e_2 <= ...
    WittMatrix left, right;        // left * M * right = diag(ell^e_i) at precision
    bool exhausted = false;        // some divisor is TOP
};
SnfResult snf_local_raw(const WittMatrix& m);
// Throws PrecisionExhausted when a divisor is TOP (the cokernel cannot be
// certified at this precision).
std::vector<long> smith_normal_form_local(const WittMatrix& m, WittMatrix* left = nullptr,
                                          WittMatrix* right = nullptr);

// Bezout data over a finite field: returns (g, s, t) with s*a + t*b = g monic.
std::tuple<FFPoly, FFPoly, FFPoly> ff_ext_gcd(const FFPoly& a, const FFPoly& b);

}  // namespace atlas
