#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "atlas/int_poly.hpp"

namespace atlas {

// F_{ell^m} presented as F_ell[y]/hbar(y).  The prime field is the m = 1
// case with hbar = y.  Elements are coefficient vectors of length m with
// entries in [0, ell).
class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    using Elem = std::vector<int64_t>;
    using Ptr = std::shared_ptr<const FiniteField>;

    // hbar: constant term first, monic, irreducible over F_ell.
    static Ptr make(int64_t ell, std::vector<int64_t> hbar);
    static Ptr prime_field(int64_t ell);

    int64_t ell() const { return ell_; }
    int deg() const { return m_; }
    const std::vector<int64_t>& modulus() const { return hbar_; }
    bool is_prime_field() const { return m_ == 1; }
    // ell^m as big integer
    Int order() const;

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem from_int(const Int& n) const;
    Elem from_int(int64_t n) const;
    // the class of y (generator of the extension presentation)
    Elem gen() const;

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(Elem a, Int e) const;
    // x -> x^ell (arithmetic Frobenius)
    Elem frobenius(const Elem& a) const;
    // the unique b with b^ell = a
    Elem pth_root(const Elem& a) const;

    // enumeration helper: element with base-ell digits of idx, 0 <= idx < ell^m
    Elem elem_at(uint64_t idx) const;
    Elem random_elem(std::mt19937_64& rng) const;

private:
    FiniteField(int64_t ell, std::vector<int64_t> hbar);
    int64_t mod_scalar(int64_t x) const;

    int64_t ell_;
    int m_;
    std::vector<int64_t> hbar_;  // monic, length m_+1
};

// Polynomial over a finite field, constant term first, normalized.
struct FFPoly {
    FiniteField::Ptr F;
    std::vector<FiniteField::Elem> c;

    FFPoly() = default;
    FFPoly(FiniteField::Ptr field, std::vector<FiniteField::Elem> coeffs);
    // scalar coefficients, embedded via from_int
    static FFPoly from_ints(FiniteField::Ptr field, const std::vector<int64_t>& coeffs);
    static FFPoly from_int_poly(FiniteField::Ptr field, const IntPoly& f);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const;
    FiniteField::Elem coeff(long i) const;
    FiniteField::Elem leading() const;
    void normalize();

    std::string str(const std::string& var = "t") const;
};

bool operator==(const FFPoly& a, const FFPoly& b);
bool operator!=(const FFPoly& a, const FFPoly& b);
// total order used for canonical factor lists: by degree, then coefficient
// tuples from the constant term up
bool ff_poly_less(const FFPoly& a, const FFPoly& b);

FFPoly ff_add(const FFPoly& a, const FFPoly& b);
FFPoly ff_sub(const FFPoly& a, const FFPoly& b);
FFPoly ff_mul(const FFPoly& a, const FFPoly& b);
FFPoly ff_scale(const FFPoly& a, const FiniteField::Elem& s);
FFPoly ff_monic(const FFPoly& a);
std::pair<FFPoly, FFPoly> ff_divmod(const FFPoly& a, const FFPoly& b);
FFPoly ff_gcd(FFPoly a, FFPoly b);  // monic
FFPoly ff_derivative(const FFPoly& a);
FFPoly ff_pow_mod(const FFPoly& base, const Int& e, const FFPoly& mod);
FiniteField::Elem ff_eval(const FFPoly& a, const FiniteField::Elem& x);
FFPoly ff_shift_var(const FFPoly& a, const FiniteField::Elem& s);  // a(t + s)
FFPoly ff_pow(const FFPoly& a, unsigned long e);

bool ff_is_irreducible(const FFPoly& f);

// Distinct factors with multiplicities, monic, sorted by ff_poly_less.
// Squarefree split + distinct-degree + seeded Cantor-Zassenhaus splitting;
// output is deterministic for a fixed seed.
std::vector<std::pair<FFPoly, int>> ff_factor(const FFPoly& f, uint64_t seed = 0);

// Dense matrix over a finite field, row major.
struct FFMatrix {
    FiniteField::Ptr F;
    long rows = 0, cols = 0;
    std::vector<FiniteField::Elem> e;

    FFMatrix() = default;
    FFMatrix(FiniteField::Ptr field, long r, long c);
    FiniteField::Elem& at(long i, long j) { return e[i * cols + j]; }
    const FiniteField::Elem& at(long i, long j) const { return e[i * cols + j]; }
    static FFMatrix identity(FiniteField::Ptr field, long n);
};

bool operator==(const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_mat_mul(const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_mat_add(const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_mat_sub(const FFMatrix& a, const FFMatrix& b);
FFMatrix ff_mat_pow(const FFMatrix& a, unsigned long e);
long ff_mat_rank(FFMatrix a);
FFMatrix ff_kronecker(const FFMatrix& a, const FFMatrix& b);
// basis of the left kernel {w : w A = 0}, as rows
FFMatrix ff_left_kernel(const FFMatrix& a);

}  // namespace atlas
