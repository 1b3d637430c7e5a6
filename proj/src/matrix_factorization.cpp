#include "atlas/matrix_factorization.hpp"

#include <algorithm>

#include "atlas/errors.hpp"

namespace atlas {

PolyMat::PolyMat(WittRing::Ptr ring, long size)
    : R(std::move(ring)), n(size), e(size * size, WittPoly(R, {})) {}

PolyMat PolyMat::scalar(WittRing::Ptr ring, long size, const WittPoly& p) {
    PolyMat m(ring, size);
    for (long i = 0; i < size; ++i) m.at(i, i) = p;
    return m;
}

bool operator==(const PolyMat& a, const PolyMat& b) { return a.n == b.n && a.e == b.e; }

PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
    check_internal(a.n == b.n, "pm_mul: dimension mismatch");
    PolyMat r(a.R, a.n);
    for (long i = 0; i < a.n; ++i)
        for (long k = 0; k < a.n; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (long j = 0; j < a.n; ++j)
                r.at(i, j) = wp_add(r.at(i, j), wp_mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

namespace {

// Berkowitz over W[t]: char poly of the matrix in a fresh variable u,
// returned leading-first with coefficients in W[t].
std::vector<WittPoly> pm_charpoly_coeffs(const PolyMat& m) {
    const auto& R = m.R;
    long n = m.n;
    WittPoly one(R, {R->one()});
    if (n == 0) return {one};
    auto neg = [&](const WittPoly& p) { return wp_sub(WittPoly(R, {}), p); };
    std::vector<WittPoly> p = {one, neg(m.at(n - 1, n - 1))};
    for (long j = n - 2; j >= 0; --j) {
        long k = n - 1 - j;
        std::vector<WittPoly> t(k + 2, WittPoly(R, {}));
        t[0] = one;
        t[1] = neg(m.at(j, j));
        std::vector<WittPoly> v(k);
        for (long i = 0; i < k; ++i) v[i] = m.at(j + 1 + i, j);
        for (long i = 2; i <= k + 1; ++i) {
            WittPoly dot(R, {});
            for (long s = 0; s < k; ++s) dot = wp_add(dot, wp_mul(m.at(j, j + 1 + s), v[s]));
            t[i] = neg(dot);
            if (i <= k) {
                std::vector<WittPoly> nv(k, WittPoly(R, {}));
                for (long r2 = 0; r2 < k; ++r2)
                    for (long s = 0; s < k; ++s)
                        nv[r2] = wp_add(nv[r2], wp_mul(m.at(j + 1 + r2, j + 1 + s), v[s]));
                v = std::move(nv);
            }
        }
        std::vector<WittPoly> np(p.size() + 1, WittPoly(R, {}));
        for (size_t i = 0; i < np.size(); ++i)
            for (size_t s = 0; s <= i && s < t.size(); ++s)
                if (i - s < p.size()) np[i] = wp_add(np[i], wp_mul(t[s], p[i - s]));
        p = std::move(np);
    }
    return p;
}

}  // namespace

WittPoly pm_det(const PolyMat& a) {
    auto cp = pm_charpoly_coeffs(a);
    WittPoly d = cp.back();  // char(0) = (-1)^n det
    if (a.n % 2 == 1) d = wp_sub(WittPoly(a.R, {}), d);
    return d;
}

PolyMat pm_adjugate(const PolyMat& a) {
    // Cayley-Hamilton: adj(A) = (-1)^(n+1) (A^(n-1) + c_1 A^(n-2) + ... + c_(n-1) I)
    const auto& R = a.R;
    long n = a.n;
    auto cp = pm_charpoly_coeffs(a);  // leading-first, length n+1
    PolyMat acc(R, n);
    if (n == 0) return acc;
    acc = PolyMat::scalar(R, n, cp[0]);  // = I
    for (long k = 1; k <= n - 1; ++k) {
        acc = pm_mul(acc, a);
        for (long i = 0; i < n; ++i) acc.at(i, i) = wp_add(acc.at(i, i), cp[k]);
    }
    if (n % 2 == 0)
        for (auto& p : acc.e) p = wp_sub(WittPoly(R, {}), p);
    return acc;
}

PolyMat pm_to_ring(const PolyMat& a, const WittRing::Ptr& ring) {
    PolyMat r(ring, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = wp_to_ring(a.e[i], ring);
    return r;
}

bool verify_factorization(const MatrixFactorization& mf) {
    if (mf.X.n != mf.r || mf.Y.n != mf.r) return false;
    PolyMat prod = pm_mul(mf.Y, mf.X);
    if (!(prod == PolyMat::scalar(mf.X.R, mf.r, mf.f1))) return false;
    return pm_det(mf.X) == mf.f;
}

MatrixFactorization factorization_from_generators(const LatticeModel& model,
                                                  const YoungPolygon& partition) {
    const auto& R = model.ring;
    const auto& parts = partition.parts();
    long r = partition.rows();
    long d = partition.total();
    check_internal(model.op.rows == d, "factorization_from_generators: partition size mismatch");

    std::vector<long> start(r + 1, 0);
    for (long s = 0; s < r; ++s) start[s + 1] = start[s] + parts[s];

    // X[j][i] = t^(m_i) delta_ji - a_ji(t), read from the block-end columns
    PolyMat x(R, r);
    for (long i = 0; i < r; ++i) {
        long col = start[i] + parts[i] - 1;
        for (long j = 0; j < r; ++j) {
            std::vector<WittRing::Elem> a_ji(parts[j], R->zero());
            for (long k = 0; k < parts[j]; ++k) a_ji[k] = model.op.at(start[j] + k, col);
            WittPoly entry(R, std::move(a_ji));
            entry = wp_sub(WittPoly(R, {}), entry);
            if (i == j) {
                std::vector<WittRing::Elem> mono(parts[i] + 1, R->zero());
                mono[parts[i]] = R->one();
                entry = wp_add(entry, WittPoly(R, std::move(mono)));
            }
            x.at(j, i) = std::move(entry);
        }
    }

    WittPoly f = pm_det(x);
    check_internal(f == model.charpoly, "factorization_from_generators: det X != char poly");
    WittPoly f1 = model.charpoly;

    // Y = f1 * X^(-1) through the adjugate; every entry division is exact
    PolyMat adj = pm_adjugate(x);
    PolyMat y(R, r);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            auto [q, rem] = wp_divmod_monic(wp_mul(f1, adj.at(i, j)), f);
            if (!rem.is_zero())
                throw NotPolynomial("factorization_from_generators: f1*X^-1 has a denominator");
            y.at(i, j) = std::move(q);
        }

    MatrixFactorization mf{std::move(x), std::move(y), std::move(f), std::move(f1), r};
    check_internal(verify_factorization(mf), "factorization_from_generators: verification failed");
    return mf;
}

MatrixFactorization swap_partner(const MatrixFactorization& mf) {
    if (!verify_factorization(mf))
        throw error(errc::parse, "swap_partner: input is not a matrix factorization");
    WittPoly detY = pm_det(mf.Y);
    // certify det Y = f1^r / f
    WittPoly pow(mf.X.R, {mf.X.R->one()});
    for (long i = 0; i < mf.r; ++i) pow = wp_mul(pow, mf.f1);
    if (wp_mul(detY, mf.f) != pow)
        throw NotPolynomial("swap_partner: det Y * f != f1^r at precision");
    MatrixFactorization out{mf.Y, mf.X, detY, mf.f1, mf.r};
    check_internal(verify_factorization(out), "swap_partner: swapped pair fails verification");
    return out;
}

namespace {

struct FFPolyMat {
    FiniteField::Ptr F;
    long n = 0;
    std::vector<FFPoly> e;
    FFPoly& at(long i, long j) { return e[i * n + j]; }
    const FFPoly& at(long i, long j) const { return e[i * n + j]; }
};

// diagonalization over the PID F_q[t] by Euclidean pivoting:
// degree-minimal pivot, ties to the lowest row index, then column
std::vector<FFPoly> ffpm_diagonalize(FFPolyMat a) {
    std::vector<FFPoly> diag;
    long n = a.n;
    for (long k = 0; k < n; ++k) {
        for (;;) {
            long pi = -1, pj = -1;
            long best = -1;
            for (long i = k; i < n; ++i)
                for (long j = k; j < n; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    if (best < 0 || a.at(i, j).degree() < best) {
                        best = a.at(i, j).degree();
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                diag.push_back(FFPoly(a.F, {}));
                break;
            }
            if (pi != k)
                for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pi, j));
            if (pj != k)
                for (long i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, pj));
            bool clean = true;
            for (long i = k + 1; i < n; ++i) {
                if (a.at(i, k).is_zero()) continue;
                FFPoly q = ff_divmod(a.at(i, k), a.at(k, k)).first;
                for (long j = 0; j < n; ++j)
                    a.at(i, j) = ff_sub(a.at(i, j), ff_mul(q, a.at(k, j)));
                if (!a.at(i, k).is_zero()) clean = false;
            }
            for (long j = k + 1; j < n; ++j) {
                if (a.at(k, j).is_zero()) continue;
                FFPoly q = ff_divmod(a.at(k, j), a.at(k, k)).first;
                for (long i = 0; i < n; ++i)
                    a.at(i, j) = ff_sub(a.at(i, j), ff_mul(q, a.at(i, k)));
                if (!a.at(k, j).is_zero()) clean = false;
            }
            if (clean) {
                diag.push_back(ff_monic(a.at(k, k)));
                break;
            }
        }
    }
    return diag;
}

}  // namespace

std::pair<long, YoungPolygon> cokernel_module_type(const PolyMat& x, const WittPoly& f1) {
    const auto& R = x.R;
    // f1 = t^(deg f1) mod ell
    FFPoly f1bar = wp_reduce(f1);
    bool ok = f1bar.degree() == f1.degree();
    for (long i = 0; ok && i < f1bar.degree(); ++i)
        if (!f1bar.F->is_zero(f1bar.coeff(i))) ok = false;
    if (!ok) throw error(errc::parse, "cokernel_module_type: f1 must reduce to t^deg");

    WittPoly det = pm_det(x);
    if (det.is_zero()) throw SingularPresentation("cokernel_module_type: det X = 0 at precision");

    FFPolyMat xbar{R->residue_field(), x.n, {}};
    xbar.e.reserve(x.e.size());
    for (const auto& p : x.e) xbar.e.push_back(wp_reduce(p));
    bool all_zero = true;
    for (const auto& p : xbar.e)
        if (!p.is_zero()) all_zero = false;
    if (all_zero && x.n > 0) throw SingularPresentation("cokernel_module_type: X = 0 mod ell");

    auto diag = ffpm_diagonalize(std::move(xbar));
    std::vector<long> parts;
    for (const auto& dpoly : diag) {
        if (dpoly.is_zero()) throw SingularPresentation("cokernel_module_type: det X = 0 mod ell");
        long deg = dpoly.degree();
        // diagonal entries are powers of t since their product is unit * t^d
        for (long i = 0; i < deg; ++i)
            check_internal(dpoly.F->is_zero(dpoly.coeff(i)),
                           "cokernel_module_type: diagonal entry is not a power of t");
        if (deg > 0) parts.push_back(deg);
    }
    return {det.degree(), YoungPolygon(std::move(parts))};
}

}  // namespace atlas
