#include "atlas/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "atlas/errors.hpp"

namespace atlas {

LatticeModel construct_lift(const WittPoly& q, const YoungPolygon& partition) {
    const auto& R = q.R;
    long d = q.degree();
    if (!q.monic_exact() || d < 1)
        throw error(errc::parse, "construct_lift: Q must be monic of degree >= 1");
    FFPoly qbar = wp_reduce(q);
    bool is_td = qbar.degree() == d;
    for (long i = 0; i < d && is_td; ++i)
        if (!qbar.F->is_zero(qbar.coeff(i))) is_td = false;
    if (!is_td) throw error(errc::parse, "construct_lift: Q must reduce to t^d mod ell");
    if (partition.total() != d)
        throw DimensionMismatch("construct_lift: partition total differs from deg Q");
    if (!dominates(NewtonPolygon::of(q), partition))
        throw NotDominated("construct_lift: Newton polygon lies below the Young polygon of " +
                           partition.str());

    const auto& parts = partition.parts();
    long r = partition.rows();
    int out_prec = R->precision() - static_cast<int>(r - 1);
    if (out_prec < 1)
        throw PrecisionExhausted("construct_lift: need precision > " + std::to_string(r - 1));

    auto a = [&](long j) { return q.coeff(d - j); };  // Q = t^d + a_1 t^(d-1) + ...

    // basis order: v_1, x v_1, ..., x^(m_1-1) v_1, v_2, ...
    std::vector<long> start(r + 1, 0);
    for (long s = 0; s < r; ++s) start[s + 1] = start[s] + parts[s];

    WittMatrix mat(R, d, d);
    for (long s = 1; s <= r; ++s) {
        long ms = parts[s - 1];
        long m = start[s];  // m_1 + ... + m_s
        for (long k = 0; k + 1 < ms; ++k) {
            // x * x^k v_s = x^(k+1) v_s
            mat.at(start[s - 1] + k + 1, start[s - 1] + k) = R->one();
        }
        long col = start[s - 1] + ms - 1;
        // x^(m_s) v_s = ell v_(s+1) - sum_(j > m - m_s) (a_j / ell^(s-1)) x^(m-j) v_1
        if (s < r) mat.at(start[s], col) = R->from_int(R->ell());
        for (long j = m - ms + 1; j <= m; ++j) {
            auto aj = a(j);
            ExtVal v = R->valuation(aj);
            // dominance forces nu(a_j) >= s here (u_s correction lies in T)
            check_internal(v >= ExtVal::finite(s), "construct_lift: u_s membership violated");
            auto entry = R->neg(R->div_ell_pow(aj, s - 1));
            mat.at(m - j, col) = R->add(mat.at(m - j, col), entry);
        }
    }

    auto Rout = R->with_precision(out_prec);
    LatticeModel model{Rout, wm_to_ring(mat, Rout), wp_to_ring(q, Rout)};

    check_internal(wm_charpoly(model.op) == model.charpoly,
                   "construct_lift: characteristic polynomial mismatch");
    check_internal(nilpotent_jordan_type(wm_reduce(model.op)) == partition,
                   "construct_lift: reduction has wrong Jordan type");
    return model;
}

YoungPolygon nilpotent_jordan_type(const FFMatrix& nbar) {
    check_internal(nbar.rows == nbar.cols, "nilpotent_jordan_type: matrix not square");
    long d = nbar.rows;
    if (d == 0) return YoungPolygon(std::vector<long>{});
    // r_k = rank(N^k); number of blocks of size >= k is r_(k-1) - r_k
    std::vector<long> rank{d};
    FFMatrix pw = nbar;
    for (long k = 1; k <= d; ++k) {
        rank.push_back(ff_mat_rank(pw));
        if (rank.back() == 0) break;
        pw = ff_mat_mul(pw, nbar);
    }
    if (rank.back() != 0) throw NotNilpotent("nilpotent_jordan_type: matrix is not nilpotent");
    std::vector<long> ge;  // ge[k] = #blocks of size >= k+1
    for (size_t k = 1; k < rank.size(); ++k) ge.push_back(rank[k - 1] - rank[k]);
    std::vector<long> parts;
    for (size_t k = 0; k < ge.size(); ++k) {
        long exactly = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
        for (long i = 0; i < exactly; ++i) parts.push_back(static_cast<long>(k + 1));
    }
    return YoungPolygon(std::move(parts));
}

FFMatrix canonical_nilpotent(FiniteField::Ptr field, const YoungPolygon& partition) {
    long d = partition.total();
    FFMatrix n(field, d, d);
    long pos = 0;
    for (long m : partition.parts()) {
        for (long k = 0; k + 1 < m; ++k) n.at(pos + k + 1, pos + k) = field->one();
        pos += m;
    }
    return n;
}

FFMatrix frobenius_matrix(const FFPoly& hbar, const YoungPolygon& partition) {
    const auto& F = hbar.F;
    if (!F->is_prime_field())
        throw error(errc::parse, "frobenius_matrix: hbar must be a polynomial over F_ell");
    if (!ff_is_irreducible(hbar)) throw NotIrreducible("frobenius_matrix: hbar is reducible");
    long dh = hbar.degree();
    long d = partition.total();
    // companion matrix of hbar
    FFMatrix comp(F, dh, dh);
    for (long i = 0; i + 1 < dh; ++i) comp.at(i + 1, i) = F->one();
    for (long i = 0; i < dh; ++i) comp.at(i, dh - 1) = F->neg(hbar.coeff(i));
    FFMatrix n = canonical_nilpotent(F, partition);
    return ff_mat_add(ff_kronecker(comp, FFMatrix::identity(F, d)),
                      ff_kronecker(FFMatrix::identity(F, dh), n));
}

namespace {

// sublattice spanned by an invariant hyperplane of T/ellT plus ell*T;
// returns the induced matrix of x at one level less precision
LatticeModel sublattice_model(const LatticeModel& model, const std::vector<FiniteField::Elem>& phi) {
    const auto& R = model.ring;
    auto F = R->residue_field();
    long d = model.op.rows;
    long pcol = -1;
    for (long j = 0; j < d; ++j)
        if (!F->is_zero(phi[j])) {
            pcol = j;
            break;
        }
    check_internal(pcol >= 0, "sublattice_model: zero functional");
    auto pinv = F->inv(phi[pcol]);

    // new basis: u_j = e_j - (phi_j/phi_p) e_p for j != p, and u_p = ell e_p
    WittMatrix b(R, d, d);
    for (long j = 0; j < d; ++j) {
        if (j == pcol) {
            b.at(pcol, pcol) = R->from_int(R->ell());
        } else {
            b.at(j, j) = R->one();
            b.at(pcol, j) = R->neg(R->lift_residue(F->mul(phi[j], pinv)));
        }
    }
    WittMatrix y = wm_mul(model.op, b);
    // solve B X = Y: rows except pcol are read off, the pcol row divides by ell
    WittMatrix x(R, d, d);
    for (long j = 0; j < d; ++j) {
        WittRing::Elem acc = y.at(pcol, j);
        for (long i = 0; i < d; ++i) {
            if (i == pcol) continue;
            x.at(i, j) = y.at(i, j);
            acc = R->add(acc, R->mul(R->lift_residue(F->mul(phi[i], pinv)), y.at(i, j)));
        }
        ExtVal v = R->valuation(acc);
        if (!(v >= ExtVal::finite(1)))
            throw InternalError("sublattice_model: hyperplane is not invariant");
        x.at(pcol, j) = R->div_ell_pow(acc, 1);
    }
    auto Rout = R->with_precision(R->precision() - 1);
    return LatticeModel{Rout, wm_to_ring(x, Rout), wp_to_ring(model.charpoly, Rout)};
}

void enumerate_rec(const LatticeModel& model, int depth, std::vector<LatticeModel>& out) {
    out.push_back(model);
    if (depth == 0) return;
    if (model.ring->precision() <= 1)
        throw PrecisionExhausted("enumerate_invariant_sublattices: precision spent");
    auto F = model.ring->residue_field();
    FFMatrix nbar = wm_reduce(model.op);
    FFMatrix kernel = ff_left_kernel(nbar);
    long k = kernel.rows;
    long d = model.op.rows;
    // projective points of the left kernel: first nonzero coordinate = 1
    for (long pivot = 0; pivot < k; ++pivot) {
        uint64_t count = 1;
        Int total = 1;
        for (long i = pivot + 1; i < k; ++i) total *= F->order();
        check_internal(total.fits_ulong_p(), "enumerate_invariant_sublattices: kernel too large");
        count = total.get_ui();
        for (uint64_t idx = 0; idx < count; ++idx) {
            // coefficients: c_pivot = 1, c_i for i > pivot from digits of idx
            std::vector<FiniteField::Elem> coef(k, F->zero());
            coef[pivot] = F->one();
            uint64_t rem = idx;
            Int qsz = F->order();
            check_internal(qsz.fits_ulong_p(), "field too large for enumeration");
            uint64_t qs = qsz.get_ui();
            for (long i = pivot + 1; i < k; ++i) {
                coef[i] = F->elem_at(rem % qs);
                rem /= qs;
            }
            std::vector<FiniteField::Elem> phi(d, F->zero());
            for (long i = 0; i < k; ++i) {
                if (F->is_zero(coef[i])) continue;
                for (long j = 0; j < d; ++j)
                    phi[j] = F->add(phi[j], F->mul(coef[i], kernel.at(i, j)));
            }
            enumerate_rec(sublattice_model(model, phi), depth - 1, out);
        }
    }
}

}  // namespace

std::vector<LatticeModel> enumerate_invariant_sublattices(const LatticeModel& model, int depth) {
    if (depth < 0) throw error(errc::parse, "enumerate_invariant_sublattices: negative depth");
    std::vector<LatticeModel> out;
    enumerate_rec(model, depth, out);
    return out;
}

std::vector<long> cokernel_group(const WittMatrix& op, const WittRing::Elem& shift) {
    const auto& R = op.R;
    check_internal(op.rows == op.cols, "cokernel_group: matrix not square");
    WittMatrix a(R, op.rows, op.cols);
    for (long i = 0; i < op.rows; ++i)
        for (long j = 0; j < op.cols; ++j)
            a.at(i, j) = i == j ? R->sub(shift, op.at(i, j)) : R->neg(op.at(i, j));
    auto res = snf_local_raw(a);
    if (res.exhausted)
        throw PrecisionExhausted("cokernel_group: shift*I - F is singular at precision " +
                                 std::to_string(R->precision()));
    std::vector<long> out;
    for (const auto& e : res.divisors) {
        if (e.v == 0) continue;
        for (int c = 0; c < R->deg(); ++c) out.push_back(e.v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> cokernel_group(const LatticeModel& model, const WittRing::Elem& shift) {
    return cokernel_group(model.op, shift);
}

}  // namespace atlas
