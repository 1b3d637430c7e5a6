#include "atlas/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

bool scalar_poly_is_irreducible(int64_t ell, const std::vector<int64_t>& hbar);

}  // namespace

FiniteField::FiniteField(int64_t ell, std::vector<int64_t> hbar)
    : ell_(ell), m_(static_cast<int>(hbar.size()) - 1), hbar_(std::move(hbar)) {}

FiniteField::Ptr FiniteField::make(int64_t ell, std::vector<int64_t> hbar) {
    if (ell < 2 || ell >= (int64_t(1) << 31)) throw error(errc::parse, "ell out of range");
    for (int64_t d = 2; d * d <= ell; ++d)
        if (ell % d == 0) throw error(errc::parse, "ell is not prime");
    if (hbar.size() < 2) throw error(errc::parse, "tower polynomial must have degree >= 1");
    for (auto& x : hbar) x = ((x % ell) + ell) % ell;
    if (hbar.back() != 1) throw error(errc::parse, "tower polynomial must be monic");
    if (hbar.size() > 2 && !scalar_poly_is_irreducible(ell, hbar))
        throw NotIrreducible("tower polynomial is reducible over F_ell");
    return Ptr(new FiniteField(ell, std::move(hbar)));
}

FiniteField::Ptr FiniteField::prime_field(int64_t ell) { return make(ell, {0, 1}); }

int64_t FiniteField::mod_scalar(int64_t x) const { return ((x % ell_) + ell_) % ell_; }

Int FiniteField::order() const {
    Int q = 1;
    for (int i = 0; i < m_; ++i) q *= ell_;
    return q;
}

FiniteField::Elem FiniteField::one() const {
    Elem e(m_, 0);
    e[0] = 1;
    return e;
}

FiniteField::Elem FiniteField::from_int(const Int& n) const {
    Elem e(m_, 0);
    Int r = n % ell_;
    if (r < 0) r += ell_;
    e[0] = r.get_si();
    return e;
}

FiniteField::Elem FiniteField::from_int(int64_t n) const {
    Elem e(m_, 0);
    e[0] = mod_scalar(n);
    return e;
}

FiniteField::Elem FiniteField::gen() const {
    if (m_ == 1) throw InternalError("gen() on a prime field");
    Elem e(m_, 0);
    e[1] = 1;
    return e;
}

bool FiniteField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](int64_t x) { return x == 0; });
}

bool FiniteField::is_one(const Elem& a) const { return a == one(); }

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) e[i] = (a[i] + b[i]) % ell_;
    return e;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) e[i] = mod_scalar(a[i] - b[i]);
    return e;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) e[i] = mod_scalar(-a[i]);
    return e;
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    // schoolbook product then reduction by the monic tower polynomial
    std::vector<int64_t> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % ell_;
    }
    for (int k = 2 * m_ - 2; k >= m_; --k) {
        int64_t t = prod[k];
        if (t == 0) continue;
        prod[k] = 0;
        for (int j = 0; j < m_; ++j)
            prod[k - m_ + j] = mod_scalar(prod[k - m_ + j] - t * hbar_[j]);
    }
    prod.resize(m_);
    return prod;
}

FiniteField::Elem FiniteField::pow(Elem a, Int e) const {
    check_internal(e >= 0, "pow: negative exponent");
    Elem acc = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

FiniteField::Elem FiniteField::inv(const Elem& a) const {
    if (is_zero(a)) throw error(errc::parse, "inverse of zero");
    return pow(a, order() - 2);
}

FiniteField::Elem FiniteField::frobenius(const Elem& a) const { return pow(a, Int(ell_)); }

FiniteField::Elem FiniteField::pth_root(const Elem& a) const {
    // Frobenius has order m, so x -> x^(ell^(m-1)) inverts it.
    Elem r = a;
    for (int i = 0; i < m_ - 1; ++i) r = frobenius(r);
    return r;
}

FiniteField::Elem FiniteField::elem_at(uint64_t idx) const {
    Elem e(m_, 0);
    for (int i = 0; i < m_; ++i) {
        e[i] = static_cast<int64_t>(idx % ell_);
        idx /= ell_;
    }
    return e;
}

FiniteField::Elem FiniteField::random_elem(std::mt19937_64& rng) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) e[i] = static_cast<int64_t>(rng() % ell_);
    return e;
}

// ---------------------------------------------------------------------------
// FFPoly

FFPoly::FFPoly(FiniteField::Ptr field, std::vector<FiniteField::Elem> coeffs)
    : F(std::move(field)), c(std::move(coeffs)) {
    normalize();
}

FFPoly FFPoly::from_ints(FiniteField::Ptr field, const std::vector<int64_t>& coeffs) {
    std::vector<FiniteField::Elem> v;
    v.reserve(coeffs.size());
    for (auto x : coeffs) v.push_back(field->from_int(x));
    return FFPoly(field, std::move(v));
}

FFPoly FFPoly::from_int_poly(FiniteField::Ptr field, const IntPoly& f) {
    std::vector<FiniteField::Elem> v;
    v.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) v.push_back(field->from_int(x));
    return FFPoly(field, std::move(v));
}

void FFPoly::normalize() {
    while (!c.empty() && F->is_zero(c.back())) c.pop_back();
}

bool FFPoly::is_monic() const { return !c.empty() && F->is_one(c.back()); }

FiniteField::Elem FFPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c.size())) return F->zero();
    return c[i];
}

FiniteField::Elem FFPoly::leading() const {
    if (c.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c.back();
}

std::string FFPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const auto a = coeff(i);
        if (F->is_zero(a)) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs;
        if (F->deg() == 1) {
            cs = std::to_string(a[0]);
        } else {
            std::ostringstream cos;
            bool cf = true;
            for (int j = F->deg() - 1; j >= 0; --j) {
                if (a[j] == 0) continue;
                if (!cf) cos << "+";
                cf = false;
                if (a[j] != 1 || j == 0) cos << a[j];
                if (j > 0) {
                    if (a[j] != 1) cos << "*";
                    cos << "y";
                    if (j > 1) cos << "^" << j;
                }
            }
            cs = cos.str();
            if (cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
        }
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool operator==(const FFPoly& a, const FFPoly& b) { return a.c == b.c; }
bool operator!=(const FFPoly& a, const FFPoly& b) { return !(a == b); }

bool ff_poly_less(const FFPoly& a, const FFPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
}

FFPoly ff_add(const FFPoly& a, const FFPoly& b) {
    const auto& F = a.F;
    std::vector<FiniteField::Elem> v(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = F->add(a.coeff(i), b.coeff(i));
    return FFPoly(F, std::move(v));
}

FFPoly ff_sub(const FFPoly& a, const FFPoly& b) {
    const auto& F = a.F;
    std::vector<FiniteField::Elem> v(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = F->sub(a.coeff(i), b.coeff(i));
    return FFPoly(F, std::move(v));
}

FFPoly ff_mul(const FFPoly& a, const FFPoly& b) {
    const auto& F = a.F;
    if (a.is_zero() || b.is_zero()) return FFPoly(F, {});
    std::vector<FiniteField::Elem> v(a.c.size() + b.c.size() - 1, F->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (F->is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            v[i + j] = F->add(v[i + j], F->mul(a.c[i], b.c[j]));
    }
    return FFPoly(F, std::move(v));
}

FFPoly ff_scale(const FFPoly& a, const FiniteField::Elem& s) {
    std::vector<FiniteField::Elem> v(a.c);
    for (auto& x : v) x = a.F->mul(x, s);
    return FFPoly(a.F, std::move(v));
}

FFPoly ff_monic(const FFPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return ff_scale(a, a.F->inv(a.leading()));
}

std::pair<FFPoly, FFPoly> ff_divmod(const FFPoly& a, const FFPoly& b) {
    const auto& F = a.F;
    if (b.is_zero()) throw error(errc::parse, "division by zero polynomial");
    long db = b.degree();
    auto rem = a.c;
    long dr = a.degree();
    if (dr < db) return {FFPoly(F, {}), a};
    std::vector<FiniteField::Elem> quo(dr - db + 1, F->zero());
    auto lead_inv = F->inv(b.leading());
    for (long i = dr; i >= db; --i) {
        if (F->is_zero(rem[i])) continue;
        auto q = F->mul(rem[i], lead_inv);
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] = F->sub(rem[i - db + j], F->mul(q, b.coeff(j)));
    }
    return {FFPoly(F, std::move(quo)), FFPoly(F, std::move(rem))};
}

FFPoly ff_gcd(FFPoly a, FFPoly b) {
    while (!b.is_zero()) {
        auto r = ff_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return ff_monic(a);
}

FFPoly ff_derivative(const FFPoly& a) {
    const auto& F = a.F;
    if (a.c.size() <= 1) return FFPoly(F, {});
    std::vector<FiniteField::Elem> v(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) v[i - 1] = F->mul(a.c[i], F->from_int(Int(i)));
    return FFPoly(F, std::move(v));
}

FFPoly ff_pow_mod(const FFPoly& base, const Int& e, const FFPoly& mod) {
    const auto& F = base.F;
    FFPoly acc = FFPoly::from_ints(F, {1});
    FFPoly b = ff_divmod(base, mod).second;
    Int n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = ff_divmod(ff_mul(acc, b), mod).second;
        b = ff_divmod(ff_mul(b, b), mod).second;
        n >>= 1;
    }
    return acc;
}

FiniteField::Elem ff_eval(const FFPoly& a, const FiniteField::Elem& x) {
    auto acc = a.F->zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = a.F->add(a.F->mul(acc, x), *it);
    return acc;
}

FFPoly ff_shift_var(const FFPoly& a, const FiniteField::Elem& s) {
    const auto& F = a.F;
    FFPoly acc(F, {});
    FFPoly lin(F, {s, F->one()});
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        acc = ff_add(ff_mul(acc, lin), FFPoly(F, {*it}));
    return acc;
}

FFPoly ff_pow(const FFPoly& a, unsigned long e) {
    FFPoly acc = FFPoly::from_ints(a.F, {1});
    FFPoly b = a;
    while (e > 0) {
        if (e & 1) acc = ff_mul(acc, b);
        b = ff_mul(b, b);
        e >>= 1;
    }
    return acc;
}

namespace {

bool scalar_poly_is_irreducible(int64_t ell, const std::vector<int64_t>& hbar) {
    auto F = FiniteField::prime_field(ell);
    std::vector<FiniteField::Elem> v;
    v.reserve(hbar.size());
    for (auto x : hbar) v.push_back(F->from_int(x));
    return ff_is_irreducible(FFPoly(F, std::move(v)));
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool ff_is_irreducible(const FFPoly& f) {
    const auto& F = f.F;
    long n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    Int q = F->order();
    FFPoly t = FFPoly::from_ints(F, {0, 1});
    // t^(q^n) == t mod f
    Int qn = 1;
    for (long i = 0; i < n; ++i) qn *= q;
    if (ff_pow_mod(t, qn, f) != ff_divmod(t, f).second) return false;
    for (long r : prime_divisors(n)) {
        Int qk = 1;
        for (long i = 0; i < n / r; ++i) qk *= q;
        FFPoly diff = ff_sub(ff_pow_mod(t, qk, f), t);
        if (ff_gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

namespace {

// f monic squarefree, all irreducible factors of degree d: split completely.
void equal_degree_split(const FFPoly& f, long d, std::mt19937_64& rng,
                        std::vector<FFPoly>& out) {
    const auto& F = f.F;
    long n = f.degree();
    if (n == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    Int q = F->order();
    FFPoly factor(F, {});
    for (;;) {
        // random polynomial of degree < n
        std::vector<FiniteField::Elem> v(n);
        for (long i = 0; i < n; ++i) v[i] = F->random_elem(rng);
        FFPoly a(F, std::move(v));
        if (a.is_zero()) continue;
        FFPoly g = ff_gcd(a, f);
        if (g.degree() > 0 && g.degree() < n) {
            factor = g;
            break;
        }
        if (F->ell() == 2) {
            // trace map over F_2: a + a^2 + ... + a^(2^(d*m - 1))
            long bits = d * F->deg();
            FFPoly tr = ff_divmod(a, f).second;
            FFPoly cur = tr;
            for (long i = 1; i < bits; ++i) {
                cur = ff_divmod(ff_mul(cur, cur), f).second;
                tr = ff_add(tr, cur);
            }
            g = ff_gcd(tr, f);
        } else {
            Int e = 1;
            for (long i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            FFPoly b = ff_pow_mod(a, e, f);
            g = ff_gcd(ff_sub(b, FFPoly::from_ints(F, {1})), f);
        }
        if (g.degree() > 0 && g.degree() < n) {
            factor = g;
            break;
        }
    }
    equal_degree_split(factor, d, rng, out);
    equal_degree_split(ff_divmod(f, factor).first, d, rng, out);
}

// monic squarefree input: factors grouped by distinct degree, then split
std::vector<FFPoly> factor_squarefree(const FFPoly& f, std::mt19937_64& rng) {
    const auto& F = f.F;
    std::vector<FFPoly> out;
    FFPoly rest = f;
    FFPoly t = FFPoly::from_ints(F, {0, 1});
    FFPoly h = ff_divmod(t, rest).second;  // t^(q^d) mod rest, iterated
    Int q = F->order();
    for (long d = 1; rest.degree() >= 2 * d; ++d) {
        h = ff_pow_mod(h, q, rest);
        FFPoly g = ff_gcd(ff_sub(h, t), rest);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            rest = ff_divmod(rest, g).first;
            h = ff_divmod(h, rest).second;
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

// f(t) = h(t)^ell coefficientwise; valid whenever f is a perfect ell-th power
FFPoly ell_th_root(const FFPoly& f) {
    const auto& F = f.F;
    long ell = F->ell();
    std::vector<FiniteField::Elem> v;
    for (long i = 0; i <= f.degree(); i += ell) v.push_back(F->pth_root(f.coeff(i)));
    return FFPoly(F, std::move(v));
}

void factor_rec(const FFPoly& f, int mult, std::mt19937_64& rng,
                std::vector<std::pair<FFPoly, int>>& out) {
    const auto& F = f.F;
    if (f.degree() <= 0) return;
    FFPoly fp = ff_derivative(f);
    if (fp.is_zero()) {
        factor_rec(ell_th_root(f), mult * static_cast<int>(F->ell()), rng, out);
        return;
    }
    // squarefree decomposition: z_i collects the distinct factors whose
    // multiplicity is exactly i (and prime to ell)
    FFPoly c = ff_gcd(f, fp);
    FFPoly w = ff_divmod(f, c).first;
    int i = 1;
    while (w.degree() > 0) {
        FFPoly y = ff_gcd(w, c);
        FFPoly z = ff_divmod(w, y).first;
        if (z.degree() > 0)
            for (const auto& g : factor_squarefree(z, rng)) out.emplace_back(g, i * mult);
        ++i;
        w = std::move(y);
        c = ff_divmod(c, w).first;
    }
    // what is left is a perfect ell-th power
    if (c.degree() > 0) factor_rec(ell_th_root(c), mult * static_cast<int>(F->ell()), rng, out);
}

}  // namespace

std::vector<std::pair<FFPoly, int>> ff_factor(const FFPoly& f, uint64_t seed) {
    if (f.is_zero()) throw error(errc::parse, "ff_factor: zero polynomial");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::pair<FFPoly, int>> out;
    factor_rec(ff_monic(f), 1, rng, out);
    // merge duplicates, sort canonically
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return ff_poly_less(a.first, b.first); });
    std::vector<std::pair<FFPoly, int>> merged;
    for (auto& fe : out) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(std::move(fe));
    }
    return merged;
}

// ---------------------------------------------------------------------------
// FFMatrix

FFMatrix::FFMatrix(FiniteField::Ptr field, long r, long c)
    : F(std::move(field)), rows(r), cols(c), e(r * c, F->zero()) {}

FFMatrix FFMatrix::identity(FiniteField::Ptr field, long n) {
    FFMatrix m(field, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

bool operator==(const FFMatrix& a, const FFMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
}

FFMatrix ff_mat_mul(const FFMatrix& a, const FFMatrix& b) {
    check_internal(a.cols == b.rows, "ff_mat_mul: dimension mismatch");
    FFMatrix r(a.F, a.rows, b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long k = 0; k < a.cols; ++k) {
            if (a.F->is_zero(a.at(i, k))) continue;
            for (long j = 0; j < b.cols; ++j)
                r.at(i, j) = a.F->add(r.at(i, j), a.F->mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

FFMatrix ff_mat_add(const FFMatrix& a, const FFMatrix& b) {
    check_internal(a.rows == b.rows && a.cols == b.cols, "ff_mat_add: dimension mismatch");
    FFMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.F->add(a.e[i], b.e[i]);
    return r;
}

FFMatrix ff_mat_sub(const FFMatrix& a, const FFMatrix& b) {
    check_internal(a.rows == b.rows && a.cols == b.cols, "ff_mat_sub: dimension mismatch");
    FFMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.F->sub(a.e[i], b.e[i]);
    return r;
}

FFMatrix ff_mat_pow(const FFMatrix& a, unsigned long e) {
    FFMatrix acc = FFMatrix::identity(a.F, a.rows);
    FFMatrix b = a;
    while (e > 0) {
        if (e & 1) acc = ff_mat_mul(acc, b);
        b = ff_mat_mul(b, b);
        e >>= 1;
    }
    return acc;
}

long ff_mat_rank(FFMatrix a) {
    const auto& F = a.F;
    long rank = 0;
    for (long col = 0; col < a.cols && rank < a.rows; ++col) {
        long pivot = -1;
        for (long i = rank; i < a.rows; ++i)
            if (!F->is_zero(a.at(i, col))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (long j = 0; j < a.cols; ++j) std::swap(a.at(rank, j), a.at(pivot, j));
        auto inv = F->inv(a.at(rank, col));
        for (long j = col; j < a.cols; ++j) a.at(rank, j) = F->mul(a.at(rank, j), inv);
        for (long i = 0; i < a.rows; ++i) {
            if (i == rank || F->is_zero(a.at(i, col))) continue;
            auto factor = a.at(i, col);
            for (long j = col; j < a.cols; ++j)
                a.at(i, j) = F->sub(a.at(i, j), F->mul(factor, a.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

FFMatrix ff_kronecker(const FFMatrix& a, const FFMatrix& b) {
    FFMatrix r(a.F, a.rows * b.rows, a.cols * b.cols);
    for (long i1 = 0; i1 < a.rows; ++i1)
        for (long j1 = 0; j1 < a.cols; ++j1) {
            if (a.F->is_zero(a.at(i1, j1))) continue;
            for (long i2 = 0; i2 < b.rows; ++i2)
                for (long j2 = 0; j2 < b.cols; ++j2)
                    r.at(i1 * b.rows + i2, j1 * b.cols + j2) =
                        a.F->mul(a.at(i1, j1), b.at(i2, j2));
        }
    return r;
}

FFMatrix ff_left_kernel(const FFMatrix& a) {
    // row reduce a^T and read off the null space of the transpose action
    const auto& F = a.F;
    FFMatrix t(F, a.cols, a.rows);
    for (long i = 0; i < a.rows; ++i)
        for (long j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    // kernel of t: vectors w (length a.rows) with t w = 0, i.e. w A = 0
    FFMatrix m = t;
    long n = m.cols;
    std::vector<long> pivot_col_of_row(m.rows, -1);
    std::vector<bool> is_pivot(n, false);
    long rank = 0;
    for (long col = 0; col < n && rank < m.rows; ++col) {
        long pivot = -1;
        for (long i = rank; i < m.rows; ++i)
            if (!F->is_zero(m.at(i, col))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (long j = 0; j < n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        auto inv = F->inv(m.at(rank, col));
        for (long j = 0; j < n; ++j) m.at(rank, j) = F->mul(m.at(rank, j), inv);
        for (long i = 0; i < m.rows; ++i) {
            if (i == rank || F->is_zero(m.at(i, col))) continue;
            auto factor = m.at(i, col);
            for (long j = 0; j < n; ++j)
                m.at(i, j) = F->sub(m.at(i, j), F->mul(factor, m.at(rank, j)));
        }
        pivot_col_of_row[rank] = col;
        is_pivot[col] = true;
        ++rank;
    }
    FFMatrix basis(F, n - rank, n);
    long row = 0;
    for (long free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(row, free_col) = F->one();
        for (long r = 0; r < rank; ++r)
            basis.at(row, pivot_col_of_row[r]) = F->neg(m.at(r, free_col));
        ++row;
    }
    return basis;
}

}  // namespace atlas
