#include "atlas/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(long degree, const Int& c) {
    std::vector<Int> v(degree + 1, 0);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::from_leading_first(const std::vector<Int>& coeffs) {
    std::vector<Int> v(coeffs.rbegin(), coeffs.rend());
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(long i) const {
    static const Int zero = 0;
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[i];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& g) const {
    std::vector<Int> v(std::max(c_.size(), g.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + g.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& g) const {
    std::vector<Int> v(std::max(c_.size(), g.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - g.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& g) const {
    if (is_zero() || g.is_zero()) return IntPoly();
    std::vector<Int> v(c_.size() + g.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j) v[i + j] += c_[i] * g.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> v(c_);
    for (auto& x : v) x *= s;
    return IntPoly(std::move(v));
}

Int IntPoly::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly acc = IntPoly::constant(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

IntPoly IntPoly::shift_var(const Int& a) const {
    // Horner: f(t+a) = (...((c_d)(t+a) + c_{d-1})(t+a) + ...) + c_0
    IntPoly acc;
    IntPoly lin(std::vector<Int>{a, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + IntPoly::constant(*it);
    return acc;
}

IntPoly IntPoly::scale_var(const Int& s) const {
    std::vector<Int> v(c_);
    Int pw = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] *= pw;
        pw *= s;
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reverse() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& d) const {
    if (!d.is_monic()) throw InternalError("divmod_monic: divisor is not monic");
    std::vector<Int> rem(c_);
    long dd = d.degree();
    long dn = degree();
    if (dn < dd) return {IntPoly(), *this};
    std::vector<Int> quo(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quo[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeff(j);
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::vector<Int> IntPoly::power_sums(long k) const {
    if (!is_monic()) throw InternalError("power_sums: polynomial is not monic");
    long d = degree();
    // f = t^d + a_1 t^{d-1} + ... + a_d
    auto a = [&](long j) -> Int { return j > d ? Int(0) : coeff(d - j); };
    std::vector<Int> p(k + 1, 0);
    for (long n = 1; n <= k; ++n) {
        Int s = 0;
        for (long i = 1; i < n && i <= d; ++i) s += a(i) * p[n - i];
        if (n <= d) s += Int(n) * a(n);
        p[n] = -s;
    }
    return std::vector<Int>(p.begin() + 1, p.end());
}

IntPoly IntPoly::from_power_sums(long d, const std::vector<Int>& p) {
    check_internal(static_cast<long>(p.size()) >= d, "from_power_sums: not enough power sums");
    // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<Int> e(d + 1, 0);
    e[0] = 1;
    for (long k = 1; k <= d; ++k) {
        Int s = 0;
        for (long i = 1; i <= k; ++i) {
            Int term = e[k - i] * p[i - 1];
            if (i % 2 == 0) s -= term; else s += term;
        }
        check_internal(s % k == 0, "from_power_sums: non-integral elementary symmetric function");
        e[k] = s / k;
    }
    std::vector<Int> v(d + 1, 0);
    for (long k = 0; k <= d; ++k) {
        v[d - k] = (k % 2 == 0) ? e[k] : -e[k];
    }
    return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& a = coeff(i);
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Monic remainder sequence over Q.
std::vector<Rat> to_rat(const IntPoly& f) {
    std::vector<Rat> v(f.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.coeffs()[i];
    return v;
}

void rat_normalize(std::vector<Rat>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<Rat> rat_rem(std::vector<Rat> n, const std::vector<Rat>& d) {
    while (n.size() >= d.size() && !n.empty()) {
        Rat q = n.back() / d.back();
        size_t off = n.size() - d.size();
        for (size_t j = 0; j < d.size(); ++j) n[off + j] -= q * d[j];
        n.pop_back();
        rat_normalize(n);
    }
    return n;
}

}  // namespace

IntPoly gcd_poly(const IntPoly& f, const IntPoly& g) {
    std::vector<Rat> a = to_rat(f), b = to_rat(g);
    rat_normalize(a);
    rat_normalize(b);
    while (!b.empty()) {
        auto r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return IntPoly();
    // scale to primitive integer coefficients, positive leading coefficient
    Int den = 1;
    for (const auto& x : a) den = lcm(den, Int(x.get_den()));
    std::vector<Int> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Rat s = a[i] * den;
        v[i] = Int(s.get_num());
    }
    Int content = 0;
    for (const auto& x : v) content = gcd(content, x);
    if (content != 0)
        for (auto& x : v) x /= content;
    if (v.back() < 0)
        for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

bool is_squarefree(const IntPoly& f) {
    if (f.degree() < 1) return true;
    return gcd_poly(f, f.derivative()).degree() == 0;
}

}  // namespace atlas
