#pragma once

#include <complex>
#include <stdexcept>

namespace ncmi {

using cplx = std::complex<double>;

/// Element of the commutative algebra of 2x2 upper-triangular matrices
/// [[v, e], [0, v]] with complex entries, stored as the pair (v, e).
/// The `value` slot carries ordinary moments, the `eps` slot their
/// first-order (infinitesimal) companions.
struct DualScalar {
    cplx value{0.0, 0.0};
    cplx eps{0.0, 0.0};

    constexpr DualScalar() = default;
    constexpr DualScalar(double v) : value(v) {}
    constexpr DualScalar(cplx v) : value(v) {}
    constexpr DualScalar(cplx v, cplx e) : value(v), eps(e) {}

    static constexpr DualScalar one() { return DualScalar(cplx(1.0, 0.0)); }

    DualScalar& operator+=(const DualScalar& o) {
        value += o.value;
        eps += o.eps;
        return *this;
    }
    DualScalar& operator-=(const DualScalar& o) {
        value -= o.value;
        eps -= o.eps;
        return *this;
    }
    DualScalar& operator*=(const DualScalar& o) {
        eps = value * o.eps + eps * o.value;
        value *= o.value;
        return *this;
    }

    friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
    friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
    friend DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
    friend DualScalar operator-(const DualScalar& a) { return {-a.value, -a.eps}; }
    friend DualScalar operator*(cplx c, const DualScalar& a) { return {c * a.value, c * a.eps}; }
    friend DualScalar operator*(const DualScalar& a, cplx c) { return c * a; }
    friend DualScalar operator*(double c, const DualScalar& a) { return cplx(c) * a; }
    friend DualScalar operator*(const DualScalar& a, double c) { return cplx(c) * a; }

    friend bool operator==(const DualScalar& a, const DualScalar& b) {
        return a.value == b.value && a.eps == b.eps;
    }
};

/// Multiplicative inverse; defined iff value != 0.
inline DualScalar inverse(const DualScalar& a) {
    if (a.value == cplx(0.0, 0.0))
        throw std::domain_error("DualScalar inverse: value component is zero");
    const cplx inv = 1.0 / a.value;
    return {inv, -a.eps * inv * inv};
}

inline DualScalar operator/(const DualScalar& a, const DualScalar& b) {
    return a * inverse(b);
}

/// Principal-branch square root, [[v,e],[0,v]]^(1/2) = [[s, e/2s],[0, s]].
inline DualScalar sqrt(const DualScalar& a) {
    if (a.value == cplx(0.0, 0.0))
        throw std::domain_error("DualScalar sqrt: value component is zero");
    const cplx s = std::sqrt(a.value);
    return {s, a.eps / (2.0 * s)};
}

/// Non-negative integer power by repeated multiplication.
inline DualScalar pow(const DualScalar& a, int n) {
    if (n < 0) throw std::domain_error("DualScalar pow: negative exponent");
    DualScalar r = DualScalar::one();
    for (int i = 0; i < n; ++i) r *= a;
    return r;
}

}  // namespace ncmi
