#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace bondage {

// Extended precision throughout the root machinery: the residual target of
// 1e-9 at chi = -10^4 is out of reach for plain doubles.
using Real = long double;

// The three polynomials whose simultaneous positivity bounds the bondage
// number: A(z) = z^2 - z + 4chi - 6, B(z) = 5z^3 + 6z^2 + (24chi-31)z +
// 48chi - 70, C(z) = z^3 + 2z^2 + (6chi-7)z + 18chi - 24.
inline Real poly_A(Real z, int chi) { return z * z - z + 4 * chi - 6; }

inline Real poly_B(Real z, int chi) {
    return ((5 * z + 6) * z + (24 * chi - 31)) * z + 48 * chi - 70;
}

inline Real poly_C(Real z, int chi) {
    return ((z + 2) * z + (6 * chi - 7)) * z + 18 * chi - 24;
}

namespace detail {

inline __int128 poly_C_exact(long long z, int chi) {
    __int128 x = z;
    return ((x + 2) * x + (6 * static_cast<__int128>(chi) - 7)) * x + 18 * static_cast<__int128>(chi) - 24;
}

inline long long isqrt_floor(long long x) {
    if (x < 0) throw std::domain_error("isqrt of negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace detail

struct RootResult {
    Real r = 0;
    Real residual = 0;
    int iterations = 0;
};

// Largest real root of C(z) = z^3 + 2z^2 + (6chi-7)z + 18chi - 24 for
// chi <= 0. Closed form (real branch when f >= 0, trigonometric three-root
// method when f < 0), then Newton polish to |C(r)| <= 1e-9.
inline RootResult largest_root_r(int chi) {
    if (chi > 0) throw std::domain_error("largest_root_r requires chi <= 0");

    Real x = chi;
    Real f = 5376 - 6876 * x + 1269 * x * x + 648 * x * x * x;
    Real r;
    if (f >= 0) {
        // unique real root: r = (25-18chi)/(3t) + t/3 - 2/3 with
        // t = cbrt(253 - 189chi + 3 sqrt f)
        Real t = std::cbrt(253 - 189 * x + 3 * std::sqrt(f));
        r = (25 - 18 * x) / (3 * t) + t / 3 - Real(2) / 3;
    } else {
        // three real roots; depressed cubic y^3 + p y + q with z = y - 2/3
        Real p = 6 * x - Real(25) / 3;
        Real q = 14 * x - Real(506) / 27;
        Real amp = 2 * std::sqrt(-p / 3);
        Real arg = 3 * q / (2 * p) * std::sqrt(-3 / p);
        if (arg > 1) arg = 1;
        if (arg < -1) arg = -1;
        Real phi = std::acos(arg);
        r = -1e30L;
        for (int k = 0; k < 3; ++k) {
            Real y = amp * std::cos((phi - 2 * std::acos(Real(-1)) * k) / 3);
            r = std::max(r, y - Real(2) / 3);
        }
    }

    int iterations = 0;
    Real residual = std::fabs(poly_C(r, chi));
    while (residual > 1e-9L && iterations < 50) {
        Real deriv = (3 * r + 4) * r + (6 * x - 7);
        Real next = r - poly_C(r, chi) / deriv;
        Real next_residual = std::fabs(poly_C(next, chi));
        ++iterations;
        if (next_residual >= residual) break;  // at the precision floor
        r = next;
        residual = next_residual;
    }

    // C(0) < 0 and C is strictly convex on z > 0, so the positive root is
    // unique; r >= 3 for chi <= 0.
    if (detail::poly_C_exact(0, chi) >= 0 || r < 3 - 1e-9L)
        throw std::logic_error("root invariant violated");
    return {r, residual, iterations};
}

// floor(r(chi)) computed exactly: the largest integer k >= 0 with C(k) <= 0.
// Guards against floating floor errors when r lands on an integer (chi = 0
// gives r = 3 exactly).
inline int floor_root_r(int chi) {
    RootResult root = largest_root_r(chi);
    long long k = static_cast<long long>(std::floor(root.r + 1e-7L));
    while (detail::poly_C_exact(k + 1, chi) <= 0) ++k;
    while (k > 0 && detail::poly_C_exact(k, chi) > 0) --k;
    return static_cast<int>(k);
}

// Theorem-style bound b(G) <= Delta + floor(r(chi)), extended by
// r(1) = r(2) = 2 for positive Euler characteristic.
inline int h1_bound(int delta, int chi) {
    if (chi > 2) throw std::domain_error("chi must be at most 2");
    if (chi >= 1) return delta + 2;
    return delta + floor_root_r(chi);
}

// b(G) <= Delta + ceil(sqrt(12-6chi) - 1/2); exact via the smallest n
// with (2n+1)^2 >= 4(12-6chi).
inline int h2_bound(int delta, int chi) {
    if (chi > 0) throw std::domain_error("h2_bound requires chi <= 0");
    long long x = 12 - 6 * static_cast<long long>(chi);
    long long n = (detail::isqrt_floor(x) - 1) / 2;
    if (n < 0) n = 0;
    while ((2 * n + 1) * (2 * n + 1) < 4 * x) ++n;
    return delta + static_cast<int>(n);
}

// b(G) <= min(Delta + h + 2, Delta + k + 1) for a graph embeddable on
// orientable genus h and non-orientable genus k surfaces.
inline int gz_bound(int delta, std::optional<int> h, std::optional<int> k) {
    if (!h && !k) throw std::invalid_argument("gz_bound needs h or k");
    if (h && *h < 0) throw std::domain_error("orientable genus must be >= 0");
    if (k && *k < 1) throw std::domain_error("non-orientable genus must be >= 1");
    int best = INT32_MAX;
    if (h) best = std::min(best, delta + *h + 2);
    if (k) best = std::min(best, delta + *k + 1);
    return best;
}

// The case refinements for large genus, falling back to gz_bound guards
// where they do not apply.
inline int gz_improved_bound(int delta, std::optional<int> h, std::optional<int> k) {
    if (!h && !k) throw std::invalid_argument("gz_improved_bound needs h or k");
    int best = INT32_MAX;
    if (h) {
        int add = *h >= 11 ? *h : (*h >= 8 ? *h + 1 : *h + 2);
        best = std::min(best, delta + add);
    }
    if (k) {
        int add = *k >= 6 ? *k - 1 : (*k >= 3 ? *k : *k + 1);
        best = std::min(best, delta + add);
    }
    return best;
}

// Sachs-based bound b(G) <= Delta + floor((3 + sqrt(49-24chi))/2).
inline int sachs_bound(int delta, int chi) {
    if (chi > 0) throw std::domain_error("sachs_bound requires chi <= 0");
    long long x = 49 - 24 * static_cast<long long>(chi);
    return delta + static_cast<int>((3 + detail::isqrt_floor(x)) / 2);
}

// Girth refinement: b(G) <= Delta + floor(s) with s the larger root of
// (g-2)z^2 + (g-6)z + 2chi*g - 2g - 4. Exact floor via the quadratic's
// sign at integers (its value at 0 is negative for chi <= 0, g >= 3).
inline int girth_bound(int delta, int chi, int g) {
    if (chi > 0) throw std::domain_error("girth_bound requires chi <= 0");
    if (g < 3) throw std::domain_error("girth_bound requires finite girth >= 3");
    Real disc = 8.0L * g * (2 - g) * chi + Real(3 * g - 2) * (3 * g - 2);
    Real s = (std::sqrt(disc) - (g - 6)) / (2 * (g - 2));
    auto quad = [&](long long z) {
        __int128 zz = z;
        return (static_cast<__int128>(g) - 2) * zz * zz + (static_cast<__int128>(g) - 6) * zz +
               2 * static_cast<__int128>(chi) * g - 2 * static_cast<__int128>(g) - 4;
    };
    long long k = static_cast<long long>(std::floor(s + 1e-9L));
    if (k < 0) k = 0;
    while (quad(k + 1) <= 0) ++k;
    while (k > 0 && quad(k) > 0) --k;
    return delta + static_cast<int>(k);
}

// (sqrt(12-6chi) + 1/2) / r(chi): always > 1, tends to 1 as chi -> -inf.
inline Real asymptotic_ratio(int chi) {
    if (chi > 0) throw std::domain_error("asymptotic_ratio requires chi <= 0");
    Real upper = std::sqrt(Real(12) - 6 * Real(chi)) + 0.5L;
    return upper / largest_root_r(chi).r;
}

}  // namespace bondage
