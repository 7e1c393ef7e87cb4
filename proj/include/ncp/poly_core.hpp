#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ncp/linalg.hpp"

namespace ncp::detail {

// Dense univariate polynomial routines over an exact field, coefficients
// lowest degree first, normalized form has nonzero leading coefficient.
// Shared by UniPoly (over Q), polynomials over number fields and over
// finite fields.

template <class T>
void poly_trim(std::vector<T>& c, const T& zero) {
    while (!c.empty() && c.back() == zero) c.pop_back();
}

template <class T>
int poly_deg(const std::vector<T>& c) {
    return static_cast<int>(c.size()) - 1;  // -1 for the zero polynomial
}

template <class T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
    std::vector<T> r(std::max(a.size(), b.size()), zero);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    poly_trim(r, zero);
    return r;
}

template <class T>
std::vector<T> poly_sub(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
    std::vector<T> r(std::max(a.size(), b.size()), zero);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    poly_trim(r, zero);
    return r;
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    poly_trim(r, zero);
    return r;
}

template <class T>
std::vector<T> poly_scale(const std::vector<T>& a, const T& s, const T& zero) {
    std::vector<T> r(a.size(), zero);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    poly_trim(r, zero);
    return r;
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> poly_divrem(const std::vector<T>& a,
                                                      const std::vector<T>& b, const T& zero) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    std::vector<T> rem = a;
    if (a.size() < b.size()) return {{}, rem};
    std::vector<T> quot(a.size() - b.size() + 1, zero);
    const T& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (rem.size() <= i || rem[i] == zero) {
            if (i + 1 == b.size()) break;
            continue;
        }
        T factor = rem[i] / lead;
        std::size_t shift = i - (b.size() - 1);
        quot[shift] = factor;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = rem[shift + j] - factor * b[j];
        if (i + 1 == b.size()) break;
    }
    poly_trim(rem, zero);
    poly_trim(quot, zero);
    return {quot, rem};
}

/// Monic gcd via the Euclidean algorithm.
template <class T>
std::vector<T> poly_gcd(std::vector<T> a, std::vector<T> b, const T& zero, const T& one) {
    poly_trim(a, zero);
    poly_trim(b, zero);
    while (!b.empty()) {
        auto [q, r] = poly_divrem(a, b, zero);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && !(a.back() == one)) a = poly_scale(a, T(one / a.back()), zero);
    return a;
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<std::vector<T>, std::vector<T>, std::vector<T>> poly_xgcd(std::vector<T> a,
                                                                     std::vector<T> b,
                                                                     const T& zero, const T& one) {
    poly_trim(a, zero);
    poly_trim(b, zero);
    std::vector<T> s0{one}, s1{}, t0{}, t1{one};
    while (!b.empty()) {
        auto [q, r] = poly_divrem(a, b, zero);
        a = std::move(b);
        b = std::move(r);
        auto s2 = poly_sub(s0, poly_mul(q, s1, zero), zero);
        auto t2 = poly_sub(t0, poly_mul(q, t1, zero), zero);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty() && !(a.back() == one)) {
        T inv_lead = one / a.back();
        a = poly_scale(a, inv_lead, zero);
        s0 = poly_scale(s0, inv_lead, zero);
        t0 = poly_scale(t0, inv_lead, zero);
    }
    return {a, s0, t0};
}

template <class T>
T poly_eval(const std::vector<T>& a, const T& x, const T& zero) {
    T r = zero;
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

template <class T>
std::vector<T> poly_derivative(const std::vector<T>& a, const T& zero, const T& one) {
    if (a.size() <= 1) return {};
    std::vector<T> r(a.size() - 1, zero);
    T k = one;
    for (std::size_t i = 1; i < a.size(); ++i) {
        r[i - 1] = a[i] * k;
        k = k + one;
    }
    poly_trim(r, zero);
    return r;
}

/// Resultant via the Sylvester matrix determinant.
template <class T>
T poly_resultant(const std::vector<T>& a, const std::vector<T>& b, const T& zero, const T& one) {
    const int m = poly_deg(a), n = poly_deg(b);
    if (m < 0 || n < 0) return zero;
    if (m == 0 && n == 0) return one;
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix<T> syl(size, std::vector<T>(size, zero));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) syl[row][row + (m - k)] = a[k];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) syl[n + row][row + (n - k)] = b[k];
    return det(std::move(syl), zero, one);
}

/// Discriminant with the convention
/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f), n = deg f.
template <class T>
T poly_discriminant(const std::vector<T>& f, const T& zero, const T& one) {
    const int n = poly_deg(f);
    if (n < 1) throw std::invalid_argument("discriminant of a constant polynomial");
    T res = poly_resultant(f, poly_derivative(f, zero, one), zero, one);
    T d = res / f.back();
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = zero - d;
    return d;
}

}  // namespace ncp::detail
