#pragma once

// Dense univariate polynomials with ascending-degree coefficient storage,
// templated on the coefficient field (arbitrary-precision reals for the Freud
// families, exact rationals for the Gaussian appendix).

#include <vector>

#include "freud/scalar.hpp"

namespace freud {

template <typename T>
struct Poly {
    std::vector<T> c;  // c[k] multiplies x^k; empty means the zero polynomial

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({T(1)}); }
    static Poly x() { return Poly({T(0), T(1)}); }
    static Poly constant(const T& v) { return Poly({v}); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return T(0);
        return c[static_cast<size_t>(k)];
    }

    T eval(const T& x) const {
        T s(0);
        for (size_t k = c.size(); k-- > 0;) s = s * x + c[k];
        return s;
    }

    Poly derivative() const {
        if (c.size() <= 1) return zero();
        std::vector<T> d(c.size() - 1);
        for (size_t k = 1; k < c.size(); ++k) d[k - 1] = T(static_cast<int>(k)) * c[k];
        return Poly(std::move(d));
    }

    // multiply by x^k
    Poly shifted(int k) const {
        if (is_zero()) return zero();
        std::vector<T> d(c.size() + static_cast<size_t>(k), T(0));
        for (size_t i = 0; i < c.size(); ++i) d[i + static_cast<size_t>(k)] = c[i];
        return Poly(std::move(d));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

template <typename T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
    std::vector<T> d(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Poly<T>(std::move(d));
}

template <typename T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
    std::vector<T> d(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return Poly<T>(std::move(d));
}

template <typename T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<T>::zero();
    std::vector<T> d(a.c.size() + b.c.size() - 1, T(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) d[i + j] += a.c[i] * b.c[j];
    return Poly<T>(std::move(d));
}

template <typename T>
Poly<T> operator*(const T& s, const Poly<T>& a) {
    if (s == 0) return Poly<T>::zero();
    std::vector<T> d = a.c;
    for (auto& v : d) v *= s;
    return Poly<T>(std::move(d));
}

template <typename T>
Poly<T> operator-(const Poly<T>& a) {
    return T(-1) * a;
}

template <typename T>
T max_abs_coeff(const Poly<T>& a) {
    T m(0);
    for (const auto& v : a.c) {
        T av = v < 0 ? T(-v) : v;
        if (av > m) m = av;
    }
    return m;
}

}  // namespace freud
