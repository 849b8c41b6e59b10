#pragma once

// Test-only oracles, deliberately independent of the library's algorithms:
//  - congruent-diagonalization signature count over exact rationals
//  - characteristic polynomial by determinant evaluation + interpolation
//  - brute-force face enumeration straight from the definitions

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "torfano/fan.hpp"
#include "torfano/linalg.hpp"

namespace oracles {

using torfano::Int;
using torfano::Int128;
using torfano::IntMatrix;

struct Frac {
    Int128 num = 0, den = 1;
    Frac() = default;
    Frac(Int128 n) : num(n) {}
    Frac(Int128 n, Int128 d) : num(n), den(d) { normalize(); }
    void normalize() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
        Int128 a = num < 0 ? -num : num, b = den;
        while (b != 0) {
            Int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
    }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
    bool is_zero() const { return num == 0; }
    int sign() const { return num == 0 ? 0 : (num > 0 ? 1 : -1); }
};

struct Signature {
    int positives = 0;
    int negatives = 0;
    int rank() const { return positives + negatives; }
};

// Symmetric Gaussian congruence over Q; counts diagonal signs.
inline Signature congruent_signature(const IntMatrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<std::vector<Frac>> a(static_cast<size_t>(n), std::vector<Frac>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[size_t(i)][size_t(j)] = Frac(m(i, j));
    Signature sig;
    for (int k = 0; k < n; ++k) {
        if (a[size_t(k)][size_t(k)].is_zero()) {
            int piv = -1;
            for (int j = k + 1; j < n; ++j)
                if (!a[size_t(j)][size_t(j)].is_zero()) {
                    piv = j;
                    break;
                }
            if (piv >= 0) {
                std::swap(a[size_t(k)], a[size_t(piv)]);
                for (int i = 0; i < n; ++i) std::swap(a[size_t(i)][size_t(k)], a[size_t(i)][size_t(piv)]);
            } else {
                int off = -1;
                for (int j = k + 1; j < n; ++j)
                    if (!a[size_t(k)][size_t(j)].is_zero()) {
                        off = j;
                        break;
                    }
                if (off < 0) continue;  // zero row in the remaining block
                // congruent update: row_k += row_off, col_k += col_off
                for (int j = 0; j < n; ++j)
                    a[size_t(k)][size_t(j)] = a[size_t(k)][size_t(j)] + a[size_t(off)][size_t(j)];
                for (int i = 0; i < n; ++i)
                    a[size_t(i)][size_t(k)] = a[size_t(i)][size_t(k)] + a[size_t(i)][size_t(off)];
            }
        }
        Frac piv = a[size_t(k)][size_t(k)];
        if (piv.is_zero()) continue;
        if (piv.sign() > 0)
            ++sig.positives;
        else
            ++sig.negatives;
        for (int i = k + 1; i < n; ++i) {
            if (a[size_t(i)][size_t(k)].is_zero()) continue;
            Frac f = a[size_t(i)][size_t(k)] / piv;
            for (int j = 0; j < n; ++j)
                a[size_t(i)][size_t(j)] = a[size_t(i)][size_t(j)] - f * a[size_t(k)][size_t(j)];
            for (int j = 0; j < n; ++j)
                a[size_t(j)][size_t(i)] = a[size_t(j)][size_t(i)] - f * a[size_t(j)][size_t(k)];
        }
    }
    return sig;
}

// det(xI - A) by evaluation at x = 0..n and Lagrange interpolation.
inline std::vector<Int128> charpoly_by_interpolation(const IntMatrix& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<Int128> ys;
    for (int x = 0; x <= n; ++x) {
        IntMatrix shifted = -m;
        for (int i = 0; i < n; ++i) shifted(i, i) += x;
        ys.push_back(torfano::determinant(shifted));
    }
    // coefficients via rational Lagrange, highest degree first
    std::vector<Frac> poly(static_cast<size_t>(n) + 1, Frac(0));
    for (int i = 0; i <= n; ++i) {
        std::vector<Frac> basis{Frac(1)};  // product of (x - xj)/(xi - xj)
        Frac denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis.push_back(Frac(0));
            for (int d = static_cast<int>(basis.size()) - 1; d > 0; --d)
                basis[size_t(d)] = basis[size_t(d - 1)] - Frac(j) * basis[size_t(d)];
            basis[0] = Frac(0) - Frac(j) * basis[0];
            // note: representation is highest-first after this loop shape
            denom = denom * Frac(i - j);
        }
        for (int d = 0; d <= n; ++d)
            poly[size_t(d)] = poly[size_t(d)] + basis[size_t(d)] * Frac(ys[size_t(i)]) / denom;
    }
    // poly is lowest-degree-first; report highest-first like the library.
    std::vector<Int128> out;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        if (it->den != 1) throw std::logic_error("interpolation oracle: non-integer coefficient");
        out.push_back(it->num);
    }
    return out;
}

// Faces straight from the definition: subsets containing no primitive collection.
inline std::vector<std::vector<int>> brute_force_maximal_cones(const torfano::FanPresentation& p) {
    std::vector<std::vector<int>> cones;
    const int r = p.ray_count;
    for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b)
            for (int c = b + 1; c <= r; ++c)
                for (int d = c + 1; d <= r; ++d) {
                    std::set<int> s{a, b, c, d};
                    bool ok = true;
                    for (const auto& rel : p.relations) {
                        bool inside = true;
                        for (int i : rel.lhs)
                            if (!s.count(i)) inside = false;
                        if (inside) ok = false;
                    }
                    if (ok) cones.push_back({a, b, c, d});
                }
    return cones;
}

inline IntMatrix random_symmetric(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            m(i, j) = dist(rng);
            m(j, i) = m(i, j);
        }
    return m;
}

}  // namespace oracles
