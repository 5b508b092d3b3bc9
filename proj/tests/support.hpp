#pragma once

#include "adinvar/matrix.hpp"

#include <numeric>
#include <random>

namespace testing {

using adinvar::Matrix;
using adinvar::Scalar;
using adinvar::Vec;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Matrix random_matrix(std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rand_int(lo, hi);
    return m;
}

/// Product of random elementary row operations: integer entries, determinant 1.
inline Matrix random_unimodular(std::size_t n, int steps = 12) {
    Matrix u = Matrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = rand_int(0, int(n) - 1);
        std::size_t j = rand_int(0, int(n) - 1);
        if (i == j)
            j = (j + 1) % n;
        const int k = rand_int(-2, 2);
        for (std::size_t c = 0; c < n; ++c)
            u(i, c) += k * u(j, c);
    }
    return u;
}

/// Leibniz expansion, used as an oracle independent of elimination.
inline Scalar leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Scalar total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j])
                    ++inversions;
        Scalar term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Random skew matrix for the diagonal form with the given norms: A = G^{-1} S
/// with S antisymmetric.
inline Matrix random_skew_for(const Vec& norms) {
    const std::size_t n = norms.size();
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            s(i, j) = rand_int(-3, 3);
            s(j, i) = -s(i, j);
        }
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = s(i, j) / norms[i];
    return a;
}

}  // namespace testing
