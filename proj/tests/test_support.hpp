#pragma once

// Shared helpers for the test binaries: seeded generators and independent
// oracles (LU determinant, polynomial expansion from roots).

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "chiralspin/linalg.hpp"
#include "chiralspin/rotations.hpp"

namespace testsupport {

using chiralspin::Complex;
using chiralspin::ComplexMatrix;

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240917);
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(rng()); }

inline ComplexMatrix random_matrix(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(gaussian(), gaussian());
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n) {
    const ComplexMatrix a = random_matrix(n);
    return Complex(0.5) * (a + chiralspin::adjoint(a));
}

inline chiralspin::Vec3 random_unit3() {
    chiralspin::Vec3 v{gaussian(), gaussian(), gaussian()};
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& c : v) c /= len;
    return v;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// Determinant by Gaussian elimination with partial pivoting.
inline Complex lu_determinant(ComplexMatrix a) {
    const std::size_t n = a.dim();
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == Complex{}) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

// Coefficients (ascending) of prod_i (roots_i - x), i.e. det(H - x I) for a
// matrix with eigenvalues `roots`.
inline std::vector<double> expand_from_roots(const std::vector<double>& roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += r * c[k];
            next[k + 1] -= c[k];
        }
        c = std::move(next);
    }
    return c;
}

// a Jx + b Jy + c Jz at j=1, written out entry by entry.
inline ComplexMatrix general_field_j1_literal(double a, double b, double c) {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex lo = r * Complex(a, b), up = r * Complex(a, -b);
    return ComplexMatrix::from_rows({{c, up, 0.0}, {lo, 0.0, up}, {0.0, lo, -c}});
}

// a Jx + b Jy + c Jz at j=5/2, written out entry by entry.
inline ComplexMatrix general_field_j52_literal(double a, double b, double c) {
    const Complex lo(a, b), up(a, -b);
    const double s5 = std::sqrt(5.0), s8 = std::sqrt(8.0);
    ComplexMatrix m = ComplexMatrix::from_rows({
        {5 * c, s5 * up, 0.0, 0.0, 0.0, 0.0},
        {s5 * lo, 3 * c, s8 * up, 0.0, 0.0, 0.0},
        {0.0, s8 * lo, c, 3.0 * up, 0.0, 0.0},
        {0.0, 0.0, 3.0 * lo, -c, s8 * up, 0.0},
        {0.0, 0.0, 0.0, s8 * lo, -3 * c, s5 * up},
        {0.0, 0.0, 0.0, 0.0, s5 * lo, -5 * c},
    });
    m *= 0.5;
    return m;
}

} // namespace testsupport
