#pragma once

// Test-only dense linear algebra, independent of the library's band solver.

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lidstone/tridiag.hpp"

namespace lidstone::testing {

using DenseMatrix = std::vector<std::vector<double>>;

inline DenseMatrix to_dense(const TridiagonalMatrix& m) {
    const std::size_t n = m.size();
    DenseMatrix a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    }
    return a;
}

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(DenseMatrix a, std::vector<double> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0) throw std::runtime_error("singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// Random strictly diagonally dominant tridiagonal matrix.
inline TridiagonalMatrix random_dominant(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> margin(0.1, 2.0);
    std::bernoulli_distribution sign(0.5);
    std::vector<double> sub(n - 1), diag(n), sup(n - 1);
    for (auto& v : sub) v = off(rng);
    for (auto& v : sup) v = off(rng);
    for (std::size_t i = 0; i < n; ++i) {
        double row = margin(rng);
        if (i > 0) row += std::abs(sub[i - 1]);
        if (i + 1 < n) row += std::abs(sup[i]);
        diag[i] = sign(rng) ? row : -row;
    }
    return TridiagonalMatrix(std::move(sub), std::move(diag), std::move(sup));
}

inline std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

inline double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double diff_inf(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace lidstone::testing
