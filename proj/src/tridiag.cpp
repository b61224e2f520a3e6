#include "lidstone/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lidstone/error.hpp"

namespace lidstone {

namespace {

constexpr double kPivotFloor = 1e-30;

void require_size(std::size_t expected, std::size_t actual, const char* what) {
    if (expected != actual) {
        throw DimensionError(std::string(what) + " has length " + std::to_string(actual) +
                             ", expected " + std::to_string(expected));
    }
}

}  // namespace

TridiagonalMatrix::TridiagonalMatrix(std::size_t n) {
    if (n == 0) throw DimensionError("tridiagonal matrix needs at least one row");
    sub_.assign(n - 1, 0.0);
    diag_.assign(n, 0.0);
    sup_.assign(n - 1, 0.0);
}

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> sub, std::vector<double> diag,
                                     std::vector<double> sup)
    : sub_(std::move(sub)), diag_(std::move(diag)), sup_(std::move(sup)) {
    if (diag_.empty()) throw DimensionError("tridiagonal matrix needs at least one row");
    require_size(diag_.size() - 1, sub_.size(), "sub band");
    require_size(diag_.size() - 1, sup_.size(), "super band");
    check_finite();
}

TridiagonalMatrix TridiagonalMatrix::identity(std::size_t n) {
    TridiagonalMatrix m(n);
    std::fill(m.diag_.begin(), m.diag_.end(), 1.0);
    return m;
}

double TridiagonalMatrix::at(std::size_t i, std::size_t j) const {
    const std::size_t n = size();
    if (i >= n || j >= n) throw DimensionError("index out of range");
    if (i == j) return diag_[i];
    if (j + 1 == i) return sub_[j];
    if (i + 1 == j) return sup_[i];
    return 0.0;
}

void TridiagonalMatrix::check_finite() const {
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(sub_.begin(), sub_.end(), finite) ||
        !std::all_of(diag_.begin(), diag_.end(), finite) ||
        !std::all_of(sup_.begin(), sup_.end(), finite)) {
        throw ParameterError("matrix", "entries must be finite");
    }
}

std::vector<double> solve(const TridiagonalMatrix& matrix, std::span<const double> rhs) {
    const std::size_t n = matrix.size();
    require_size(n, rhs.size(), "right-hand side");
    const auto sub = matrix.sub();
    const auto diag = matrix.diag();
    const auto sup = matrix.sup();

    // Forward sweep: upper[i] = sup[i] / pivot_i, x holds the modified rhs.
    std::vector<double> upper(n > 1 ? n - 1 : 0);
    std::vector<double> x(n);

    double pivot = diag[0];
    if (std::abs(pivot) < kPivotFloor) throw SingularMatrixError(0);
    if (n > 1) upper[0] = sup[0] / pivot;
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - sub[i - 1] * upper[i - 1];
        if (std::abs(pivot) < kPivotFloor) throw SingularMatrixError(i);
        if (i + 1 < n) upper[i] = sup[i] / pivot;
        x[i] = (rhs[i] - sub[i - 1] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= upper[i] * x[i + 1];
    return x;
}

std::vector<double> matvec(const TridiagonalMatrix& matrix, std::span<const double> x) {
    const std::size_t n = matrix.size();
    require_size(n, x.size(), "vector");
    const auto sub = matrix.sub();
    const auto diag = matrix.diag();
    const auto sup = matrix.sup();

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * x[i];
        if (i > 0) acc += sub[i - 1] * x[i - 1];
        if (i + 1 < n) acc += sup[i] * x[i + 1];
        y[i] = acc;
    }
    return y;
}

double residual_inf(const TridiagonalMatrix& matrix, std::span<const double> x,
                    std::span<const double> rhs) {
    require_size(matrix.size(), rhs.size(), "right-hand side");
    const auto ax = matvec(matrix, x);
    double worst = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) worst = std::max(worst, std::abs(ax[i] - rhs[i]));
    return worst;
}

}  // namespace lidstone
