#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lidstone {

/// Three-band matrix of order n.
///
/// Row i reads sub[i-1], diag[i], sup[i]; the bands have length n-1.
class TridiagonalMatrix {
public:
    /// Zero matrix of order n (n >= 1).
    explicit TridiagonalMatrix(std::size_t n);

    /// Throws DimensionError on inconsistent band lengths and
    /// ParameterError on non-finite entries.
    TridiagonalMatrix(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup);

    static TridiagonalMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return diag_.size(); }

    std::span<const double> sub() const noexcept { return sub_; }
    std::span<const double> diag() const noexcept { return diag_; }
    std::span<const double> sup() const noexcept { return sup_; }
    std::span<double> sub() noexcept { return sub_; }
    std::span<double> diag() noexcept { return diag_; }
    std::span<double> sup() noexcept { return sup_; }

    /// Entry (i, j); zero outside the bands.
    double at(std::size_t i, std::size_t j) const;

    /// Throws ParameterError if any entry is NaN or infinite.
    void check_finite() const;

private:
    std::vector<double> sub_;
    std::vector<double> diag_;
    std::vector<double> sup_;
};

/// Thomas elimination without pivoting. Pivots with magnitude below 1e-30
/// raise SingularMatrixError carrying the row index.
std::vector<double> solve(const TridiagonalMatrix& matrix, std::span<const double> rhs);

std::vector<double> matvec(const TridiagonalMatrix& matrix, std::span<const double> x);

/// max_i |(A x - b)_i|
double residual_inf(const TridiagonalMatrix& matrix, std::span<const double> x,
                    std::span<const double> rhs);

}  // namespace lidstone
