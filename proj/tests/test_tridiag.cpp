#include <gtest/gtest.h>

#include <random>

#include "lidstone/error.hpp"
#include "lidstone/tridiag.hpp"
#include "support/dense_oracle.hpp"

using namespace lidstone;
using namespace lidstone::testing;

namespace {

TridiagonalMatrix second_difference(std::size_t n) {
    return TridiagonalMatrix(std::vector<double>(n - 1, -1.0), std::vector<double>(n, 2.0),
                             std::vector<double>(n - 1, -1.0));
}

}  // namespace

TEST(Tridiagonal, SecondDifferenceSolve) {
    const auto a = second_difference(3);
    const std::vector<double> b{1.0, 1.0, 1.0};
    const auto x = solve(a, b);
    const auto oracle = dense_solve(to_dense(a), b);
    ASSERT_EQ(x.size(), 3u);
    EXPECT_NEAR(x[0], 1.5, 1e-15);
    EXPECT_NEAR(x[1], 2.0, 1e-15);
    EXPECT_NEAR(x[2], 1.5, 1e-15);
    EXPECT_LT(diff_inf(x, oracle), 1e-15);
}

TEST(Tridiagonal, IdentityReturnsRhs) {
    std::mt19937_64 rng(7);
    const auto b = random_vector(17, rng);
    EXPECT_EQ(solve(TridiagonalMatrix::identity(17), b), b);
    EXPECT_EQ(matvec(TridiagonalMatrix::identity(17), b), b);
}

TEST(Tridiagonal, SingleUnknown) {
    const TridiagonalMatrix a({}, {4.0}, {});
    EXPECT_EQ(solve(a, std::vector<double>{2.0}), std::vector<double>{0.5});
}

TEST(Tridiagonal, MatvecBandProduct) {
    EXPECT_EQ(matvec(second_difference(3), std::vector<double>{1, 1, 1}), (std::vector<double>{1, 0, 1}));
    EXPECT_EQ(matvec(second_difference(5), std::vector<double>(5, 0.0)), std::vector<double>(5, 0.0));
}

TEST(Tridiagonal, RandomDominantMatchesDenseOracle) {
    std::mt19937_64 rng(42);
    const auto a = random_dominant(256, rng);
    const auto b = random_vector(256, rng);
    const auto x = solve(a, b);
    const auto oracle = dense_solve(to_dense(a), b);
    EXPECT_LE(diff_inf(x, oracle), 1e-12 * norm_inf(oracle));
}

TEST(Tridiagonal, SolveInvertsMatvec) {
    std::mt19937_64 rng(99);
    for (std::size_t n : {1u, 2u, 3u, 64u, 1000u, 4096u}) {
        const auto a = random_dominant(n, rng);
        const auto x = random_vector(n, rng);
        const auto sub = std::vector<double>(a.sub().begin(), a.sub().end());
        const auto diag = std::vector<double>(a.diag().begin(), a.diag().end());
        const auto b = matvec(a, x);
        const auto b_copy = b;
        const auto recovered = solve(a, b);
        EXPECT_LE(diff_inf(recovered, x), 1e-10 * norm_inf(x)) << "n=" << n;
        // Inputs untouched.
        EXPECT_EQ(b, b_copy);
        EXPECT_TRUE(std::equal(sub.begin(), sub.end(), a.sub().begin()));
        EXPECT_TRUE(std::equal(diag.begin(), diag.end(), a.diag().begin()));
    }
}

TEST(Tridiagonal, ZeroPivotReportsRow) {
    // Second pivot: 1 - 1*1/1 = 0.
    const TridiagonalMatrix a({1.0, 1.0}, {1.0, 1.0, 3.0}, {1.0, 1.0});
    try {
        solve(a, std::vector<double>{1.0, 1.0, 1.0});
        FAIL() << "expected SingularMatrixError";
    } catch (const SingularMatrixError& e) {
        EXPECT_EQ(e.row(), 1u);
    }
    const TridiagonalMatrix first({0.0}, {1e-31, 1.0}, {0.0});
    EXPECT_THROW(solve(first, std::vector<double>{1.0, 1.0}), SingularMatrixError);
}

TEST(Tridiagonal, DimensionChecks) {
    const auto a = second_difference(4);
    EXPECT_THROW(solve(a, std::vector<double>(3, 1.0)), DimensionError);
    EXPECT_THROW(matvec(a, std::vector<double>(5, 1.0)), DimensionError);
    EXPECT_THROW(TridiagonalMatrix({1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0}), DimensionError);
    EXPECT_THROW(TridiagonalMatrix(0), DimensionError);
}

TEST(Tridiagonal, RejectsNonFiniteEntries) {
    EXPECT_THROW(TridiagonalMatrix({1.0}, {std::nan(""), 1.0}, {1.0}), ParameterError);
    EXPECT_THROW(TridiagonalMatrix({INFINITY}, {1.0, 1.0}, {1.0}), ParameterError);
}
