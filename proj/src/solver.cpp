#include "lidstone/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lidstone/error.hpp"

namespace lidstone {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct LinearSolve {
    std::vector<double> interior;
    double assembly_seconds;
    double solve_seconds;
};

double norm_inf(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// max_i (|A||x| + |b|)_i; the computed residual carries rounding of a few ulps
// of this, so no bound below it can be checked.
double residual_floor(const TridiagonalMatrix& matrix, std::span<const double> x,
                      std::span<const double> rhs) {
    const auto sub = matrix.sub();
    const auto diag = matrix.diag();
    const auto sup = matrix.sup();
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double row = std::abs(diag[i] * x[i]) + std::abs(rhs[i]);
        if (i > 0) row += std::abs(sub[i - 1] * x[i - 1]);
        if (i + 1 < x.size()) row += std::abs(sup[i] * x[i + 1]);
        worst = std::max(worst, row);
    }
    return 8.0 * std::numeric_limits<double>::epsilon() * worst;
}

void check_residual(const TridiagonalMatrix& matrix, std::span<const double> x,
                    std::span<const double> rhs, const char* stage) {
    const double residual = residual_inf(matrix, x, rhs);
    const double bound = std::max(1e-10 * (1.0 + norm_inf(rhs)), residual_floor(matrix, x, rhs));
    if (!(residual <= bound)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "%s residual %.3e exceeds %.3e", stage, residual, bound);
        throw NumericalError(msg);
    }
}

FemSolution embed(std::shared_ptr<const Mesh1D> mesh, std::span<const double> interior) {
    std::vector<double> values(interior.size() + 2, 0.0);
    std::copy(interior.begin(), interior.end(), values.begin() + 1);
    return FemSolution(std::move(mesh), std::move(values));
}

LinearSolve poisson_stage(const Mesh1D& mesh, const SourceFunction& f) {
    const auto t0 = Clock::now();
    const auto matrix = assemble_poisson(mesh);
    const auto rhs = load_vector(mesh, f);
    const double assembly = seconds_since(t0);

    const auto t1 = Clock::now();
    auto x = solve(matrix, rhs);
    const double elapsed = seconds_since(t1);
    check_residual(matrix, x, rhs, "poisson");
    return {std::move(x), assembly, elapsed};
}

LinearSolve cdr_stage(const Mesh1D& mesh, const ProblemCoefficients& coeffs,
                      const FemSolution& source) {
    const auto t0 = Clock::now();
    const auto matrix = assemble_cdr(mesh, coeffs);
    const auto rhs = load_vector_from_solution(mesh, source);
    const double assembly = seconds_since(t0);

    const auto t1 = Clock::now();
    auto x = solve(matrix, rhs);
    const double elapsed = seconds_since(t1);
    check_residual(matrix, x, rhs, "convection-diffusion");
    return {std::move(x), assembly, elapsed};
}

void require_mesh(const std::shared_ptr<const Mesh1D>& mesh) {
    if (!mesh) throw ParameterError("mesh", "must not be null");
}

}  // namespace

FemSolution solve_poisson(std::shared_ptr<const Mesh1D> mesh, const SourceFunction& f) {
    require_mesh(mesh);
    auto stage = poisson_stage(*mesh, f);
    return embed(std::move(mesh), stage.interior);
}

FemSolution solve_cdr(std::shared_ptr<const Mesh1D> mesh, const ProblemCoefficients& coeffs,
                      const FemSolution& source) {
    require_mesh(mesh);
    coeffs.validate();
    auto stage = cdr_stage(*mesh, coeffs, source);
    return embed(std::move(mesh), stage.interior);
}

DecoupledSolution solve_fourth_order(std::shared_ptr<const Mesh1D> mesh,
                                     const ProblemCoefficients& coeffs, const SourceFunction& f) {
    require_mesh(mesh);
    coeffs.validate();

    auto first = poisson_stage(*mesh, f);
    FemSolution w = embed(mesh, first.interior);
    auto second = cdr_stage(*mesh, coeffs, w);
    FemSolution u = embed(mesh, second.interior);

    StageTimings timings{
        .poisson_assembly = first.assembly_seconds,
        .poisson_solve = first.solve_seconds,
        .cdr_assembly = second.assembly_seconds,
        .cdr_solve = second.solve_seconds,
    };
    return {std::move(w), std::move(u), timings};
}

}  // namespace lidstone
