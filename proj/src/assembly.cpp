#include "lidstone/assembly.hpp"

#include <cmath>

#include "lidstone/error.hpp"

namespace lidstone {

namespace {

/// Scatter one local 2x2 block for element k (nodes k, k+1) into the
/// interior operator. Interior unknown j corresponds to node j+1.
void scatter(TridiagonalMatrix& m, std::size_t k, std::size_t n, const Matrix2& local) {
    auto diag = m.diag();
    auto sub = m.sub();
    auto sup = m.sup();
    const bool left_free = k >= 1;
    const bool right_free = k + 1 <= n - 1;
    if (left_free) diag[k - 1] += local[0][0];
    if (right_free) diag[k] += local[1][1];
    if (left_free && right_free) {
        sup[k - 1] += local[0][1];
        sub[k - 1] += local[1][0];
    }
}

template <class LocalFn>
TridiagonalMatrix assemble(const Mesh1D& mesh, LocalFn&& local_for) {
    const std::size_t n = mesh.n_intervals();
    TridiagonalMatrix m(mesh.interior_count());
    const auto h = mesh.element_lengths();
    for (std::size_t k = 0; k < n; ++k) scatter(m, k, n, local_for(element_matrices(h[k])));
    return m;
}

}  // namespace

void ProblemCoefficients::validate() const {
    if (!(epsilon > 0.0)) throw ParameterError("epsilon", "must be positive");
    if (!(epsilon <= 1.0)) throw ParameterError("epsilon", "must not exceed 1");
    if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("a", "must be positive");
    if (!(b >= 0.0) || !std::isfinite(b)) throw ParameterError("b", "must be non-negative");
}

ElementMatrices element_matrices(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("h", "element length must be positive");
    const double k = 1.0 / h;
    const double m = h / 6.0;
    return {
        .stiffness = {{{k, -k}, {-k, k}}},
        .convection = {{{-0.5, 0.5}, {-0.5, 0.5}}},
        .mass = {{{2.0 * m, m}, {m, 2.0 * m}}},
    };
}

TridiagonalMatrix assemble_poisson(const Mesh1D& mesh) {
    return assemble(mesh, [](const ElementMatrices& e) { return e.stiffness; });
}

TridiagonalMatrix assemble_cdr(const Mesh1D& mesh, const ProblemCoefficients& coeffs) {
    coeffs.validate();
    return assemble(mesh, [&](const ElementMatrices& e) {
        Matrix2 local{};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                local[i][j] = coeffs.epsilon * e.stiffness[i][j] - coeffs.a * e.convection[i][j] +
                              coeffs.b * e.mass[i][j];
            }
        }
        return local;
    });
}

TridiagonalMatrix assemble_mass(const Mesh1D& mesh) {
    return assemble(mesh, [](const ElementMatrices& e) { return e.mass; });
}

std::vector<double> load_vector(const Mesh1D& mesh, const SourceFunction& f) {
    // Gauss-Legendre, two points on the reference element [0,1].
    const double g = 0.5 / std::sqrt(3.0);
    const double points[2] = {0.5 - g, 0.5 + g};

    const std::size_t n = mesh.n_intervals();
    const auto x = mesh.nodes();
    const auto h = mesh.element_lengths();
    std::vector<double> rhs(mesh.interior_count(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double left = 0.0;
        double right = 0.0;
        for (double t : points) {
            const double fx = f(x[k] + t * h[k]) * 0.5 * h[k];
            left += fx * (1.0 - t);
            right += fx * t;
        }
        if (k >= 1) rhs[k - 1] += left;
        if (k + 1 <= n - 1) rhs[k] += right;
    }
    return rhs;
}

std::vector<double> load_vector_from_solution(const Mesh1D& mesh, const FemSolution& w) {
    if (!same_mesh(mesh, w.mesh())) throw DimensionError("source lives on a different mesh");
    const std::size_t n = mesh.n_intervals();
    const auto h = mesh.element_lengths();
    const auto v = w.values();
    std::vector<double> rhs(mesh.interior_count(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double m = h[k] / 6.0;
        if (k >= 1) rhs[k - 1] += m * (2.0 * v[k] + v[k + 1]);
        if (k + 1 <= n - 1) rhs[k] += m * (v[k] + 2.0 * v[k + 1]);
    }
    return rhs;
}

}  // namespace lidstone
