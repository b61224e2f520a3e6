#pragma once

#include <array>
#include <functional>
#include <vector>

#include "lidstone/fem_solution.hpp"
#include "lidstone/mesh.hpp"
#include "lidstone/tridiag.hpp"

namespace lidstone {

/// Constant coefficients of  -eps u'' - a u' + b u = w.
struct ProblemCoefficients {
    double epsilon = 1.0;
    double a = 1.0;
    double b = 1.0;

    /// eps in (0,1], a > 0, b >= 0. Throws ParameterError.
    void validate() const;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Local matrices of the linear hat pair on one element of length h.
struct ElementMatrices {
    Matrix2 stiffness;   // int phi_j' phi_i'
    Matrix2 convection;  // int phi_j' phi_i
    Matrix2 mass;        // int phi_j phi_i
};

ElementMatrices element_matrices(double h);

using SourceFunction = std::function<double(double)>;

/// Interior operator of  int w' v'.
TridiagonalMatrix assemble_poisson(const Mesh1D& mesh);

/// Interior operator of  eps (u',v') - a (u',v) + b (u,v).
TridiagonalMatrix assemble_cdr(const Mesh1D& mesh, const ProblemCoefficients& coeffs);

/// Interior block of the global mass matrix.
TridiagonalMatrix assemble_mass(const Mesh1D& mesh);

/// (f, phi_i) over interior hats with two-point Gauss quadrature per element.
std::vector<double> load_vector(const Mesh1D& mesh, const SourceFunction& f);

/// (w, phi_i) for a piecewise-linear w, applied exactly through the element
/// mass blocks. Throws DimensionError when w lives on another mesh.
std::vector<double> load_vector_from_solution(const Mesh1D& mesh, const FemSolution& w);

}  // namespace lidstone
