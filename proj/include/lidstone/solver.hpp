#pragma once

#include <memory>

#include "lidstone/assembly.hpp"
#include "lidstone/fem_solution.hpp"

namespace lidstone {

/// Wall-clock seconds per stage, split into assembly and linear solve.
struct StageTimings {
    double poisson_assembly = 0.0;
    double poisson_solve = 0.0;
    double cdr_assembly = 0.0;
    double cdr_solve = 0.0;

    double assembly() const noexcept { return poisson_assembly + cdr_assembly; }
    double solve() const noexcept { return poisson_solve + cdr_solve; }
};

/// Output of the two-stage pipeline. `w` and `u` share one mesh object.
struct DecoupledSolution {
    FemSolution w;
    FemSolution u;
    StageTimings timings;
};

/// Galerkin solution of -w'' = f, w(0) = w(1) = 0.
FemSolution solve_poisson(std::shared_ptr<const Mesh1D> mesh, const SourceFunction& f);

/// Galerkin solution of -eps u'' - a u' + b u = source, u(0) = u(1) = 0.
FemSolution solve_cdr(std::shared_ptr<const Mesh1D> mesh, const ProblemCoefficients& coeffs,
                      const FemSolution& source);

/// Decoupled solve of the fourth-order Lidstone problem
///
///   -eps u'''' - a u''' + b u'' = -f,   u = u'' = 0 at x = 0, 1,
///
/// as the Poisson stage -w'' = f followed by -eps u'' - a u' + b u = w_n on
/// the same mesh. The second stage uses the discrete w_n, not the exact w.
DecoupledSolution solve_fourth_order(std::shared_ptr<const Mesh1D> mesh,
                                     const ProblemCoefficients& coeffs, const SourceFunction& f);

}  // namespace lidstone
