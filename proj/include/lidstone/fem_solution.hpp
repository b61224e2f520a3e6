#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lidstone/mesh.hpp"

namespace lidstone {

/// Continuous piecewise-linear function with homogeneous Dirichlet values.
class FemSolution {
public:
    /// `values` holds all N+1 nodal coefficients; the two boundary entries
    /// must be exactly zero.
    FemSolution(std::shared_ptr<const Mesh1D> mesh, std::vector<double> values);

    /// Zero function on `mesh`.
    static FemSolution zero(std::shared_ptr<const Mesh1D> mesh);

    const Mesh1D& mesh() const noexcept { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const noexcept { return mesh_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Linear interpolation; exact nodal value when x is a node.
    double operator()(double x) const;

private:
    std::shared_ptr<const Mesh1D> mesh_;
    std::vector<double> values_;
};

/// Same object, or meshes with identical nodes.
bool same_mesh(const Mesh1D& lhs, const Mesh1D& rhs) noexcept;

}  // namespace lidstone
