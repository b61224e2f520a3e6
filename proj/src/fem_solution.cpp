#include "lidstone/fem_solution.hpp"

#include <algorithm>

#include "lidstone/error.hpp"

namespace lidstone {

FemSolution::FemSolution(std::shared_ptr<const Mesh1D> mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
    if (!mesh_) throw ParameterError("mesh", "must not be null");
    if (values_.size() != mesh_->nodes().size()) {
        throw DimensionError("solution needs one value per mesh node");
    }
    if (values_.front() != 0.0 || values_.back() != 0.0) {
        throw ParameterError("values", "boundary values must be exactly zero");
    }
}

FemSolution FemSolution::zero(std::shared_ptr<const Mesh1D> mesh) {
    const std::size_t count = mesh ? mesh->nodes().size() : 0;
    return FemSolution(std::move(mesh), std::vector<double>(count, 0.0));
}

double FemSolution::operator()(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("x", "must lie in [0,1]");
    const auto nodes = mesh_->nodes();
    const std::size_t k = mesh_->locate(x);
    if (x == nodes[k]) return values_[k];
    if (x == nodes[k + 1]) return values_[k + 1];
    const double t = (x - nodes[k]) / (nodes[k + 1] - nodes[k]);
    return (1.0 - t) * values_[k] + t * values_[k + 1];
}

bool same_mesh(const Mesh1D& lhs, const Mesh1D& rhs) noexcept {
    if (&lhs == &rhs) return true;
    const auto a = lhs.nodes();
    const auto b = rhs.nodes();
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace lidstone
