#include "lidstone/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "lidstone/error.hpp"

namespace lidstone {

namespace {

void validate_intervals(std::size_t n) {
    if (n < 4) throw ParameterError("n_intervals", "must be at least 4");
    if (n % 2 != 0) throw ParameterError("n_intervals", "must be even");
}

// h_k = x_k - x_{k-1}; the differences are exact, so they telescope back to 1.
std::vector<double> differences(const std::vector<double>& nodes) {
    std::vector<double> h(nodes.size() - 1);
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = nodes[k + 1] - nodes[k];
    return h;
}

}  // namespace

const char* to_string(MeshKind kind) noexcept {
    return kind == MeshKind::Uniform ? "uniform" : "shishkin";
}

void ShishkinParams::validate() const {
    validate_intervals(n_intervals);
    if (!(epsilon > 0.0)) throw ParameterError("epsilon", "must be positive");
    if (!(epsilon <= 1.0)) throw ParameterError("epsilon", "must not exceed 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha", "must be positive");
    if (!(sigma >= 2.0) || !std::isfinite(sigma)) throw ParameterError("sigma", "must be at least 2");
}

std::size_t Mesh1D::locate(double x) const noexcept {
    const auto it = std::upper_bound(nodes_.begin() + 1, nodes_.end() - 1, x);
    return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

Mesh1D build_uniform(std::size_t n_intervals) {
    validate_intervals(n_intervals);
    std::vector<double> nodes(n_intervals + 1);
    for (std::size_t i = 0; i <= n_intervals; ++i) {
        nodes[i] = static_cast<double>(i) / static_cast<double>(n_intervals);
    }
    auto lengths = differences(nodes);
    return Mesh1D(std::move(nodes), std::move(lengths), MeshKind::Uniform, std::nullopt);
}

double transition_point(const ShishkinParams& params) {
    params.validate();
    const double layer = params.sigma / params.alpha * params.epsilon *
                         std::log(static_cast<double>(params.n_intervals));
    return std::min(0.5, layer);
}

Mesh1D build_shishkin(const ShishkinParams& params) {
    const double tau = transition_point(params);
    const std::size_t n = params.n_intervals;
    const std::size_t half = n / 2;
    const double h_fine = 2.0 * tau / static_cast<double>(n);
    const double h_coarse = 2.0 * (1.0 - tau) / static_cast<double>(n);

    std::vector<double> nodes(n + 1, 0.0);
    for (std::size_t k = 1; k < half; ++k) nodes[k] = static_cast<double>(k) * h_fine;
    nodes[half] = tau;
    for (std::size_t k = half + 1; k < n; ++k) {
        nodes[k] = tau + static_cast<double>(k - half) * h_coarse;
    }
    nodes[n] = 1.0;
    auto lengths = differences(nodes);
    return Mesh1D(std::move(nodes), std::move(lengths), MeshKind::Shishkin, tau);
}

bool check_assumption(const ShishkinParams& params, double c) noexcept {
    return params.epsilon <= c / static_cast<double>(params.n_intervals);
}

}  // namespace lidstone
