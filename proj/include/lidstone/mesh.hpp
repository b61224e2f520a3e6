#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lidstone {

enum class MeshKind { Uniform, Shishkin };

const char* to_string(MeshKind kind) noexcept;

/// Parameters of a one-sided Shishkin mesh with the layer at x = 0.
struct ShishkinParams {
    std::size_t n_intervals = 0;
    double epsilon = 1.0;
    double alpha = 1.0;  // lower bound of the convection coefficient
    double sigma = 3.0;  // transition-point constant, >= 2

    /// Throws ParameterError naming the first offending field.
    void validate() const;
};

/// Partition 0 = x_0 < x_1 < ... < x_N = 1 of the unit interval.
///
/// Immutable after construction. Element k spans [x_k, x_{k+1}] and has
/// length `element_lengths()[k]`.
class Mesh1D {
public:
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> element_lengths() const noexcept { return lengths_; }
    std::size_t n_intervals() const noexcept { return lengths_.size(); }
    std::size_t interior_count() const noexcept { return lengths_.size() - 1; }
    MeshKind kind() const noexcept { return kind_; }

    /// Transition point; present iff kind() == Shishkin.
    std::optional<double> tau() const noexcept { return tau_; }

    /// Index k of the element containing x (x clamped to [0,1]).
    std::size_t locate(double x) const noexcept;

    friend bool operator==(const Mesh1D&, const Mesh1D&) = default;

private:
    friend Mesh1D build_uniform(std::size_t n_intervals);
    friend Mesh1D build_shishkin(const ShishkinParams& params);

    Mesh1D(std::vector<double> nodes, std::vector<double> lengths, MeshKind kind,
           std::optional<double> tau)
        : nodes_(std::move(nodes)), lengths_(std::move(lengths)), kind_(kind), tau_(tau) {}

    std::vector<double> nodes_;
    std::vector<double> lengths_;
    MeshKind kind_;
    std::optional<double> tau_;
};

/// Equidistant mesh with h = 1/N. N must be even and >= 4.
Mesh1D build_uniform(std::size_t n_intervals);

/// tau = min{1/2, sigma / alpha * epsilon * ln N}.
double transition_point(const ShishkinParams& params);

/// N/2 equal elements on [0, tau] and N/2 equal elements on [tau, 1].
Mesh1D build_shishkin(const ShishkinParams& params);

/// True iff epsilon <= c / N (the convection-dominated regime).
bool check_assumption(const ShishkinParams& params, double c) noexcept;

}  // namespace lidstone
