#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <span>
#include <vector>

#include "lidstone/fem_solution.hpp"
#include "lidstone/mesh.hpp"
#include "lidstone/oracle.hpp"

namespace lidstone {

enum class Measurement { NodesOnly, NodesAndMidpoints };

struct RunRecord {
    std::size_t n_intervals = 0;
    double epsilon = 0.0;
    MeshKind mesh_kind = MeshKind::Uniform;
    double max_error = 0.0;
    std::optional<double> rate;  // empty on the first N of a series
    double assembly_seconds = 0.0;
    double solve_seconds = 0.0;
    bool assumption_ok = false;
};

/// Grid of (epsilon, N, mesh kind) cells for the model problem.
struct SweepConfig {
    std::vector<double> epsilons;
    std::vector<std::size_t> n_values;  // strictly ascending
    std::vector<MeshKind> mesh_kinds{MeshKind::Uniform, MeshKind::Shishkin};
    double sigma = 3.0;
    double alpha = 1.0;
    Measurement measurement = Measurement::NodesOnly;
    double assumption_constant = 1.0;
    unsigned jobs = 1;         // concurrent error evaluations; 0 = hardware
    unsigned repetitions = 5;  // timing repetitions (median); 0 disables timing

    /// Throws ParameterError.
    void validate() const;
};

/// Max-norm error of u_n against the exact model solution.
double max_error(const FemSolution& u_n, const ExactModel& model,
                 Measurement measurement = Measurement::NodesOnly);

/// log2(error_coarse / error_fine); empty when either error is not positive.
std::optional<double> convergence_rate(double error_fine, double error_coarse) noexcept;

/// One record per cell, ordered by epsilon, then mesh kind, then N.
/// Rates are chained along N within each (epsilon, kind) series and only
/// between consecutive doublings.
std::vector<RunRecord> run_sweep(const SweepConfig& config);

/// Least-squares slope of log(solve_seconds) against log(N). Needs at least
/// four records spanning three octaves; throws InsufficientDataError.
double timing_scaling(std::span<const RunRecord> records);

/// Named parameter grids: table1..table6
/// and epsilon-one. Returns empty for an unknown name.
std::optional<SweepConfig> preset(std::string_view name);

}  // namespace lidstone
