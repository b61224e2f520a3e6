#include "lidstone/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "lidstone/error.hpp"
#include "lidstone/solver.hpp"

namespace lidstone {

namespace {

struct Cell {
    double epsilon;
    std::size_t n;
    MeshKind kind;
};

std::shared_ptr<const Mesh1D> make_mesh(const SweepConfig& config, const Cell& cell) {
    if (cell.kind == MeshKind::Uniform) return std::make_shared<const Mesh1D>(build_uniform(cell.n));
    return std::make_shared<const Mesh1D>(build_shishkin(
        {.n_intervals = cell.n, .epsilon = cell.epsilon, .alpha = config.alpha, .sigma = config.sigma}));
}

ProblemCoefficients model_coefficients(double epsilon) { return {.epsilon = epsilon, .a = 1.0, .b = 1.0}; }

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

/// Runs body(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any worker is rethrown on the caller's thread.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

void SweepConfig::validate() const {
    for (double eps : epsilons) {
        if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("epsilons", "values must lie in (0,1]");
    }
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] < 4 || n_values[i] % 2 != 0) {
            throw ParameterError("n_values", "values must be even and at least 4");
        }
        if (i > 0 && n_values[i] <= n_values[i - 1]) {
            throw ParameterError("n_values", "values must be strictly ascending");
        }
    }
    if (mesh_kinds.empty()) throw ParameterError("mesh_kinds", "must name at least one mesh kind");
    for (std::size_t i = 0; i < mesh_kinds.size(); ++i) {
        if (std::count(mesh_kinds.begin(), mesh_kinds.end(), mesh_kinds[i]) > 1) {
            throw ParameterError("mesh_kinds", "duplicate mesh kind");
        }
    }
    if (!(sigma >= 2.0) || !std::isfinite(sigma)) throw ParameterError("sigma", "must be at least 2");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("alpha", "must be positive");
    if (!(assumption_constant > 0.0)) throw ParameterError("assumption_constant", "must be positive");
}

double max_error(const FemSolution& u_n, const ExactModel& model, Measurement measurement) {
    const auto x = u_n.mesh().nodes();
    const auto v = u_n.values();
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(exact_u(model, x[i]) - v[i]));
    }
    if (measurement == Measurement::NodesAndMidpoints) {
        for (std::size_t k = 0; k + 1 < x.size(); ++k) {
            const double mid = 0.5 * (x[k] + x[k + 1]);
            worst = std::max(worst, std::abs(exact_u(model, mid) - 0.5 * (v[k] + v[k + 1])));
        }
    }
    return worst;
}

std::optional<double> convergence_rate(double error_fine, double error_coarse) noexcept {
    if (!(error_fine > 0.0) || !(error_coarse > 0.0)) return std::nullopt;
    return std::log(error_coarse / error_fine) / std::log(2.0);
}

std::vector<RunRecord> run_sweep(const SweepConfig& config) {
    config.validate();

    std::vector<Cell> cells;
    for (double eps : config.epsilons) {
        for (std::size_t n : config.n_values) {
            for (MeshKind kind : config.mesh_kinds) cells.push_back({eps, n, kind});
        }
    }

    std::vector<RunRecord> records(cells.size());
    parallel_for(cells.size(), config.jobs, [&](std::size_t i) {
        const Cell& cell = cells[i];
        const auto mesh = make_mesh(config, cell);
        const auto result = solve_fourth_order(mesh, model_coefficients(cell.epsilon), exact_f);
        RunRecord& r = records[i];
        r.n_intervals = cell.n;
        r.epsilon = cell.epsilon;
        r.mesh_kind = cell.kind;
        r.max_error = max_error(result.u, make_exact_model(cell.epsilon), config.measurement);
        r.assumption_ok = check_assumption(
            {.n_intervals = cell.n, .epsilon = cell.epsilon, .alpha = config.alpha, .sigma = config.sigma},
            config.assumption_constant);
    });

    // Timing is kept sequential so concurrent cells never skew each other.
    if (config.repetitions > 0) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto mesh = make_mesh(config, cells[i]);
            std::vector<double> assembly;
            std::vector<double> solve;
            for (unsigned rep = 0; rep < config.repetitions; ++rep) {
                const auto t = solve_fourth_order(mesh, model_coefficients(cells[i].epsilon), exact_f).timings;
                assembly.push_back(t.assembly());
                solve.push_back(t.solve());
            }
            records[i].assembly_seconds = median(std::move(assembly));
            records[i].solve_seconds = median(std::move(solve));
        }
    }

    // Chain rates within each (epsilon, kind) series. Cells are laid out
    // epsilon-major, then N, then kind.
    const std::size_t kinds = config.mesh_kinds.size();
    const std::size_t per_eps = config.n_values.size() * kinds;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if ((i % per_eps) < kinds) continue;
        const RunRecord& coarse = records[i - kinds];
        if (records[i].n_intervals != 2 * coarse.n_intervals) continue;
        records[i].rate = convergence_rate(records[i].max_error, coarse.max_error);
    }
    return records;
}

double timing_scaling(std::span<const RunRecord> records) {
    std::vector<std::pair<double, double>> points;
    for (const auto& r : records) {
        if (r.solve_seconds > 0.0 && r.n_intervals > 0) {
            points.emplace_back(std::log(static_cast<double>(r.n_intervals)), std::log(r.solve_seconds));
        }
    }
    if (points.size() < 4) throw InsufficientDataError("timing fit needs at least four timed records");
    const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
    if (hi->first - lo->first < 3.0 * std::log(2.0) - 1e-12) {
        throw InsufficientDataError("timing fit needs N spanning at least three octaves");
    }

    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [x, y] : points) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    return sxy / sxx;
}

std::optional<SweepConfig> preset(std::string_view name) {
    const auto doubling = [](std::size_t from, std::size_t to) {
        std::vector<std::size_t> n;
        for (std::size_t v = from; v <= to; v *= 2) n.push_back(v);
        return n;
    };
    const std::vector<double> small_eps{1e-10, 1e-8, 1e-6};
    const std::vector<double> large_eps{1e-4, 1e-2, 1.0};

    SweepConfig c;
    if (name == "table1" || name == "table3") {
        c.epsilons = small_eps;
        c.n_values = doubling(4, 8192);
    } else if (name == "table2" || name == "table4") {
        c.epsilons = large_eps;
        c.n_values = doubling(4, 8192);
    } else if (name == "table5") {
        c.epsilons = small_eps;
        c.n_values = doubling(512, 16384);
    } else if (name == "table6") {
        c.epsilons = large_eps;
        c.n_values = doubling(512, 8192);
    } else if (name == "epsilon-one") {
        c.epsilons = {1.0};
        c.n_values = doubling(4, 8192);
    } else {
        return std::nullopt;
    }
    return c;
}

}  // namespace lidstone
