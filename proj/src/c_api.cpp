#include "lidstone/lidstone.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "lidstone/error.hpp"
#include "lidstone/experiments.hpp"
#include "lidstone/oracle.hpp"
#include "lidstone/solver.hpp"

struct lidstone_mesh {
    std::shared_ptr<const lidstone::Mesh1D> mesh;
};

struct lidstone_solution {
    lidstone::DecoupledSolution result;
    double epsilon;
};

struct lidstone_sweep_config {
    lidstone::SweepConfig config;
};

struct lidstone_records {
    std::vector<lidstone::RunRecord> records;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_field;

lidstone_status fail(lidstone_status status, std::string message, std::string field = {}) {
    g_last_error = std::move(message);
    g_last_field = std::move(field);
    return status;
}

/// Runs `body`, translating library exceptions into status codes.
template <class Body>
lidstone_status guarded(Body&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        g_last_field.clear();
        return LIDSTONE_OK;
    } catch (const lidstone::ParameterError& e) {
        return fail(LIDSTONE_ERR_INVALID_ARGUMENT, e.what(), e.field());
    } catch (const lidstone::InsufficientDataError& e) {
        return fail(LIDSTONE_ERR_INSUFFICIENT_DATA, e.what());
    } catch (const lidstone::DimensionError& e) {
        return fail(LIDSTONE_ERR_DIMENSION, e.what());
    } catch (const lidstone::SingularMatrixError& e) {
        return fail(LIDSTONE_ERR_SINGULAR, e.what());
    } catch (const lidstone::NumericalError& e) {
        return fail(LIDSTONE_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LIDSTONE_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LIDSTONE_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LIDSTONE_ERR_INTERNAL, "unknown error");
    }
}

#define LIDSTONE_REQUIRE(ptr)                                                          \
    do {                                                                               \
        if ((ptr) == nullptr) return fail(LIDSTONE_ERR_NULL_POINTER, #ptr " is null"); \
    } while (0)

lidstone::MeshKind to_kind(lidstone_mesh_kind kind) {
    switch (kind) {
        case LIDSTONE_MESH_UNIFORM: return lidstone::MeshKind::Uniform;
        case LIDSTONE_MESH_SHISHKIN: return lidstone::MeshKind::Shishkin;
    }
    throw lidstone::ParameterError("mesh_kind", "unknown mesh kind");
}

lidstone::Measurement to_measurement(lidstone_measurement m) {
    switch (m) {
        case LIDSTONE_MEASURE_NODES: return lidstone::Measurement::NodesOnly;
        case LIDSTONE_MEASURE_NODES_AND_MIDPOINTS: return lidstone::Measurement::NodesAndMidpoints;
    }
    throw lidstone::ParameterError("measurement", "unknown measurement mode");
}

const lidstone::FemSolution& field_of(const lidstone_solution* s, lidstone_field field) {
    switch (field) {
        case LIDSTONE_FIELD_W: return s->result.w;
        case LIDSTONE_FIELD_U: return s->result.u;
    }
    throw lidstone::ParameterError("field", "unknown field");
}

void copy_out(std::span<const double> from, double* out, size_t capacity) {
    if (capacity < from.size()) {
        throw lidstone::DimensionError("output buffer holds " + std::to_string(capacity) +
                                       " values, need " + std::to_string(from.size()));
    }
    std::copy(from.begin(), from.end(), out);
}

lidstone_status solve_with(const lidstone_mesh* mesh, double epsilon, double a, double b,
                           const lidstone::SourceFunction& f, lidstone_solution** out) {
    LIDSTONE_REQUIRE(mesh);
    LIDSTONE_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        const lidstone::ProblemCoefficients coeffs{.epsilon = epsilon, .a = a, .b = b};
        auto result = lidstone::solve_fourth_order(mesh->mesh, coeffs, f);
        *out = new lidstone_solution{std::move(result), epsilon};
    });
}

}  // namespace

extern "C" {

const char* lidstone_last_error(void) { return g_last_error.c_str(); }

const char* lidstone_last_error_field(void) { return g_last_field.c_str(); }

const char* lidstone_status_string(lidstone_status status) {
    switch (status) {
        case LIDSTONE_OK: return "ok";
        case LIDSTONE_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LIDSTONE_ERR_DIMENSION: return "dimension mismatch";
        case LIDSTONE_ERR_SINGULAR: return "singular matrix";
        case LIDSTONE_ERR_NUMERICAL: return "numerical failure";
        case LIDSTONE_ERR_INSUFFICIENT_DATA: return "insufficient data";
        case LIDSTONE_ERR_NULL_POINTER: return "null pointer";
        case LIDSTONE_ERR_OUT_OF_RANGE: return "out of range";
        case LIDSTONE_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

lidstone_status lidstone_mesh_uniform(size_t n_intervals, lidstone_mesh** out) {
    LIDSTONE_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto mesh = std::make_shared<const lidstone::Mesh1D>(lidstone::build_uniform(n_intervals));
        *out = new lidstone_mesh{std::move(mesh)};
    });
}

lidstone_status lidstone_mesh_shishkin(size_t n_intervals, double epsilon, double alpha,
                                       double sigma, lidstone_mesh** out) {
    LIDSTONE_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto mesh = std::make_shared<const lidstone::Mesh1D>(lidstone::build_shishkin(
            {.n_intervals = n_intervals, .epsilon = epsilon, .alpha = alpha, .sigma = sigma}));
        *out = new lidstone_mesh{std::move(mesh)};
    });
}

void lidstone_mesh_free(lidstone_mesh* mesh) { delete mesh; }

lidstone_status lidstone_mesh_node_count(const lidstone_mesh* mesh, size_t* out) {
    LIDSTONE_REQUIRE(mesh);
    LIDSTONE_REQUIRE(out);
    *out = mesh->mesh->nodes().size();
    return LIDSTONE_OK;
}

lidstone_status lidstone_mesh_nodes(const lidstone_mesh* mesh, double* out, size_t capacity) {
    LIDSTONE_REQUIRE(mesh);
    LIDSTONE_REQUIRE(out);
    return guarded([&] { copy_out(mesh->mesh->nodes(), out, capacity); });
}

lidstone_status lidstone_mesh_kind_of(const lidstone_mesh* mesh, lidstone_mesh_kind* out) {
    LIDSTONE_REQUIRE(mesh);
    LIDSTONE_REQUIRE(out);
    *out = mesh->mesh->kind() == lidstone::MeshKind::Uniform ? LIDSTONE_MESH_UNIFORM
                                                             : LIDSTONE_MESH_SHISHKIN;
    return LIDSTONE_OK;
}

lidstone_status lidstone_mesh_tau(const lidstone_mesh* mesh, double* tau, int* has_tau) {
    LIDSTONE_REQUIRE(mesh);
    LIDSTONE_REQUIRE(tau);
    const auto t = mesh->mesh->tau();
    *tau = t.value_or(0.5);
    if (has_tau != nullptr) *has_tau = t.has_value() ? 1 : 0;
    return LIDSTONE_OK;
}

lidstone_status lidstone_check_assumption(size_t n_intervals, double epsilon, double c,
                                          int* out) {
    LIDSTONE_REQUIRE(out);
    *out = lidstone::check_assumption({.n_intervals = n_intervals, .epsilon = epsilon}, c) ? 1 : 0;
    return LIDSTONE_OK;
}

lidstone_status lidstone_solve_poly(const lidstone_mesh* mesh, double epsilon, double a,
                                    double b, const double* coeffs, size_t n_coeffs,
                                    lidstone_solution** out) {
    if (n_coeffs > 0) LIDSTONE_REQUIRE(coeffs);
    std::vector<double> c = n_coeffs > 0 ? std::vector<double>(coeffs, coeffs + n_coeffs)
                                         : std::vector<double>{1.0};
    const auto f = [c = std::move(c)](double x) {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    return solve_with(mesh, epsilon, a, b, f, out);
}

lidstone_status lidstone_solve_fn(const lidstone_mesh* mesh, double epsilon, double a, double b,
                                  lidstone_source_fn f, void* user_data,
                                  lidstone_solution** out) {
    LIDSTONE_REQUIRE(f);
    return solve_with(mesh, epsilon, a, b, [f, user_data](double x) { return f(x, user_data); }, out);
}

void lidstone_solution_free(lidstone_solution* solution) { delete solution; }

lidstone_status lidstone_solution_node_count(const lidstone_solution* solution, size_t* out) {
    LIDSTONE_REQUIRE(solution);
    LIDSTONE_REQUIRE(out);
    *out = solution->result.u.values().size();
    return LIDSTONE_OK;
}

lidstone_status lidstone_solution_nodes(const lidstone_solution* solution, double* out,
                                        size_t capacity) {
    LIDSTONE_REQUIRE(solution);
    LIDSTONE_REQUIRE(out);
    return guarded([&] { copy_out(solution->result.u.mesh().nodes(), out, capacity); });
}

lidstone_status lidstone_solution_values(const lidstone_solution* solution, lidstone_field field,
                                         double* out, size_t capacity) {
    LIDSTONE_REQUIRE(solution);
    LIDSTONE_REQUIRE(out);
    return guarded([&] { copy_out(field_of(solution, field).values(), out, capacity); });
}

lidstone_status lidstone_solution_eval(const lidstone_solution* solution, lidstone_field field,
                                       double x, double* out) {
    LIDSTONE_REQUIRE(solution);
    LIDSTONE_REQUIRE(out);
    return guarded([&] { *out = field_of(solution, field)(x); });
}

lidstone_status lidstone_solution_timings(const lidstone_solution* solution,
                                          lidstone_timings* out) {
    LIDSTONE_REQUIRE(solution);
    LIDSTONE_REQUIRE(out);
    const auto& t = solution->result.timings;
    *out = {t.poisson_assembly, t.poisson_solve, t.cdr_assembly, t.cdr_solve};
    return LIDSTONE_OK;
}

lidstone_status lidstone_solution_max_error(const lidstone_solution* solution,
                                            lidstone_measurement measurement, double* out) {
    LIDSTONE_REQUIRE(solution);
    LIDSTONE_REQUIRE(out);
    return guarded([&] {
        *out = lidstone::max_error(solution->result.u, lidstone::make_exact_model(solution->epsilon),
                                   to_measurement(measurement));
    });
}

lidstone_status lidstone_exact_u(double epsilon, double x, double* out) {
    LIDSTONE_REQUIRE(out);
    return guarded([&] { *out = lidstone::exact_u(lidstone::make_exact_model(epsilon), x); });
}

lidstone_status lidstone_exact_w(double x, double* out) {
    LIDSTONE_REQUIRE(out);
    if (!(x >= 0.0 && x <= 1.0)) return fail(LIDSTONE_ERR_INVALID_ARGUMENT, "x: must lie in [0,1]", "x");
    *out = lidstone::exact_w(x);
    return LIDSTONE_OK;
}

lidstone_status lidstone_convergence_rate(double error_fine, double error_coarse, double* rate,
                                          int* has_rate) {
    LIDSTONE_REQUIRE(rate);
    LIDSTONE_REQUIRE(has_rate);
    const auto r = lidstone::convergence_rate(error_fine, error_coarse);
    *has_rate = r.has_value() ? 1 : 0;
    *rate = r.value_or(std::nan(""));
    return LIDSTONE_OK;
}

lidstone_status lidstone_sweep_config_create(lidstone_sweep_config** out) {
    LIDSTONE_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new lidstone_sweep_config{}; });
}

lidstone_status lidstone_sweep_config_preset(const char* name, lidstone_sweep_config** out) {
    LIDSTONE_REQUIRE(name);
    LIDSTONE_REQUIRE(out);
    *out = nullptr;
    auto config = lidstone::preset(name);
    if (!config) return fail(LIDSTONE_ERR_OUT_OF_RANGE, std::string("unknown preset '") + name + "'", "preset");
    return guarded([&] { *out = new lidstone_sweep_config{std::move(*config)}; });
}

void lidstone_sweep_config_free(lidstone_sweep_config* config) { delete config; }

lidstone_status lidstone_sweep_config_set_epsilons(lidstone_sweep_config* config,
                                                   const double* values, size_t count) {
    LIDSTONE_REQUIRE(config);
    if (count > 0) LIDSTONE_REQUIRE(values);
    return guarded([&] { config->config.epsilons.assign(values, values + count); });
}

lidstone_status lidstone_sweep_config_set_n_values(lidstone_sweep_config* config,
                                                   const size_t* values, size_t count) {
    LIDSTONE_REQUIRE(config);
    if (count > 0) LIDSTONE_REQUIRE(values);
    return guarded([&] { config->config.n_values.assign(values, values + count); });
}

lidstone_status lidstone_sweep_config_set_mesh_kinds(lidstone_sweep_config* config,
                                                     const lidstone_mesh_kind* kinds,
                                                     size_t count) {
    LIDSTONE_REQUIRE(config);
    if (count > 0) LIDSTONE_REQUIRE(kinds);
    return guarded([&] {
        std::vector<lidstone::MeshKind> converted;
        for (size_t i = 0; i < count; ++i) converted.push_back(to_kind(kinds[i]));
        config->config.mesh_kinds = std::move(converted);
    });
}

lidstone_status lidstone_sweep_config_set_sigma(lidstone_sweep_config* config, double sigma) {
    LIDSTONE_REQUIRE(config);
    config->config.sigma = sigma;
    return LIDSTONE_OK;
}

lidstone_status lidstone_sweep_config_set_alpha(lidstone_sweep_config* config, double alpha) {
    LIDSTONE_REQUIRE(config);
    config->config.alpha = alpha;
    return LIDSTONE_OK;
}

lidstone_status lidstone_sweep_config_set_measurement(lidstone_sweep_config* config,
                                                      lidstone_measurement measurement) {
    LIDSTONE_REQUIRE(config);
    return guarded([&] { config->config.measurement = to_measurement(measurement); });
}

lidstone_status lidstone_sweep_config_set_jobs(lidstone_sweep_config* config, unsigned jobs) {
    LIDSTONE_REQUIRE(config);
    config->config.jobs = jobs;
    return LIDSTONE_OK;
}

lidstone_status lidstone_sweep_config_set_repetitions(lidstone_sweep_config* config,
                                                      unsigned repetitions) {
    LIDSTONE_REQUIRE(config);
    config->config.repetitions = repetitions;
    return LIDSTONE_OK;
}

lidstone_status lidstone_run_sweep(const lidstone_sweep_config* config, lidstone_records** out) {
    LIDSTONE_REQUIRE(config);
    LIDSTONE_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new lidstone_records{lidstone::run_sweep(config->config)}; });
}

void lidstone_records_free(lidstone_records* records) { delete records; }

lidstone_status lidstone_records_size(const lidstone_records* records, size_t* out) {
    LIDSTONE_REQUIRE(records);
    LIDSTONE_REQUIRE(out);
    *out = records->records.size();
    return LIDSTONE_OK;
}

lidstone_status lidstone_records_get(const lidstone_records* records, size_t index,
                                     lidstone_run_record* out) {
    LIDSTONE_REQUIRE(records);
    LIDSTONE_REQUIRE(out);
    if (index >= records->records.size()) return fail(LIDSTONE_ERR_OUT_OF_RANGE, "record index out of range");
    const auto& r = records->records[index];
    *out = {
        .n_intervals = r.n_intervals,
        .epsilon = r.epsilon,
        .mesh_kind = r.mesh_kind == lidstone::MeshKind::Uniform ? LIDSTONE_MESH_UNIFORM
                                                                : LIDSTONE_MESH_SHISHKIN,
        .max_error = r.max_error,
        .has_rate = r.rate ? 1 : 0,
        .rate = r.rate.value_or(std::nan("")),
        .assembly_s = r.assembly_seconds,
        .solve_s = r.solve_seconds,
        .assumption_ok = r.assumption_ok ? 1 : 0,
    };
    return LIDSTONE_OK;
}

lidstone_status lidstone_timing_scaling(const lidstone_run_record* records, size_t count,
                                        double* slope) {
    LIDSTONE_REQUIRE(slope);
    if (count > 0) LIDSTONE_REQUIRE(records);
    return guarded([&] {
        std::vector<lidstone::RunRecord> converted;
        for (size_t i = 0; i < count; ++i) {
            lidstone::RunRecord r;
            r.n_intervals = records[i].n_intervals;
            r.solve_seconds = records[i].solve_s;
            converted.push_back(r);
        }
        *slope = lidstone::timing_scaling(converted);
    });
}

}  // extern "C"
