/* C interface to the lidstone solver library.
 *
 * All functions return a lidstone_status; on failure a thread-local message
 * is available from lidstone_last_error(). Handles are opaque and owned by
 * the caller, who releases them with the matching *_free function (passing
 * NULL is allowed). */
#ifndef LIDSTONE_H
#define LIDSTONE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LIDSTONE_BUILDING)
#    define LIDSTONE_API __declspec(dllexport)
#  else
#    define LIDSTONE_API __declspec(dllimport)
#  endif
#else
#  define LIDSTONE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lidstone_status {
    LIDSTONE_OK = 0,
    LIDSTONE_ERR_INVALID_ARGUMENT = 1, /* parameter validation */
    LIDSTONE_ERR_DIMENSION = 2,        /* size or mesh mismatch */
    LIDSTONE_ERR_SINGULAR = 3,         /* near-zero pivot */
    LIDSTONE_ERR_NUMERICAL = 4,        /* post-condition failure */
    LIDSTONE_ERR_INSUFFICIENT_DATA = 5,
    LIDSTONE_ERR_NULL_POINTER = 6,
    LIDSTONE_ERR_OUT_OF_RANGE = 7,
    LIDSTONE_ERR_INTERNAL = 8
} lidstone_status;

typedef enum lidstone_mesh_kind {
    LIDSTONE_MESH_UNIFORM = 0,
    LIDSTONE_MESH_SHISHKIN = 1
} lidstone_mesh_kind;

typedef enum lidstone_measurement {
    LIDSTONE_MEASURE_NODES = 0,
    LIDSTONE_MEASURE_NODES_AND_MIDPOINTS = 1
} lidstone_measurement;

typedef enum lidstone_field {
    LIDSTONE_FIELD_W = 0, /* Poisson stage */
    LIDSTONE_FIELD_U = 1  /* convection-reaction-diffusion stage */
} lidstone_field;

typedef struct lidstone_mesh lidstone_mesh;
typedef struct lidstone_solution lidstone_solution;
typedef struct lidstone_sweep_config lidstone_sweep_config;
typedef struct lidstone_records lidstone_records;

typedef double (*lidstone_source_fn)(double x, void* user_data);

typedef struct lidstone_timings {
    double poisson_assembly_s;
    double poisson_solve_s;
    double cdr_assembly_s;
    double cdr_solve_s;
} lidstone_timings;

typedef struct lidstone_run_record {
    size_t n_intervals;
    double epsilon;
    lidstone_mesh_kind mesh_kind;
    double max_error;
    int has_rate;
    double rate;
    double assembly_s;
    double solve_s;
    int assumption_ok;
} lidstone_run_record;

LIDSTONE_API const char* lidstone_last_error(void);
LIDSTONE_API const char* lidstone_status_string(lidstone_status status);
/* Name of the parameter rejected by the last INVALID_ARGUMENT, or "". */
LIDSTONE_API const char* lidstone_last_error_field(void);

/* Meshes */
LIDSTONE_API lidstone_status lidstone_mesh_uniform(size_t n_intervals, lidstone_mesh** out);
LIDSTONE_API lidstone_status lidstone_mesh_shishkin(size_t n_intervals, double epsilon,
                                                    double alpha, double sigma,
                                                    lidstone_mesh** out);
LIDSTONE_API void lidstone_mesh_free(lidstone_mesh* mesh);
LIDSTONE_API lidstone_status lidstone_mesh_node_count(const lidstone_mesh* mesh, size_t* out);
LIDSTONE_API lidstone_status lidstone_mesh_nodes(const lidstone_mesh* mesh, double* out,
                                                 size_t capacity);
LIDSTONE_API lidstone_status lidstone_mesh_kind_of(const lidstone_mesh* mesh,
                                                   lidstone_mesh_kind* out);
/* Uniform meshes report tau = 0.5 and *has_tau = 0. */
LIDSTONE_API lidstone_status lidstone_mesh_tau(const lidstone_mesh* mesh, double* tau,
                                               int* has_tau);
LIDSTONE_API lidstone_status lidstone_check_assumption(size_t n_intervals, double epsilon,
                                                       double c, int* out);

/* Two-stage solve. The source is a polynomial f(x) = sum coeffs[k] x^k
 * (coeffs == NULL or n_coeffs == 0 selects f = 1) or a callback. */
LIDSTONE_API lidstone_status lidstone_solve_poly(const lidstone_mesh* mesh, double epsilon,
                                                 double a, double b, const double* coeffs,
                                                 size_t n_coeffs, lidstone_solution** out);
LIDSTONE_API lidstone_status lidstone_solve_fn(const lidstone_mesh* mesh, double epsilon,
                                               double a, double b, lidstone_source_fn f,
                                               void* user_data, lidstone_solution** out);
LIDSTONE_API void lidstone_solution_free(lidstone_solution* solution);
LIDSTONE_API lidstone_status lidstone_solution_node_count(const lidstone_solution* solution,
                                                          size_t* out);
LIDSTONE_API lidstone_status lidstone_solution_nodes(const lidstone_solution* solution,
                                                     double* out, size_t capacity);
LIDSTONE_API lidstone_status lidstone_solution_values(const lidstone_solution* solution,
                                                      lidstone_field field, double* out,
                                                      size_t capacity);
LIDSTONE_API lidstone_status lidstone_solution_eval(const lidstone_solution* solution,
                                                    lidstone_field field, double x,
                                                    double* out);
LIDSTONE_API lidstone_status lidstone_solution_timings(const lidstone_solution* solution,
                                                       lidstone_timings* out);
/* Max error of the u field against the model problem with the solution's
 * epsilon; only meaningful for a = b = 1, f = 1. */
LIDSTONE_API lidstone_status lidstone_solution_max_error(const lidstone_solution* solution,
                                                         lidstone_measurement measurement,
                                                         double* out);

/* Model problem oracle */
LIDSTONE_API lidstone_status lidstone_exact_u(double epsilon, double x, double* out);
LIDSTONE_API lidstone_status lidstone_exact_w(double x, double* out);

/* *has_rate = 0 when either error is not positive. */
LIDSTONE_API lidstone_status lidstone_convergence_rate(double error_fine, double error_coarse,
                                                       double* rate, int* has_rate);

/* Sweeps */
LIDSTONE_API lidstone_status lidstone_sweep_config_create(lidstone_sweep_config** out);
/* Unknown names return OUT_OF_RANGE. */
LIDSTONE_API lidstone_status lidstone_sweep_config_preset(const char* name,
                                                          lidstone_sweep_config** out);
LIDSTONE_API void lidstone_sweep_config_free(lidstone_sweep_config* config);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_epsilons(lidstone_sweep_config* config,
                                                                const double* values,
                                                                size_t count);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_n_values(lidstone_sweep_config* config,
                                                                const size_t* values,
                                                                size_t count);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_mesh_kinds(
    lidstone_sweep_config* config, const lidstone_mesh_kind* kinds, size_t count);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_sigma(lidstone_sweep_config* config,
                                                             double sigma);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_alpha(lidstone_sweep_config* config,
                                                             double alpha);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_measurement(
    lidstone_sweep_config* config, lidstone_measurement measurement);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_jobs(lidstone_sweep_config* config,
                                                            unsigned jobs);
LIDSTONE_API lidstone_status lidstone_sweep_config_set_repetitions(
    lidstone_sweep_config* config, unsigned repetitions);

LIDSTONE_API lidstone_status lidstone_run_sweep(const lidstone_sweep_config* config,
                                                lidstone_records** out);
LIDSTONE_API void lidstone_records_free(lidstone_records* records);
LIDSTONE_API lidstone_status lidstone_records_size(const lidstone_records* records,
                                                   size_t* out);
LIDSTONE_API lidstone_status lidstone_records_get(const lidstone_records* records,
                                                  size_t index, lidstone_run_record* out);
LIDSTONE_API lidstone_status lidstone_timing_scaling(const lidstone_run_record* records,
                                                     size_t count, double* slope);

#ifdef __cplusplus
}
#endif

#endif /* LIDSTONE_H */
