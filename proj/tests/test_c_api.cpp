// Exercises the shared library strictly through lidstone.h.
#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "lidstone/lidstone.h"

namespace {

double square_plus_one(double x, void* user) {
    ++*static_cast<int*>(user);
    return 1.0 + x * x;
}

}  // namespace

TEST(CApi, MeshLifecycle) {
    lidstone_mesh* mesh = nullptr;
    ASSERT_EQ(lidstone_mesh_shishkin(8, 1e-8, 1.0, 3.0, &mesh), LIDSTONE_OK);
    size_t count = 0;
    ASSERT_EQ(lidstone_mesh_node_count(mesh, &count), LIDSTONE_OK);
    EXPECT_EQ(count, 9u);
    std::vector<double> x(count);
    EXPECT_EQ(lidstone_mesh_nodes(mesh, x.data(), x.size()), LIDSTONE_OK);
    EXPECT_EQ(x.front(), 0.0);
    EXPECT_EQ(x.back(), 1.0);
    EXPECT_EQ(lidstone_mesh_nodes(mesh, x.data(), 3), LIDSTONE_ERR_DIMENSION);

    double tau = 0.0;
    int has_tau = 0;
    EXPECT_EQ(lidstone_mesh_tau(mesh, &tau, &has_tau), LIDSTONE_OK);
    EXPECT_EQ(has_tau, 1);
    EXPECT_NEAR(tau, 6.238324625039508e-08, 1e-22);
    lidstone_mesh_kind kind;
    EXPECT_EQ(lidstone_mesh_kind_of(mesh, &kind), LIDSTONE_OK);
    EXPECT_EQ(kind, LIDSTONE_MESH_SHISHKIN);
    lidstone_mesh_free(mesh);
    lidstone_mesh_free(nullptr);
}

TEST(CApi, ValidationErrorsCarryField) {
    lidstone_mesh* mesh = nullptr;
    EXPECT_EQ(lidstone_mesh_uniform(7, &mesh), LIDSTONE_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(mesh, nullptr);
    EXPECT_STREQ(lidstone_last_error_field(), "n_intervals");
    EXPECT_NE(std::string(lidstone_last_error()).find("even"), std::string::npos);

    EXPECT_EQ(lidstone_mesh_shishkin(8, 2.0, 1.0, 3.0, &mesh), LIDSTONE_ERR_INVALID_ARGUMENT);
    EXPECT_STREQ(lidstone_last_error_field(), "epsilon");
    EXPECT_EQ(lidstone_mesh_uniform(8, nullptr), LIDSTONE_ERR_NULL_POINTER);
    EXPECT_STREQ(lidstone_status_string(LIDSTONE_ERR_SINGULAR), "singular matrix");
}

TEST(CApi, SolveModelProblem) {
    lidstone_mesh* mesh = nullptr;
    ASSERT_EQ(lidstone_mesh_shishkin(64, 1e-10, 1.0, 3.0, &mesh), LIDSTONE_OK);
    lidstone_solution* sol = nullptr;
    ASSERT_EQ(lidstone_solve_poly(mesh, 1e-10, 1.0, 1.0, nullptr, 0, &sol), LIDSTONE_OK);
    lidstone_mesh_free(mesh);  // the solution keeps its own reference

    double err = 0.0;
    ASSERT_EQ(lidstone_solution_max_error(sol, LIDSTONE_MEASURE_NODES, &err), LIDSTONE_OK);
    EXPECT_NEAR(err, 2.243524402853088e-04, 1e-10);

    size_t count = 0;
    ASSERT_EQ(lidstone_solution_node_count(sol, &count), LIDSTONE_OK);
    std::vector<double> x(count), w(count);
    ASSERT_EQ(lidstone_solution_nodes(sol, x.data(), count), LIDSTONE_OK);
    ASSERT_EQ(lidstone_solution_values(sol, LIDSTONE_FIELD_W, w.data(), count), LIDSTONE_OK);
    for (size_t i = 0; i < count; ++i) EXPECT_NEAR(w[i], x[i] * (1 - x[i]) / 2, 1e-12);

    double mid = 0.0;
    EXPECT_EQ(lidstone_solution_eval(sol, LIDSTONE_FIELD_W, x[40], &mid), LIDSTONE_OK);
    EXPECT_EQ(mid, w[40]);
    EXPECT_EQ(lidstone_solution_eval(sol, LIDSTONE_FIELD_U, 2.0, &mid), LIDSTONE_ERR_INVALID_ARGUMENT);

    lidstone_timings t{};
    EXPECT_EQ(lidstone_solution_timings(sol, &t), LIDSTONE_OK);
    EXPECT_GE(t.poisson_solve_s, 0.0);
    lidstone_solution_free(sol);
}

TEST(CApi, CallbackSource) {
    lidstone_mesh* mesh = nullptr;
    ASSERT_EQ(lidstone_mesh_uniform(16, &mesh), LIDSTONE_OK);
    int calls = 0;
    lidstone_solution* by_fn = nullptr;
    ASSERT_EQ(lidstone_solve_fn(mesh, 0.1, 2.0, 0.5, square_plus_one, &calls, &by_fn), LIDSTONE_OK);
    EXPECT_GT(calls, 0);
    const double coeffs[] = {1.0, 0.0, 1.0};
    lidstone_solution* by_poly = nullptr;
    ASSERT_EQ(lidstone_solve_poly(mesh, 0.1, 2.0, 0.5, coeffs, 3, &by_poly), LIDSTONE_OK);
    std::vector<double> a(17), b(17);
    lidstone_solution_values(by_fn, LIDSTONE_FIELD_U, a.data(), 17);
    lidstone_solution_values(by_poly, LIDSTONE_FIELD_U, b.data(), 17);
    for (size_t i = 0; i < 17; ++i) EXPECT_DOUBLE_EQ(a[i], b[i]);

    lidstone_solution* bad = nullptr;
    EXPECT_EQ(lidstone_solve_poly(mesh, 0.1, -1.0, 0.5, coeffs, 3, &bad), LIDSTONE_ERR_INVALID_ARGUMENT);
    EXPECT_STREQ(lidstone_last_error_field(), "a");
    EXPECT_EQ(bad, nullptr);
    lidstone_solution_free(by_fn);
    lidstone_solution_free(by_poly);
    lidstone_mesh_free(mesh);
}

TEST(CApi, OracleAndRate) {
    double u = 1.0;
    EXPECT_EQ(lidstone_exact_u(1.0, 0.5, &u), LIDSTONE_OK);
    EXPECT_NEAR(u, 0.01159491606391616, 1e-14);
    double w = 0.0;
    EXPECT_EQ(lidstone_exact_w(0.5, &w), LIDSTONE_OK);
    EXPECT_EQ(w, 0.125);
    EXPECT_EQ(lidstone_exact_u(0.0, 0.5, &u), LIDSTONE_ERR_INVALID_ARGUMENT);

    double rate = 0.0;
    int has = 0;
    EXPECT_EQ(lidstone_convergence_rate(1e-4, 4e-4, &rate, &has), LIDSTONE_OK);
    EXPECT_EQ(has, 1);
    EXPECT_DOUBLE_EQ(rate, 2.0);
    EXPECT_EQ(lidstone_convergence_rate(0.0, 4e-4, &rate, &has), LIDSTONE_OK);
    EXPECT_EQ(has, 0);
    EXPECT_TRUE(std::isnan(rate));

    int ok = 0;
    EXPECT_EQ(lidstone_check_assumption(16, 1e-8, 1.0, &ok), LIDSTONE_OK);
    EXPECT_EQ(ok, 1);
}

TEST(CApi, SweepAndRecords) {
    lidstone_sweep_config* cfg = nullptr;
    ASSERT_EQ(lidstone_sweep_config_create(&cfg), LIDSTONE_OK);
    const double eps[] = {1.0};
    const size_t ns[] = {1024, 2048, 4096, 8192, 16384};
    const lidstone_mesh_kind kinds[] = {LIDSTONE_MESH_UNIFORM};
    ASSERT_EQ(lidstone_sweep_config_set_epsilons(cfg, eps, 1), LIDSTONE_OK);
    ASSERT_EQ(lidstone_sweep_config_set_n_values(cfg, ns, 5), LIDSTONE_OK);
    ASSERT_EQ(lidstone_sweep_config_set_mesh_kinds(cfg, kinds, 1), LIDSTONE_OK);
    ASSERT_EQ(lidstone_sweep_config_set_repetitions(cfg, 3), LIDSTONE_OK);
    ASSERT_EQ(lidstone_sweep_config_set_jobs(cfg, 2), LIDSTONE_OK);

    lidstone_records* recs = nullptr;
    ASSERT_EQ(lidstone_run_sweep(cfg, &recs), LIDSTONE_OK);
    size_t size = 0;
    ASSERT_EQ(lidstone_records_size(recs, &size), LIDSTONE_OK);
    ASSERT_EQ(size, 5u);
    std::vector<lidstone_run_record> rows(size);
    for (size_t i = 0; i < size; ++i) ASSERT_EQ(lidstone_records_get(recs, i, &rows[i]), LIDSTONE_OK);
    EXPECT_EQ(rows[0].has_rate, 0);
    EXPECT_EQ(rows[1].has_rate, 1);
    EXPECT_NEAR(rows[1].rate, 2.0, 0.05);
    EXPECT_GT(rows[4].solve_s, 0.0);
    lidstone_run_record out_of_range;
    EXPECT_EQ(lidstone_records_get(recs, 5, &out_of_range), LIDSTONE_ERR_OUT_OF_RANGE);

    double slope = 0.0;
    EXPECT_EQ(lidstone_timing_scaling(rows.data(), rows.size(), &slope), LIDSTONE_OK);
    EXPECT_TRUE(std::isfinite(slope));
    EXPECT_EQ(lidstone_timing_scaling(rows.data(), 2, &slope), LIDSTONE_ERR_INSUFFICIENT_DATA);

    lidstone_records_free(recs);
    lidstone_sweep_config_free(cfg);
}

TEST(CApi, PresetsAndConfigValidation) {
    lidstone_sweep_config* cfg = nullptr;
    EXPECT_EQ(lidstone_sweep_config_preset("nope", &cfg), LIDSTONE_ERR_OUT_OF_RANGE);
    ASSERT_EQ(lidstone_sweep_config_preset("table1", &cfg), LIDSTONE_OK);
    const size_t bad[] = {16, 8};
    ASSERT_EQ(lidstone_sweep_config_set_n_values(cfg, bad, 2), LIDSTONE_OK);
    lidstone_records* recs = nullptr;
    EXPECT_EQ(lidstone_run_sweep(cfg, &recs), LIDSTONE_ERR_INVALID_ARGUMENT);
    EXPECT_STREQ(lidstone_last_error_field(), "n_values");
    EXPECT_EQ(recs, nullptr);
    EXPECT_EQ(lidstone_sweep_config_set_measurement(cfg, static_cast<lidstone_measurement>(9)),
              LIDSTONE_ERR_INVALID_ARGUMENT);
    lidstone_sweep_config_free(cfg);
}
