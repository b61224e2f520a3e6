// Command-line front end for the lidstone solver library.
//
//   lidstone solve      --epsilon 1e-8 --n 32 --mesh shishkin
//   lidstone sweep      --preset table1 --jobs 4 --output table1.csv
//   lidstone table      table1.csv
//   lidstone mesh-dump  --epsilon 1e-8 --n 8
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "lidstone/lidstone.h"

namespace {

using namespace lidstone::cli;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* p) const { Free(p); }
};
using MeshHandle = std::unique_ptr<lidstone_mesh, HandleDeleter<lidstone_mesh, lidstone_mesh_free>>;
using SolutionHandle =
    std::unique_ptr<lidstone_solution, HandleDeleter<lidstone_solution, lidstone_solution_free>>;
using ConfigHandle = std::unique_ptr<lidstone_sweep_config,
                                     HandleDeleter<lidstone_sweep_config, lidstone_sweep_config_free>>;
using RecordsHandle =
    std::unique_ptr<lidstone_records, HandleDeleter<lidstone_records, lidstone_records_free>>;

/// Throws CliError for a failed C API call.
void check(lidstone_status status) {
    if (status == LIDSTONE_OK) return;
    const std::string message = lidstone_last_error();
    switch (status) {
        case LIDSTONE_ERR_INVALID_ARGUMENT:
            throw CliError(kExitValidation,
                           flag_for_field(lidstone_last_error_field()) + ": " + message);
        case LIDSTONE_ERR_OUT_OF_RANGE:
        case LIDSTONE_ERR_INSUFFICIENT_DATA:
            throw CliError(kExitValidation, message);
        default:
            throw CliError(kExitNumerical, std::string(lidstone_status_string(status)) + ": " + message);
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        if (!std::cout) throw CliError(kExitIo, "failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError(kExitIo, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw CliError(kExitIo, "failed writing '" + path + "'");
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kExitIo, "cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct MeshOptions {
    std::string epsilon = "1";
    std::string n;
    std::string mesh = "shishkin";
    double sigma = 3.0;
    double alpha = 1.0;
};

MeshHandle make_mesh(const MeshOptions& o, double epsilon, std::size_t n) {
    lidstone_mesh* raw = nullptr;
    const auto kinds = parse_mesh_kinds(o.mesh, "--mesh");
    if (kinds.size() != 1) throw CliError(kExitValidation, "--mesh: expected uniform or shishkin");
    if (kinds.front() == LIDSTONE_MESH_UNIFORM) {
        check(lidstone_mesh_uniform(n, &raw));
    } else {
        check(lidstone_mesh_shishkin(n, epsilon, o.alpha, o.sigma, &raw));
    }
    return MeshHandle(raw);
}

double single_double(const std::string& text, const char* flag) {
    const auto v = parse_double_list(text, flag);
    if (v.size() != 1) throw CliError(kExitValidation, std::string(flag) + ": expected a single value");
    return v.front();
}

std::size_t single_size(const std::string& text, const char* flag) {
    const auto v = parse_size_list(text, flag);
    if (v.size() != 1) throw CliError(kExitValidation, std::string(flag) + ": expected a single value");
    return v.front();
}

// solve ---------------------------------------------------------------------

struct SolveOptions : MeshOptions {
    double a = 1.0;
    double b = 1.0;
    std::string f_poly;
    std::string output;
};

/// Closed-form w for -w'' = c0 + c1 x + c2 x^2 with w(0) = w(1) = 0.
double poly_w(const std::vector<double>& c, double x) {
    const double c0 = c.size() > 0 ? c[0] : 0.0;
    const double c1 = c.size() > 1 ? c[1] : 0.0;
    const double c2 = c.size() > 2 ? c[2] : 0.0;
    const double slope = c0 / 2.0 + c1 / 6.0 + c2 / 12.0;
    return slope * x - (c0 * x * x / 2.0 + c1 * x * x * x / 6.0 + c2 * x * x * x * x / 12.0);
}

int run_solve(const SolveOptions& o) {
    const double epsilon = single_double(o.epsilon, "--epsilon");
    const std::size_t n = single_size(o.n, "--n");
    std::vector<double> poly{1.0};
    if (!o.f_poly.empty()) {
        poly = parse_double_list(o.f_poly, "--f-poly");
        if (poly.size() > 3) throw CliError(kExitValidation, "--f-poly: at most three coefficients c0,c1,c2");
    }
    const bool model = o.a == 1.0 && o.b == 1.0 && poly == std::vector<double>{1.0};

    const auto mesh = make_mesh(o, epsilon, n);
    lidstone_solution* raw = nullptr;
    check(lidstone_solve_poly(mesh.get(), epsilon, o.a, o.b, poly.data(), poly.size(), &raw));
    const SolutionHandle solution(raw);

    std::size_t count = 0;
    check(lidstone_solution_node_count(solution.get(), &count));
    std::vector<double> x(count), u(count), w(count);
    check(lidstone_solution_nodes(solution.get(), x.data(), count));
    check(lidstone_solution_values(solution.get(), LIDSTONE_FIELD_U, u.data(), count));
    check(lidstone_solution_values(solution.get(), LIDSTONE_FIELD_W, w.data(), count));

    std::string csv = "x,u_exact,u_fem,w_exact,w_fem\n";
    for (std::size_t i = 0; i < count; ++i) {
        double ue = std::nan("");
        if (model) check(lidstone_exact_u(epsilon, x[i], &ue));
        csv += format_real(x[i]) + ',' + (model ? format_real(ue) : std::string("nan")) + ',' +
               format_real(u[i]) + ',' + format_real(poly_w(poly, x[i])) + ',' + format_real(w[i]) +
               '\n';
    }
    write_output(o.output, csv);
    return kExitOk;
}

// sweep ---------------------------------------------------------------------

struct SweepOptions {
    std::string preset;
    std::string config;
    std::string epsilon;
    std::string n;
    std::string mesh;
    std::optional<double> sigma;
    std::optional<double> alpha;
    std::optional<double> a;
    std::optional<double> b;
    std::string measurement;
    std::optional<unsigned> jobs;
    std::optional<unsigned> repetitions;
    std::string output;
};

int run_sweep(const SweepOptions& o) {
    if ((o.a && *o.a != 1.0) || (o.b && *o.b != 1.0)) {
        throw CliError(kExitValidation, "--a/--b: sweeps measure errors against the model problem, which needs a = b = 1");
    }

    SweepRequest req;
    if (!o.config.empty()) req.override_with(parse_sweep_config(read_input(o.config)));

    SweepRequest flags;
    if (!o.epsilon.empty()) flags.epsilons = parse_double_list(o.epsilon, "--epsilon");
    if (!o.n.empty()) flags.n_values = parse_size_list(o.n, "--n");
    if (!o.mesh.empty()) flags.mesh_kinds = parse_mesh_kinds(o.mesh, "--mesh");
    if (!o.measurement.empty()) flags.measurement = parse_measurement(o.measurement, "--measurement");
    flags.sigma = o.sigma;
    flags.alpha = o.alpha;
    flags.jobs = o.jobs;
    flags.repetitions = o.repetitions;
    req.override_with(flags);

    lidstone_sweep_config* raw = nullptr;
    if (!o.preset.empty()) {
        check(lidstone_sweep_config_preset(o.preset.c_str(), &raw));
    } else {
        check(lidstone_sweep_config_create(&raw));
        if (!req.epsilons) throw CliError(kExitValidation, "--epsilon: required without --preset or a config file");
        if (!req.n_values) throw CliError(kExitValidation, "--n: required without --preset or a config file");
    }
    const ConfigHandle config(raw);

    if (req.epsilons) {
        if (req.epsilons->empty()) throw CliError(kExitValidation, "--epsilon: list must not be empty");
        check(lidstone_sweep_config_set_epsilons(config.get(), req.epsilons->data(), req.epsilons->size()));
    }
    if (req.n_values) {
        if (req.n_values->empty()) throw CliError(kExitValidation, "--n: list must not be empty");
        check(lidstone_sweep_config_set_n_values(config.get(), req.n_values->data(), req.n_values->size()));
    }
    if (req.mesh_kinds) {
        check(lidstone_sweep_config_set_mesh_kinds(config.get(), req.mesh_kinds->data(), req.mesh_kinds->size()));
    }
    if (req.sigma) check(lidstone_sweep_config_set_sigma(config.get(), *req.sigma));
    if (req.alpha) check(lidstone_sweep_config_set_alpha(config.get(), *req.alpha));
    if (req.measurement) check(lidstone_sweep_config_set_measurement(config.get(), *req.measurement));
    check(lidstone_sweep_config_set_jobs(config.get(), req.jobs.value_or(0)));
    if (req.repetitions) check(lidstone_sweep_config_set_repetitions(config.get(), *req.repetitions));

    lidstone_records* records_raw = nullptr;
    check(lidstone_run_sweep(config.get(), &records_raw));
    const RecordsHandle records(records_raw);

    std::size_t count = 0;
    check(lidstone_records_size(records.get(), &count));
    std::string csv = std::string(kSweepHeader) + '\n';
    for (std::size_t i = 0; i < count; ++i) {
        lidstone_run_record r{};
        check(lidstone_records_get(records.get(), i, &r));
        csv += format_record(r) + '\n';
    }
    write_output(o.output, csv);
    return kExitOk;
}

// mesh-dump -----------------------------------------------------------------

struct MeshDumpOptions : MeshOptions {
    std::string output;
};

int run_mesh_dump(const MeshDumpOptions& o) {
    const double epsilon = single_double(o.epsilon, "--epsilon");
    const std::size_t n = single_size(o.n, "--n");
    const auto mesh = make_mesh(o, epsilon, n);

    std::size_t count = 0;
    check(lidstone_mesh_node_count(mesh.get(), &count));
    std::vector<double> x(count);
    check(lidstone_mesh_nodes(mesh.get(), x.data(), count));
    double tau = 0.0;
    check(lidstone_mesh_tau(mesh.get(), &tau, nullptr));

    std::string csv = "# tau=" + format_real(tau) + '\n' + "index,x\n";
    for (std::size_t i = 0; i < count; ++i) csv += std::to_string(i) + ',' + format_real(x[i]) + '\n';
    write_output(o.output, csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decoupled finite element solver for singularly perturbed fourth-order problems"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem and write nodal values as CSV");
    solve_cmd->add_option("--epsilon", solve.epsilon, "Perturbation parameter in (0,1]")->required();
    solve_cmd->add_option("--n", solve.n, "Number of intervals (even, >= 4)")->required();
    solve_cmd->add_option("--mesh", solve.mesh, "uniform | shishkin")->capture_default_str();
    solve_cmd->add_option("--sigma", solve.sigma, "Transition-point constant")->capture_default_str();
    solve_cmd->add_option("--alpha", solve.alpha, "Lower bound of the convection coefficient")->capture_default_str();
    solve_cmd->add_option("--a", solve.a, "Convection coefficient")->capture_default_str();
    solve_cmd->add_option("--b", solve.b, "Reaction coefficient")->capture_default_str();
    solve_cmd->add_option("--f-poly", solve.f_poly, "Source polynomial coefficients c0,c1,c2");
    solve_cmd->add_option("--output", solve.output, "Output path (default stdout)");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run an (epsilon, N, mesh) error/timing sweep");
    sweep_cmd->add_option("--preset", sweep.preset, "table1..table6 | epsilon-one");
    sweep_cmd->add_option("--config", sweep.config, "JSON configuration file");
    sweep_cmd->add_option("--epsilon", sweep.epsilon, "Comma-separated epsilon values");
    sweep_cmd->add_option("--n", sweep.n, "Comma-separated ascending interval counts");
    sweep_cmd->add_option("--mesh", sweep.mesh, "uniform | shishkin | both");
    sweep_cmd->add_option("--sigma", sweep.sigma, "Transition-point constant (default 3)");
    sweep_cmd->add_option("--alpha", sweep.alpha, "Convection lower bound (default 1)");
    sweep_cmd->add_option("--a", sweep.a, "Convection coefficient (model problem: 1)");
    sweep_cmd->add_option("--b", sweep.b, "Reaction coefficient (model problem: 1)");
    sweep_cmd->add_option("--measurement", sweep.measurement, "nodes | nodes+mid");
    sweep_cmd->add_option("--jobs", sweep.jobs, "Concurrent cells (default: all processors)");
    sweep_cmd->add_option("--repetitions", sweep.repetitions, "Timing repetitions per cell (default 5)");
    sweep_cmd->add_option("--output", sweep.output, "Output path (default stdout)");

    std::string table_input;
    auto* table_cmd = app.add_subcommand("table", "Pretty-print a CSV file");
    table_cmd->add_option("input", table_input, "CSV path (default stdin)");

    MeshDumpOptions dump;
    auto* dump_cmd = app.add_subcommand("mesh-dump", "Write mesh nodes as CSV");
    dump_cmd->add_option("--epsilon", dump.epsilon, "Perturbation parameter in (0,1]")->required();
    dump_cmd->add_option("--n", dump.n, "Number of intervals (even, >= 4)")->required();
    dump_cmd->add_option("--mesh", dump.mesh, "uniform | shishkin")->capture_default_str();
    dump_cmd->add_option("--sigma", dump.sigma, "Transition-point constant")->capture_default_str();
    dump_cmd->add_option("--alpha", dump.alpha, "Convection lower bound")->capture_default_str();
    dump_cmd->add_option("--output", dump.output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (*solve_cmd) return run_solve(solve);
        if (*sweep_cmd) return run_sweep(sweep);
        if (*dump_cmd) return run_mesh_dump(dump);
        write_output("", render_table(read_input(table_input)));
        return kExitOk;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
