#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lidstone/lidstone.h"

namespace lidstone::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitIo = 3,
    kExitNumerical = 4,
};

/// Error carrying the process exit code it should map to.
class CliError : public std::runtime_error {
public:
    CliError(ExitCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Sweep settings as collected from a preset, a JSON file and flags. Unset
/// fields leave the underlying configuration untouched.
struct SweepRequest {
    std::optional<std::vector<double>> epsilons;
    std::optional<std::vector<std::size_t>> n_values;
    std::optional<std::vector<lidstone_mesh_kind>> mesh_kinds;
    std::optional<double> sigma;
    std::optional<double> alpha;
    std::optional<lidstone_measurement> measurement;
    std::optional<unsigned> jobs;
    std::optional<unsigned> repetitions;

    /// Fields set in `other` replace ours.
    void override_with(const SweepRequest& other);
};

std::vector<double> parse_double_list(std::string_view text, std::string_view flag);
std::vector<std::size_t> parse_size_list(std::string_view text, std::string_view flag);
std::vector<lidstone_mesh_kind> parse_mesh_kinds(std::string_view text, std::string_view flag);
lidstone_measurement parse_measurement(std::string_view text, std::string_view flag);

/// Flat JSON object mirroring the sweep configuration fields. Unknown keys,
/// wrong types and malformed JSON raise CliError(kExitValidation) with the
/// line/column or field involved.
SweepRequest parse_sweep_config(std::string_view json_text);

/// Maps a rejected C API parameter name to the command-line flag.
std::string flag_for_field(std::string_view field);

/// Scientific notation with ten significant digits.
std::string format_real(double value);

/// CSV header of the sweep output.
inline constexpr std::string_view kSweepHeader =
    "epsilon,N,mesh,max_error,rate,assembly_s,solve_s,assumption_ok";

std::string format_record(const lidstone_run_record& record);

/// Column-aligned rendering of CSV text; lines starting with '#' pass through.
std::string render_table(std::string_view csv);

}  // namespace lidstone::cli
