#include "cli_support.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace lidstone::cli {

namespace {

using json = nlohmann::json;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

[[noreturn]] void invalid(std::string_view flag, const std::string& message) {
    throw CliError(kExitValidation, std::string(flag) + ": " + message);
}

double parse_double(const std::string& token, std::string_view flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) invalid(flag, "'" + token + "' is not a number");
        return v;
    } catch (const std::logic_error&) {
        invalid(flag, "'" + token + "' is not a number");
    }
}

std::size_t parse_size(const std::string& token, std::string_view flag) {
    std::size_t v = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc{} || ptr != end || token.empty()) {
        invalid(flag, "'" + token + "' is not a non-negative integer");
    }
    return v;
}

/// 1-based line and column of a byte offset.
std::string position_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string field_name(std::string_view key) { return "config field '" + std::string(key) + "'"; }

double json_number(const json& v, std::string_view key) {
    if (!v.is_number()) invalid(field_name(key), "expected a number");
    return v.get<double>();
}

unsigned json_unsigned(const json& v, std::string_view key) {
    if (!v.is_number_unsigned()) invalid(field_name(key), "expected a non-negative integer");
    return v.get<unsigned>();
}

std::string json_string(const json& v, std::string_view key) {
    if (!v.is_string()) invalid(field_name(key), "expected a string");
    return v.get<std::string>();
}

const json& json_array(const json& v, std::string_view key) {
    if (!v.is_array()) invalid(field_name(key), "expected an array");
    return v;
}

}  // namespace

void SweepRequest::override_with(const SweepRequest& other) {
    if (other.epsilons) epsilons = other.epsilons;
    if (other.n_values) n_values = other.n_values;
    if (other.mesh_kinds) mesh_kinds = other.mesh_kinds;
    if (other.sigma) sigma = other.sigma;
    if (other.alpha) alpha = other.alpha;
    if (other.measurement) measurement = other.measurement;
    if (other.jobs) jobs = other.jobs;
    if (other.repetitions) repetitions = other.repetitions;
}

std::vector<double> parse_double_list(std::string_view text, std::string_view flag) {
    std::vector<double> out;
    for (const auto& token : split(text, ',')) {
        if (token.empty()) invalid(flag, "empty list entry");
        out.push_back(parse_double(token, flag));
    }
    return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text, std::string_view flag) {
    std::vector<std::size_t> out;
    for (const auto& token : split(text, ',')) {
        if (token.empty()) invalid(flag, "empty list entry");
        out.push_back(parse_size(token, flag));
    }
    return out;
}

std::vector<lidstone_mesh_kind> parse_mesh_kinds(std::string_view text, std::string_view flag) {
    const std::string t = trim(text);
    if (t == "uniform") return {LIDSTONE_MESH_UNIFORM};
    if (t == "shishkin") return {LIDSTONE_MESH_SHISHKIN};
    if (t == "both") return {LIDSTONE_MESH_UNIFORM, LIDSTONE_MESH_SHISHKIN};
    invalid(flag, "expected uniform, shishkin or both, got '" + t + "'");
}

lidstone_measurement parse_measurement(std::string_view text, std::string_view flag) {
    const std::string t = trim(text);
    if (t == "nodes") return LIDSTONE_MEASURE_NODES;
    if (t == "nodes+mid") return LIDSTONE_MEASURE_NODES_AND_MIDPOINTS;
    invalid(flag, "expected nodes or nodes+mid, got '" + t + "'");
}

SweepRequest parse_sweep_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        throw CliError(kExitValidation, "config parse error at " +
                                            position_of(json_text, e.byte > 0 ? e.byte - 1 : 0) +
                                            ": " + e.what());
    }
    if (!doc.is_object()) throw CliError(kExitValidation, "config: top level must be a JSON object");

    SweepRequest req;
    for (const auto& [key, value] : doc.items()) {
        if (key == "epsilons") {
            std::vector<double> v;
            for (const auto& e : json_array(value, key)) v.push_back(json_number(e, key));
            req.epsilons = std::move(v);
        } else if (key == "n_values") {
            std::vector<std::size_t> v;
            for (const auto& e : json_array(value, key)) v.push_back(json_unsigned(e, key));
            req.n_values = std::move(v);
        } else if (key == "mesh_kinds") {
            std::vector<lidstone_mesh_kind> v;
            for (const auto& e : json_array(value, key)) {
                const auto kinds = parse_mesh_kinds(json_string(e, key), field_name(key));
                v.insert(v.end(), kinds.begin(), kinds.end());
            }
            req.mesh_kinds = std::move(v);
        } else if (key == "sigma") {
            req.sigma = json_number(value, key);
        } else if (key == "alpha") {
            req.alpha = json_number(value, key);
        } else if (key == "measurement") {
            req.measurement = parse_measurement(json_string(value, key), field_name(key));
        } else if (key == "jobs") {
            req.jobs = json_unsigned(value, key);
        } else if (key == "repetitions") {
            req.repetitions = json_unsigned(value, key);
        } else {
            throw CliError(kExitValidation, "config: unknown field '" + key + "'");
        }
    }
    return req;
}

std::string flag_for_field(std::string_view field) {
    if (field == "epsilon" || field == "epsilons") return "--epsilon";
    if (field == "n_intervals" || field == "n_values") return "--n";
    if (field == "mesh_kinds" || field == "mesh_kind") return "--mesh";
    if (field.empty()) return "error";
    return "--" + std::string(field);
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9e", value);
    return buf;
}

std::string format_record(const lidstone_run_record& r) {
    std::string line = format_real(r.epsilon);
    line += ',' + std::to_string(r.n_intervals);
    line += r.mesh_kind == LIDSTONE_MESH_UNIFORM ? ",uniform," : ",shishkin,";
    line += format_real(r.max_error) + ',';
    if (r.has_rate) line += format_real(r.rate);
    line += ',' + format_real(r.assembly_s);
    line += ',' + format_real(r.solve_s);
    line += r.assumption_ok ? ",true" : ",false";
    return line;
}

std::string render_table(std::string_view csv) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> passthrough;  // comment lines, kept in order
    std::vector<std::size_t> comment_at;
    std::istringstream in{std::string(csv)};
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            comment_at.push_back(rows.size());
            passthrough.push_back(line);
            continue;
        }
        rows.push_back(split(line, ','));
    }

    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }

    std::string out;
    std::size_t next_comment = 0;
    for (std::size_t r = 0; r <= rows.size(); ++r) {
        while (next_comment < comment_at.size() && comment_at[next_comment] == r) {
            out += passthrough[next_comment++] + '\n';
        }
        if (r == rows.size()) break;
        std::string line;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0) line += "  ";
            line += rows[r][c];
            if (c + 1 < rows[r].size()) line.append(width[c] - rows[r][c].size(), ' ');
        }
        out += line + '\n';
        if (r == 0 && rows.size() > 1) {
            std::size_t total = 0;
            for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c > 0 ? 2 : 0);
            out += std::string(total, '-') + '\n';
        }
    }
    return out;
}

}  // namespace lidstone::cli
