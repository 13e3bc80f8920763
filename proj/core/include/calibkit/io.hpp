#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "calibkit/calibrate.hpp"
#include "calibkit/design.hpp"
#include "calibkit/interpolate.hpp"
#include "calibkit/kernels.hpp"

namespace calibkit {

std::string version();

// ---------------------------------------------------------------------------
// Formatting and hashing
// ---------------------------------------------------------------------------

// Shortest decimal with 17 significant digits ("%.17g"); round-trips exactly.
std::string format_double(double v);

uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// ---------------------------------------------------------------------------
// JSON round-trips. Schemas are documented in the README; parsing errors throw
// DataError.
// ---------------------------------------------------------------------------

// {"family": "gaussian"|"matern", "phi": number, "nu": number?}
std::string kernel_to_json(const KernelSpec& spec);
KernelSpec kernel_from_json(const std::string& text);

// {"domain": {"lower": [...], "upper": [...]}, "points": [[...], ...]}
std::string design_to_json(const Design& design);
Design design_from_json(const std::string& text);

// {"design": ..., "kernel": ..., "values": [...], "coefficients": [...],
//  "nugget_used": number}
std::string interpolator_to_json(const Interpolator& interp);
Interpolator interpolator_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// CSV tables: one header row naming columns, then numeric rows at 17
// significant digits. Cells may be empty (read back as NaN).
// ---------------------------------------------------------------------------

struct CsvTable {
    std::vector<std::string> columns;
    Eigen::MatrixXd data;  // NaN for empty cells

    int rows() const { return static_cast<int>(data.rows()); }
    std::optional<int> column_index(const std::string& name) const;
};

void write_csv(const CsvTable& table, const std::filesystem::path& path);
CsvTable read_csv(const std::filesystem::path& path);

// Designs as CSV: columns x1..xd, one point per row.
void write_design_csv(const Design& design, const std::filesystem::path& path);
Design read_design_csv(const std::filesystem::path& path, const BoxDomain& domain);

// Single-column response vectors (any header accepted on read).
void write_values_csv(const Eigen::VectorXd& values, const std::filesystem::path& path,
                      const std::string& column = "value");
Eigen::VectorXd read_values_csv(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Problem manifests (JSON). See README for the schema. Referenced CSV paths
// are resolved relative to the manifest's directory.
// ---------------------------------------------------------------------------

struct ProblemManifest {
    CalibrationProblem problem;
    KernelSpec calibration_kernel;
    std::string builtin;  // builtin family name, empty for explicit problems
    int builtin_n = 0;    // design size the problem was instantiated with
    int quad_order = 64;
    std::vector<double> phi_grid;  // profile-KO grid; default 51 points on [1,6]
    Schedule schedule;             // modified-KO schedule
    std::vector<int> sizes;        // rate-sweep design sizes
    std::vector<Method> methods;   // default {ko, l2}
    std::optional<Eigen::VectorXd> theta_star;
    NuggetSettings nugget;

    std::string raw_text;  // manifest bytes (hashed into output sidecars)
};

ProblemManifest load_manifest(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Result serialization
// ---------------------------------------------------------------------------

std::string results_to_json(const std::vector<CalibrationResult>& results);
std::string results_to_table(const std::vector<CalibrationResult>& results);

}  // namespace calibkit
