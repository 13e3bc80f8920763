#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace calibkit::cli {

// Reproduces the three-candidate example end to end: eigen.csv, pss.csv,
// profile.csv, summary.json plus metadata sidecars under out_dir. Returns 0
// iff every golden check passes; 3 when any reference value is missed (the
// per-check report lands in summary.json and on `out`).
struct ExampleOptions {
    std::filesystem::path out_dir;
};
int cmd_example1(const ExampleOptions& options, std::ostream& out, std::ostream& err);

// Runs calibration methods from a manifest; writes results.json, results.txt.
// method: "" = manifest's method list, "all" = every method applicable to the
// problem's simulator, otherwise a single method name.
struct CalibrateOptions {
    std::filesystem::path manifest;
    std::filesystem::path out_dir;
    std::string method;
    int quad_order = 0;            // 0 = manifest value
    std::vector<double> phi_grid;  // empty = manifest grid
};
int cmd_calibrate(const CalibrateOptions& options, std::ostream& out, std::ostream& err);

// Convergence-rate sweep over design sizes; writes rates.csv and rates.json
// (per-size errors and fitted log-log slopes per method).
struct RatesOptions {
    std::filesystem::path manifest;
    std::filesystem::path out_dir;
    std::vector<int> sizes;  // empty = manifest sizes, else {11,21,41,81,161}
    int quad_order = 0;
    std::vector<double> phi_grid;
};
int cmd_rates(const RatesOptions& options, std::ostream& out, std::ostream& err);

// Nystrom eigenanalysis of a kernel on an interval; writes eigenvalues.csv and
// modes.csv (eigenfunctions sampled on a grid).
struct EigOptions {
    std::string kernel_json = "{\"family\":\"gaussian\",\"phi\":1.0}";
    double lower = -1.0;
    double upper = 1.0;
    int quad_order = 64;
    int modes = 5;
    int grid_points = 201;
    std::filesystem::path out_dir;
};
int cmd_eig(const EigOptions& options, std::ostream& out, std::ostream& err);

// Fits a kernel interpolant to CSV data; writes interpolator.json and
// predictions.csv (on a 1-D grid when given, else at the design points).
struct InterpOptions {
    std::filesystem::path design_csv;
    std::filesystem::path values_csv;
    std::string kernel_json;
    std::string domain;  // "a:b" per dimension, comma separated
    std::string grid;    // "a:b:steps" prediction grid (1-D designs)
    std::filesystem::path out_dir;
};
int cmd_interp(const InterpOptions& options, std::ostream& out, std::ostream& err);

// Shared error-to-exit-code guard: calibkit errors map input -> 1, data -> 2,
// numerical -> 3; anything else reports as internal and returns 3.
int guarded(std::ostream& err, const std::function<int()>& body);

// "a:b:steps" -> equispaced values (steps >= 1; a <= b). Throws InputError.
std::vector<double> parse_grid_spec(const std::string& text);

// "11,21,41" -> sizes. Throws InputError.
std::vector<int> parse_size_list(const std::string& text);

}  // namespace calibkit::cli
