#include "calibkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "calibkit/errors.hpp"
#include "calibkit/examples.hpp"

namespace calibkit {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw DataError("cannot read file: " + path.string());
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open file for writing: " + path.string());
    out << text;
    out.flush();
    if (!out) throw DataError("cannot write file: " + path.string());
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(what + ": " + e.what());
    }
}

double require_number(const json& j, const std::string& key, const std::string& what) {
    if (!j.contains(key) || !j[key].is_number())
        throw DataError(what + ": missing numeric field '" + key + "'");
    return j[key].get<double>();
}

Eigen::VectorXd vector_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw DataError(what + ": expected an array of numbers");
    Eigen::VectorXd v(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw DataError(what + ": element " + std::to_string(i) +
                                               " is not a number");
        v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    }
    return v;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Eigen::MatrixXd matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw DataError(what + ": expected a non-empty array of rows");
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw DataError(what + ": rows must be non-empty arrays");
    Eigen::MatrixXd m(j.size(), cols);
    for (size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw DataError(what + ": row " + std::to_string(r) + " has inconsistent length");
        for (size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number())
                throw DataError(what + ": row " + std::to_string(r) + " holds a non-number");
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j[r][c].get<double>();
        }
    }
    return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json kernel_to_json_obj(const KernelSpec& spec) {
    json j;
    j["family"] = spec.family == KernelFamily::gaussian ? "gaussian" : "matern";
    j["phi"] = spec.phi;
    if (spec.family == KernelFamily::matern) j["nu"] = spec.nu;
    return j;
}

KernelSpec kernel_from_json_obj(const json& j, const std::string& what) {
    if (!j.is_object()) throw DataError(what + ": expected an object");
    if (!j.contains("family") || !j["family"].is_string())
        throw DataError(what + ": missing string field 'family'");
    const std::string family = j["family"].get<std::string>();
    const double phi = require_number(j, "phi", what);
    if (family == "gaussian" && j.contains("nu"))
        throw DataError(what + ": 'nu' is only valid for matern kernels");
    if (family != "gaussian" && family != "matern")
        throw DataError(what + ": unknown family '" + family + "' (expected gaussian or matern)");
    // The factories validate; report bad parameter values as data errors so
    // broken manifests and kernel files map to the data exit code.
    try {
        return family == "gaussian" ? KernelSpec::gaussian(phi)
                                    : KernelSpec::matern(require_number(j, "nu", what), phi);
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw DataError(what + ": " + e.what());
    }
}

json box_to_json(const BoxDomain& box) {
    json j;
    j["lower"] = vector_to_json(box.lower);
    j["upper"] = vector_to_json(box.upper);
    return j;
}

BoxDomain box_from_json(const json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("lower") || !j.contains("upper"))
        throw DataError(what + ": expected an object with 'lower' and 'upper'");
    try {
        return BoxDomain(vector_from_json(j["lower"], what + ".lower"),
                         vector_from_json(j["upper"], what + ".upper"));
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw DataError(what + ": " + e.what());
    }
}

json design_to_json_obj(const Design& design) {
    json j;
    j["domain"] = box_to_json(design.domain);
    j["points"] = matrix_to_json(design.points);
    return j;
}

Design design_from_json_obj(const json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("points"))
        throw DataError(what + ": expected an object with 'domain' and 'points'");
    const BoxDomain domain = box_from_json(j["domain"], what + ".domain");
    const Eigen::MatrixXd pts = matrix_from_json(j["points"], what + ".points");
    try {
        return Design(pts, domain);
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw DataError(what + ": " + e.what());
    }
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(std::move(cur));
    }
    return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

double parse_cell(const std::string& cell, const std::filesystem::path& path, size_t line) {
    if (cell.empty()) return std::numeric_limits<double>::quiet_NaN();
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || (end && *end != '\0'))
        throw DataError(path.string() + ":" + std::to_string(line) + ": cannot parse '" + cell +
                        "' as a number");
    return v;
}

}  // namespace

std::string version() {
#ifdef CALIBKIT_VERSION
    return CALIBKIT_VERSION;
#else
    return "0.0.0";
#endif
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string kernel_to_json(const KernelSpec& spec) { return kernel_to_json_obj(spec).dump(); }

KernelSpec kernel_from_json(const std::string& text) {
    return kernel_from_json_obj(parse_json(text, "kernel json"), "kernel json");
}

std::string design_to_json(const Design& design) { return design_to_json_obj(design).dump(); }

Design design_from_json(const std::string& text) {
    return design_from_json_obj(parse_json(text, "design json"), "design json");
}

std::string interpolator_to_json(const Interpolator& interp) {
    json j;
    j["design"] = design_to_json_obj(interp.design);
    j["kernel"] = kernel_to_json_obj(interp.kernel);
    j["values"] = vector_to_json(interp.values);
    j["coefficients"] = vector_to_json(interp.coefficients);
    j["nugget_used"] = interp.nugget_used;
    return j.dump();
}

Interpolator interpolator_from_json(const std::string& text) {
    const json j = parse_json(text, "interpolator json");
    if (!j.is_object()) throw DataError("interpolator json: expected an object");
    for (const char* key : {"design", "kernel", "values", "coefficients", "nugget_used"})
        if (!j.contains(key))
            throw DataError(std::string("interpolator json: missing field '") + key + "'");

    Interpolator interp;
    interp.design = design_from_json_obj(j["design"], "interpolator json.design");
    interp.kernel = kernel_from_json_obj(j["kernel"], "interpolator json.kernel");
    interp.values = vector_from_json(j["values"], "interpolator json.values");
    interp.coefficients = vector_from_json(j["coefficients"], "interpolator json.coefficients");
    if (!j["nugget_used"].is_number())
        throw DataError("interpolator json: 'nugget_used' must be a number");
    interp.nugget_used = j["nugget_used"].get<double>();

    const int n = interp.design.size();
    if (interp.values.size() != n || interp.coefficients.size() != n)
        throw DataError("interpolator json: values/coefficients length does not match the design");
    if (!(interp.nugget_used >= 0.0) || !std::isfinite(interp.nugget_used))
        throw DataError("interpolator json: 'nugget_used' must be a finite nonnegative number");

    Eigen::MatrixXd a = gram(interp.kernel, interp.design);
    a.diagonal().array() += interp.nugget_used;
    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success)
        throw NumericalError("interpolator json: stored nugget does not factorize the Gram");
    interp.chol_lower = llt.matrixL();
    return interp;
}

std::optional<int> CsvTable::column_index(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
    if (table.columns.empty()) throw InputError("write_csv: table has no columns");
    if (table.data.size() > 0 && table.data.cols() != static_cast<Eigen::Index>(table.columns.size()))
        throw InputError("write_csv: data width does not match the column names");

    std::ostringstream out;
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (Eigen::Index r = 0; r < table.data.rows(); ++r) {
        for (Eigen::Index c = 0; c < table.data.cols(); ++c) {
            if (c) out << ',';
            const double v = table.data(r, c);
            if (!std::isnan(v)) out << format_double(v);
        }
        out << '\n';
    }
    write_file(path, out.str());
}

CsvTable read_csv(const std::filesystem::path& path) {
    const std::vector<std::string> lines = split_lines(read_file(path));
    if (lines.empty()) throw DataError(path.string() + ": empty csv file");

    CsvTable table;
    table.columns = split_cells(lines[0]);
    const size_t width = table.columns.size();

    std::vector<Eigen::VectorXd> rows;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::vector<std::string> cells = split_cells(lines[i]);
        if (cells.size() != width)
            throw DataError(path.string() + ":" + std::to_string(i + 1) + ": expected " +
                            std::to_string(width) + " cells, found " +
                            std::to_string(cells.size()));
        Eigen::VectorXd row(width);
        for (size_t c = 0; c < width; ++c) row[c] = parse_cell(cells[c], path, i + 1);
        rows.push_back(std::move(row));
    }

    table.data.resize(rows.size(), width);
    for (size_t r = 0; r < rows.size(); ++r) table.data.row(r) = rows[r];
    return table;
}

void write_design_csv(const Design& design, const std::filesystem::path& path) {
    CsvTable table;
    for (int c = 0; c < design.dim(); ++c) table.columns.push_back("x" + std::to_string(c + 1));
    table.data = design.points;
    write_csv(table, path);
}

Design read_design_csv(const std::filesystem::path& path, const BoxDomain& domain) {
    const CsvTable table = read_csv(path);
    if (static_cast<int>(table.columns.size()) != domain.dim())
        throw DataError(path.string() + ": expected " + std::to_string(domain.dim()) +
                        " columns for the domain, found " + std::to_string(table.columns.size()));
    if (!table.data.allFinite())
        throw DataError(path.string() + ": design points must be finite (no empty cells)");
    try {
        return Design(table.data, domain);
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

void write_values_csv(const Eigen::VectorXd& values, const std::filesystem::path& path,
                      const std::string& column) {
    CsvTable table;
    table.columns.push_back(column);
    table.data = values;
    write_csv(table, path);
}

Eigen::VectorXd read_values_csv(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    if (table.columns.size() != 1)
        throw DataError(path.string() + ": expected a single-column values file, found " +
                        std::to_string(table.columns.size()) + " columns");
    if (!table.data.allFinite())
        throw DataError(path.string() + ": values must be finite (no empty cells)");
    return table.data.col(0);
}

namespace {

Design design_from_ref(const json& j, const BoxDomain& domain,
                       const std::filesystem::path& base_dir, const std::string& what) {
    if (j.is_string())
        return read_design_csv(base_dir / j.get<std::string>(), domain);
    if (j.is_array()) {
        try {
            return Design(matrix_from_json(j, what), domain);
        } catch (const DataError&) {
            throw;
        } catch (const Error& e) {
            throw DataError(what + ": " + e.what());
        }
    }
    throw DataError(what + ": expected a csv path or an inline array of points");
}

Eigen::VectorXd values_from_ref(const json& j, const std::filesystem::path& base_dir,
                                const std::string& what) {
    if (j.is_string()) return read_values_csv(base_dir / j.get<std::string>());
    if (j.is_array()) {
        const Eigen::VectorXd v = vector_from_json(j, what);
        if (!v.allFinite()) throw DataError(what + ": values must be finite");
        return v;
    }
    throw DataError(what + ": expected a csv path or an inline array of numbers");
}

CalibrationProblem problem_from_json_obj(const json& j, const std::filesystem::path& base_dir) {
    for (const char* key : {"domain", "theta", "design", "values", "simulator"})
        if (!j.contains(key))
            throw DataError(std::string("manifest problem: missing field '") + key + "'");

    CalibrationProblem p;
    p.domain = box_from_json(j["domain"], "manifest problem.domain");

    const json& th = j["theta"];
    const BoxDomain* theta_box = nullptr;
    BoxDomain theta_box_storage;
    if (th.is_object() && th.contains("candidates")) {
        const json& cj = th["candidates"];
        if (!cj.is_array() || cj.empty())
            throw DataError("manifest problem.theta.candidates: expected a non-empty array");
        std::vector<Eigen::VectorXd> cands;
        for (size_t i = 0; i < cj.size(); ++i)
            cands.push_back(vector_from_json(cj[i], "manifest problem.theta.candidates[" +
                                                        std::to_string(i) + "]"));
        p.theta_region = std::move(cands);
    } else {
        theta_box_storage = box_from_json(th, "manifest problem.theta");
        theta_box = &theta_box_storage;
        p.theta_region = theta_box_storage;
    }

    p.physical_design = design_from_ref(j["design"], p.domain, base_dir, "manifest problem.design");
    p.physical_values = values_from_ref(j["values"], base_dir, "manifest problem.values");

    const json& sim = j["simulator"];
    if (!sim.is_object() || !sim.contains("type") || !sim["type"].is_string())
        throw DataError("manifest problem.simulator: expected an object with a 'type' string");
    const std::string type = sim["type"].get<std::string>();
    if (type != "expensive")
        throw DataError("manifest problem.simulator: type '" + type +
                        "' not available from manifests (cheap simulators come from builtin "
                        "problems; use \"type\": \"expensive\")");
    if (!theta_box)
        throw DataError("manifest problem.simulator: expensive simulators require a box theta "
                        "region, not candidates");
    for (const char* key : {"design", "values", "kernel"})
        if (!sim.contains(key))
            throw DataError(std::string("manifest problem.simulator: missing field '") + key +
                            "'");
    const BoxDomain product_domain = product(p.domain, *theta_box);
    ExpensiveSimulator expensive;
    expensive.design_g = design_from_ref(sim["design"], product_domain, base_dir,
                                         "manifest problem.simulator.design");
    expensive.values =
        values_from_ref(sim["values"], base_dir, "manifest problem.simulator.values");
    expensive.psi = kernel_from_json_obj(sim["kernel"], "manifest problem.simulator.kernel");
    p.simulator = std::move(expensive);
    return p;
}

std::vector<double> phi_grid_from_json(const json& j) {
    if (j.is_array()) {
        std::vector<double> grid;
        for (size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_number()) throw DataError("manifest phi_grid: non-numeric entry");
            grid.push_back(j[i].get<double>());
        }
        if (grid.empty()) throw DataError("manifest phi_grid: empty grid");
        return grid;
    }
    if (j.is_object()) {
        const double start = require_number(j, "start", "manifest phi_grid");
        const double stop = require_number(j, "stop", "manifest phi_grid");
        if (!j.contains("steps") || !j["steps"].is_number_integer())
            throw DataError("manifest phi_grid: missing integer field 'steps'");
        const int steps = j["steps"].get<int>();
        if (steps < 1 || (steps == 1 && start != stop) || stop < start)
            throw DataError("manifest phi_grid: need start <= stop and steps >= 1");
        std::vector<double> grid(steps);
        for (int i = 0; i < steps; ++i)
            grid[i] = steps == 1 ? start : start + (stop - start) * i / (steps - 1);
        return grid;
    }
    throw DataError("manifest phi_grid: expected an array or {start, stop, steps}");
}

std::vector<double> default_phi_grid() {
    std::vector<double> grid(51);
    for (int i = 0; i < 51; ++i) grid[i] = 1.0 + 5.0 * i / 50.0;
    return grid;
}

NuggetSettings nugget_from_json(const json& j) {
    if (!j.is_object() || !j.contains("policy") || !j["policy"].is_string())
        throw DataError("manifest nugget: expected an object with a 'policy' string");
    const std::string policy = j["policy"].get<std::string>();
    if (policy == "none") return NuggetSettings::none();
    if (policy != "adaptive")
        throw DataError("manifest nugget: unknown policy '" + policy +
                        "' (expected none or adaptive)");
    NuggetSettings s;
    if (j.contains("start")) s.start = require_number(j, "start", "manifest nugget");
    if (j.contains("factor")) s.factor = require_number(j, "factor", "manifest nugget");
    if (j.contains("max")) s.max = require_number(j, "max", "manifest nugget");
    if (!(s.start > 0.0) || !(s.factor > 1.0) || !(s.max >= s.start))
        throw DataError("manifest nugget: need start > 0, factor > 1, max >= start");
    return s;
}

}  // namespace

ProblemManifest load_manifest(const std::filesystem::path& path) {
    ProblemManifest m;
    m.raw_text = read_file(path);
    const json j = parse_json(m.raw_text, "manifest " + path.string());
    if (!j.is_object()) throw DataError("manifest " + path.string() + ": expected a json object");
    if (!j.contains("problem"))
        throw DataError("manifest " + path.string() + ": missing field 'problem'");

    const std::filesystem::path base_dir = path.has_parent_path() ? path.parent_path() : ".";

    if (j["problem"].is_string()) {
        m.builtin = j["problem"].get<std::string>();
        int default_n = m.builtin == "example1" ? 11 : 21;
        m.builtin_n = default_n;
        if (j.contains("n")) {
            if (!j["n"].is_number_integer() || j["n"].get<int>() < 2)
                throw DataError("manifest: 'n' must be an integer >= 2");
            m.builtin_n = j["n"].get<int>();
        }
        try {
            m.problem = make_builtin_problem(m.builtin, m.builtin_n);
            m.calibration_kernel = builtin_default_kernel(m.builtin);
        } catch (const DataError&) {
            throw;
        } catch (const Error& e) {
            throw DataError(std::string("manifest: ") + e.what());
        }
    } else if (j["problem"].is_object()) {
        m.problem = problem_from_json_obj(j["problem"], base_dir);
        if (!j.contains("kernel"))
            throw DataError("manifest: explicit problems require a 'kernel' field");
    } else {
        throw DataError("manifest: 'problem' must be a builtin name or an object");
    }

    if (j.contains("kernel"))
        m.calibration_kernel = kernel_from_json_obj(j["kernel"], "manifest kernel");

    if (j.contains("quad_order")) {
        if (!j["quad_order"].is_number_integer() || j["quad_order"].get<int>() < 1)
            throw DataError("manifest: 'quad_order' must be a positive integer");
        m.quad_order = j["quad_order"].get<int>();
    }

    m.phi_grid = j.contains("phi_grid") ? phi_grid_from_json(j["phi_grid"]) : default_phi_grid();
    for (double phi : m.phi_grid)
        if (!(phi > 0.0) || !std::isfinite(phi))
            throw DataError("manifest phi_grid: values must be positive and finite");

    if (j.contains("schedule")) {
        const json& s = j["schedule"];
        if (!s.is_object()) throw DataError("manifest schedule: expected an object");
        if (s.contains("c")) m.schedule.c = require_number(s, "c", "manifest schedule");
        if (s.contains("gamma"))
            m.schedule.gamma = require_number(s, "gamma", "manifest schedule");
        if (!(m.schedule.c > 0.0) || !(m.schedule.gamma >= 0.0 && m.schedule.gamma < 1.0))
            throw DataError("manifest schedule: need c > 0 and gamma in [0, 1)");
    }

    if (j.contains("sizes")) {
        if (!j["sizes"].is_array()) throw DataError("manifest sizes: expected an array");
        for (const auto& e : j["sizes"]) {
            if (!e.is_number_integer() || e.get<int>() < 2)
                throw DataError("manifest sizes: entries must be integers >= 2");
            m.sizes.push_back(e.get<int>());
        }
    }

    if (j.contains("methods")) {
        if (!j["methods"].is_array() || j["methods"].empty())
            throw DataError("manifest methods: expected a non-empty array");
        for (const auto& e : j["methods"]) {
            if (!e.is_string()) throw DataError("manifest methods: entries must be strings");
            try {
                m.methods.push_back(method_from_name(e.get<std::string>()));
            } catch (const Error& err) {
                throw DataError(std::string("manifest methods: ") + err.what());
            }
        }
    } else {
        m.methods = {Method::ko, Method::l2};
    }

    if (j.contains("theta_star"))
        m.theta_star = vector_from_json(j["theta_star"], "manifest theta_star");

    if (j.contains("nugget")) m.nugget = nugget_from_json(j["nugget"]);

    try {
        m.problem.validate();
    } catch (const DataError&) {
        throw;
    } catch (const Error& e) {
        throw DataError(std::string("manifest problem: ") + e.what());
    }
    return m;
}

namespace {

json result_to_json_obj(const CalibrationResult& r) {
    json j;
    j["method"] = method_name(r.method);
    j["theta_hat"] = vector_to_json(r.theta_hat);
    j["candidate_index"] = r.candidate_index;
    j["objective_value"] = r.objective_value;
    j["nugget_used"] = r.nugget_used;
    j["fill_distance_d"] = r.fill_distance_d;
    if (r.fill_distance_g >= 0.0)
        j["fill_distance_g"] = r.fill_distance_g;
    else
        j["fill_distance_g"] = nullptr;
    if (r.phi_used >= 0.0)
        j["phi_used"] = r.phi_used;
    else
        j["phi_used"] = nullptr;
    j["tie"] = r.tie;
    j["optimizer_note"] = r.optimizer_note;
    return j;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string theta_text(const Eigen::VectorXd& theta) {
    if (theta.size() == 1) return short_num(theta[0]);
    std::string s = "(";
    for (Eigen::Index i = 0; i < theta.size(); ++i) {
        if (i) s += ", ";
        s += short_num(theta[i]);
    }
    return s + ")";
}

}  // namespace

std::string results_to_json(const std::vector<CalibrationResult>& results) {
    json j;
    j["results"] = json::array();
    for (const CalibrationResult& r : results) j["results"].push_back(result_to_json_obj(r));
    return j.dump(2) + "\n";
}

std::string results_to_table(const std::vector<CalibrationResult>& results) {
    const std::vector<std::string> header = {"method", "theta_hat", "objective", "phi",
                                             "nugget", "h(D)",      "tie",       "note"};
    std::vector<std::vector<std::string>> rows;
    rows.push_back(header);
    for (const CalibrationResult& r : results) {
        std::vector<std::string> row;
        row.push_back(method_name(r.method));
        row.push_back(theta_text(r.theta_hat));
        row.push_back(short_num(r.objective_value));
        row.push_back(r.phi_used >= 0.0 ? short_num(r.phi_used) : "-");
        row.push_back(r.nugget_used > 0.0 ? short_num(r.nugget_used) : "0");
        row.push_back(short_num(r.fill_distance_d));
        row.push_back(r.tie ? "yes" : "no");
        row.push_back(r.optimizer_note);
        rows.push_back(std::move(row));
    }

    std::vector<size_t> widths(header.size(), 0);
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream out;
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace calibkit
