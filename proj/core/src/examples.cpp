#include "calibkit/examples.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "calibkit/errors.hpp"

namespace calibkit {
namespace {

constexpr double kPi = std::numbers::pi;

// Translate centers and coefficients shared by the closed form and the tabulated
// expensive design; built from the same equispaced grids as the design so the
// centers coincide bit-exactly with design points.
struct SpanBasis {
    Eigen::MatrixXd centers;  // g0_size x 2 rows (g_j, tau_j)
    Eigen::VectorXd coeff;
    Eigen::VectorXd g0;
    Eigen::VectorXd theta_grid;
};

const SpanBasis& span_basis() {
    static const SpanBasis basis = [] {
        SpanBasis b;
        b.g0 = equispaced(BoxDomain::interval(0.0, 1.0), SpanProblem::g0_size).points.col(0);
        b.theta_grid =
            equispaced(BoxDomain::interval(0.0, 2.0), SpanProblem::g_theta_size).points.col(0);
        b.centers.resize(SpanProblem::g0_size, 2);
        b.coeff.resize(SpanProblem::g0_size);
        const int slots[3] = {3, 6, 9};
        for (int j = 0; j < SpanProblem::g0_size; ++j) {
            b.centers(j, 0) = b.g0[j];
            b.centers(j, 1) = b.theta_grid[slots[j % 3]];
            b.coeff[j] = 0.8 * std::sin(3.0 * b.g0[j]) + 0.2;
        }
        return b;
    }();
    return basis;
}

std::vector<Eigen::VectorXd> integer_candidates(int count) {
    std::vector<Eigen::VectorXd> cands;
    cands.reserve(count);
    for (int i = 1; i <= count; ++i) {
        Eigen::VectorXd t(1);
        t[0] = static_cast<double>(i);
        cands.push_back(t);
    }
    return cands;
}

}  // namespace

Example1::Example1(int quad_order)
    : eig_(std::make_shared<const EigenSystem>(
          nystrom_eig(eigenstudy_kernel(), BoxDomain::interval(-1.0, 1.0), quad_order, 5))) {}

double Example1::eps(int candidate, double x) const {
    if (candidate < 0 || candidate > 2)
        throw InputError("Example1::eps: candidate must be 0, 1, or 2");
    if (candidate == 2) return std::sin(2.0 * kPi * x);
    return std::sqrt(20.0) * eig_->eigenfunction(candidate, x);
}

CalibrationProblem Example1::problem(int n_design) const {
    CalibrationProblem p;
    p.domain = BoxDomain::interval(-1.0, 1.0);
    p.theta_region = integer_candidates(3);
    p.physical_design = equispaced(p.domain, n_design);
    p.physical_values = Eigen::VectorXd::Zero(n_design);
    auto eig = eig_;
    p.simulator = CheapSimulator{[eig](const Eigen::VectorXd& x, const Eigen::VectorXd& theta) {
        const int c = static_cast<int>(std::lround(theta[0])) - 1;
        if (c < 0 || c > 2) throw InputError("example1 simulator: theta must be 1, 2, or 3");
        if (c == 2) return -std::sin(2.0 * kPi * x[0]);
        return -std::sqrt(20.0) * eig->eigenfunction(c, x[0]);
    }};
    p.physical_oracle = [](const Eigen::VectorXd&) { return 0.0; };
    return p;
}

double RateProblem::yp(double x) {
    // discrepancy b with <b, cos(2 pi .)> = 0: the x^3 term keeps the design-point
    // sums sum_i b(x_i) w(x_i) away from zero so the OLS baseline converges at
    // the slow Riemann-sum rate instead of hitting theta* exactly.
    constexpr double alpha = 3.0 / (2.0 * kPi * kPi);
    return x * x + std::sin(2.0 * kPi * x) + (x - 0.5) + x * x * x -
           alpha * std::cos(2.0 * kPi * x);
}

double RateProblem::ys(double x, double theta) {
    return x * x - (theta - theta_star()) * std::cos(2.0 * kPi * x);
}

CalibrationProblem RateProblem::problem(int n_design) const {
    CalibrationProblem p;
    p.domain = BoxDomain::interval(0.0, 1.0);
    p.theta_region = BoxDomain::interval(0.0, 2.0);
    p.physical_design = equispaced(p.domain, n_design);
    p.physical_values.resize(n_design);
    for (int i = 0; i < n_design; ++i) p.physical_values[i] = yp(p.physical_design.points(i, 0));
    p.simulator = CheapSimulator{[](const Eigen::VectorXd& x, const Eigen::VectorXd& theta) {
        return ys(x[0], theta[0]);
    }};
    p.physical_oracle = [](const Eigen::VectorXd& x) { return yp(x[0]); };
    return p;
}

double SpanProblem::ys(double x, double theta) {
    const SpanBasis& b = span_basis();
    const KernelSpec psi = surrogate_kernel();
    Eigen::Vector2d point(x, theta);
    double acc = 0.0;
    for (int j = 0; j < g0_size; ++j) acc += b.coeff[j] * eval(psi, point, b.centers.row(j));
    return acc;
}

double SpanProblem::yp(double x) { return ys(x, 0.7) + 0.1 * std::sin(3.0 * kPi * x); }

CalibrationProblem SpanProblem::problem(int n_design, bool expensive) const {
    const BoxDomain omega = BoxDomain::interval(0.0, 1.0);
    const BoxDomain theta_box = BoxDomain::interval(0.0, 2.0);

    CalibrationProblem p;
    p.domain = omega;
    p.theta_region = theta_box;
    p.physical_design = equispaced(omega, n_design);
    p.physical_values.resize(n_design);
    for (int i = 0; i < n_design; ++i) p.physical_values[i] = yp(p.physical_design.points(i, 0));
    p.physical_oracle = [](const Eigen::VectorXd& x) { return yp(x[0]); };

    if (!expensive) {
        p.simulator = CheapSimulator{[](const Eigen::VectorXd& x, const Eigen::VectorXd& theta) {
            return ys(x[0], theta[0]);
        }};
        return p;
    }

    const SpanBasis& b = span_basis();
    Eigen::MatrixXd pts(g0_size * g_theta_size, 2);
    Eigen::VectorXd values(pts.rows());
    int row = 0;
    for (int t = 0; t < g_theta_size; ++t)
        for (int j = 0; j < g0_size; ++j, ++row) {
            pts(row, 0) = b.g0[j];
            pts(row, 1) = b.theta_grid[t];
            values[row] = ys(pts(row, 0), pts(row, 1));
        }
    p.simulator =
        ExpensiveSimulator{Design(pts, product(omega, theta_box)), values, surrogate_kernel()};
    return p;
}

CalibrationProblem make_builtin_problem(const std::string& name, int n_design) {
    if (name == "example1") return Example1().problem(n_design);
    if (name == "rate1d") return RateProblem().problem(n_design);
    if (name == "span1d-cheap") return SpanProblem().problem(n_design, false);
    if (name == "span1d-expensive") return SpanProblem().problem(n_design, true);
    throw InputError("unknown builtin problem '" + name +
                     "' (expected example1, rate1d, span1d-cheap, or span1d-expensive)");
}

KernelSpec builtin_default_kernel(const std::string& name) {
    if (name == "example1") return Example1::calibration_kernel();
    if (name == "rate1d") return RateProblem::surrogate_kernel();
    if (name == "span1d-cheap" || name == "span1d-expensive")
        return SpanProblem::surrogate_kernel();
    throw InputError("unknown builtin problem '" + name +
                     "' (expected example1, rate1d, span1d-cheap, or span1d-expensive)");
}

}  // namespace calibkit
