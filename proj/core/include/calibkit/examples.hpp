#pragma once

#include <memory>
#include <string>

#include "calibkit/calibrate.hpp"
#include "calibkit/integral_operator.hpp"

namespace calibkit {

// Three-candidate calibration example on Omega = [-1,1]. The physical response
// is identically zero and candidate i's simulator output is -eps_i, so the
// discrepancy at candidate i is exactly eps_i:
//   eps_1, eps_2: leading eigenfunctions of the integral operator with kernel
//                 exp(-r^2/2), scaled to ||.||_L2 = sqrt(20);
//   eps_3:        sin(2 pi x), ||eps_3||_L2 = 1.
// The calibration Gram uses gaussian phi=1 (exp(-r^2)). The two kernels differ
// deliberately: the tabulated reference eigenvalues (1.546, 0.398) belong to
// exp(-r^2/2), while the reference PSS of eps_3 (17978.65) pins the Gram to
// exp(-r^2).
class Example1 {
public:
    static constexpr double eigenstudy_phi = 0.70710678118654752;  // 1/sqrt(2)
    static constexpr int default_quad_order = 128;

    explicit Example1(int quad_order = default_quad_order);

    const EigenSystem& eigensystem() const { return *eig_; }

    // candidate in {0,1,2}; eps(0,.) = sqrt(20)*f_1, eps(1,.) = sqrt(20)*f_2,
    // eps(2,x) = sin(2 pi x).
    double eps(int candidate, double x) const;

    // Problem with an n-point equispaced physical design and finite
    // Theta = {[1],[2],[3]} selecting the candidate.
    CalibrationProblem problem(int n_design) const;

    static KernelSpec calibration_kernel() { return KernelSpec::gaussian(1.0); }
    static KernelSpec eigenstudy_kernel() { return KernelSpec::gaussian(eigenstudy_phi); }

private:
    std::shared_ptr<const EigenSystem> eig_;
};

// 1-D rate-study problem with an analytically known L2 projection:
//   Omega = [0,1], Theta = [0,2], theta* = 0.8,
//   y^p(x) = x^2 + b(x),  y^s(x,theta) = x^2 - (theta - 0.8) * w(x),
//   b(x) = sin(2 pi x) + (x - 1/2) + x^3 - (3/(2 pi^2)) cos(2 pi x),
//   w(x) = cos(2 pi x),  <b,w>_L2 = 0.
// The discrepancy b + (theta - theta*) w is minimized exactly at theta*, so the
// L2 estimator's error reduces to <interpolation error, w>/||w||^2 and its
// measured convergence rate isolates the surrogate's approximation power. The
// design-point sums sum_i b(x_i) w(x_i) stay nonzero, so the OLS baseline
// converges only at the Riemann-sum rate (about first order).
class RateProblem {
public:
    static double theta_star() { return 0.8; }
    static double yp(double x);
    static double ys(double x, double theta);
    static KernelSpec surrogate_kernel() { return KernelSpec::matern(2.5, 1.0); }

    // n-point equispaced physical design on [0,1], cheap simulator, oracle set.
    CalibrationProblem problem(int n_design) const;
};

// Simulator built from translates of the surrogate kernel on the product space
// Omega x Theta, so the expensive-mode interpolant reproduces it exactly once
// the design G contains every translate center:
//   y^s(x,theta) = sum_j c_j * Psi((x,theta), (g_j, tau_j)),
//   g_j: 25 equispaced points on Omega = [0,1], Theta = [0,2],
//   tau_j: cycles over the 13-point theta grid values {0.5, 1.0, 1.5},
//   c_j = 0.8*sin(3 g_j) + 0.2,  Psi = matern nu=5/2 phi=1,
//   y^p(x) = y^s(x, 0.7) + 0.1 * sin(3 pi x).
// The expensive design G is the tensor grid {g_j} x {13 equispaced theta
// values}; it contains all centers, so cheap and expensive variants agree to
// surrogate rounding.
class SpanProblem {
public:
    static constexpr int g0_size = 25;
    static constexpr int g_theta_size = 13;

    static KernelSpec surrogate_kernel() { return KernelSpec::matern(2.5, 1.0); }
    static double ys(double x, double theta);
    static double yp(double x);

    CalibrationProblem problem(int n_design, bool expensive) const;
};

// Builtin problem registry for manifests: "example1", "rate1d", "span1d-cheap",
// "span1d-expensive". Throws InputError for unknown names.
CalibrationProblem make_builtin_problem(const std::string& name, int n_design);

// The kernel each builtin is calibrated with by default.
KernelSpec builtin_default_kernel(const std::string& name);

}  // namespace calibkit
