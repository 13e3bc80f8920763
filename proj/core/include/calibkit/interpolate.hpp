#pragma once

#include <Eigen/Dense>

#include "calibkit/design.hpp"
#include "calibkit/kernels.hpp"

namespace calibkit {

enum class NuggetPolicy { none, adaptive };

// Adaptive policy: try nugget 0, then start * factor^k while <= max, keeping
// the first value whose Cholesky succeeds.
struct NuggetSettings {
    NuggetPolicy policy = NuggetPolicy::adaptive;
    double start = 1e-12;
    double factor = 10.0;
    double max = 1e-6;

    static NuggetSettings none() { return {NuggetPolicy::none, 0.0, 0.0, 0.0}; }
};

// Fitted kernel interpolant yhat(x) = sum_i u_i k(x, x_i) where u solves
// (Gram + nugget*I) u = values.
struct Interpolator {
    Design design;
    KernelSpec kernel;
    Eigen::VectorXd values;        // observed responses Y
    Eigen::VectorXd coefficients;  // u
    Eigen::MatrixXd chol_lower;    // L with L*L^T = Gram + nugget*I
    double nugget_used = 0.0;

    double predict(const Eigen::VectorXd& x) const;
    double predict(double x) const;  // 1-D
};

// Throws IllConditionedError when factorization fails under `none`, or when the
// adaptive search exhausts its budget.
Interpolator fit(const Design& design, const Eigen::VectorXd& values,
                 const KernelSpec& kernel, const NuggetSettings& nugget = {});

double predict(const Interpolator& interp, const Eigen::VectorXd& x);

// ||yhat||^2 in the kernel's native space: u^T (Gram + nugget*I) u
// = Y^T (Gram + nugget*I)^{-1} Y >= 0.
double native_norm_sq(const Interpolator& interp);

// Pivoted sum of squares Y^T (Gram + nugget*I)^{-1} Y of a response vector;
// equals native_norm_sq of the corresponding fit. Reports the jitter actually
// used through `nugget_used` when non-null.
double pss(const Eigen::VectorXd& values, const Design& design, const KernelSpec& kernel,
           const NuggetSettings& nugget = {}, double* nugget_used = nullptr);

// Profiled Gaussian log-likelihood
//   l(Y) = -(n/2) log(Y^T Gram^{-1} Y) - (1/2) log det Gram,
// with log det from the Cholesky factor. Throws NumericalError for Y == 0.
double profile_loglik(const Eigen::VectorXd& values, const Design& design,
                      const KernelSpec& kernel, const NuggetSettings& nugget = {});

}  // namespace calibkit
