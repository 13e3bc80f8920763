#pragma once

#include <Eigen/Dense>
#include <vector>

#include "calibkit/kernels.hpp"
#include "calibkit/numerics.hpp"

namespace calibkit {

// Leading Nystrom eigenpairs of the kernel integral operator
//   (kappa f)(x) = integral_domain k(x,t) f(t) dt.
// Eigenfunctions are L2(domain)-normalized with sign fixed so that
// integral f_i >= 0 (falling back to f_i(first node) > 0 when that integral is
// numerically zero).
struct EigenSystem {
    std::vector<double> eigenvalues;  // descending, all positive
    Eigen::MatrixXd node_values;      // column i: f_i at the quadrature nodes
    QuadratureSpec quadrature;
    KernelSpec kernel;

    int modes() const { return static_cast<int>(eigenvalues.size()); }

    // Nystrom extension f_i(x) = lambda_i^{-1} sum_k w_k k(x, t_k) f_i(t_k);
    // agrees with node_values at the quadrature nodes.
    double eigenfunction(int i, const Eigen::VectorXd& x) const;
    double eigenfunction(int i, double x) const;  // 1-D
};

// Discretizes kappa with a tensor Gauss-Legendre rule, symmetrizes to
// W^{1/2} K W^{1/2}, and keeps the top num_modes eigenpairs.
// Throws InputError if quad_order < num_modes; NumericalError if a retained
// eigenvalue is not positive (operator numerically rank-deficient).
EigenSystem nystrom_eig(const KernelSpec& kernel, const BoxDomain& domain,
                        int quad_order, int num_modes);

// Log of the unnormalized Karhunen-Loeve density of f under the operator's
// Gaussian measure, truncated at K modes:
//   -sum_{i=1..K} <f, f_i>^2 / (2 lambda_i^2),
// inner products taken with the system's quadrature. Larger values mean f is
// more plausible as a sample path of the kernel's process.
double kl_density_exponent(const ScalarField& f, const EigenSystem& eig, int truncation);

}  // namespace calibkit
