#pragma once

#include <Eigen/Dense>

#include "calibkit/errors.hpp"

namespace calibkit {

struct Design;

enum class KernelFamily { gaussian, matern };

// A stationary correlation kernel k(s,t) = k(||s-t||) with inverse length-scale
// phi > 0. Both families satisfy k(s,s) = 1 and the scale identity
// k_phi(s,t) = k_1(phi*s, phi*t):
//
//   gaussian:  k(r) = exp(-(phi*r)^2)
//   matern:    k(r) = p_nu(z) * exp(-z),  z = 2*sqrt(nu)*phi*r,
//              nu in {1/2, 3/2, 5/2, 7/2} (closed-form half-integer cases).
struct KernelSpec {
    KernelFamily family = KernelFamily::gaussian;
    double phi = 1.0;
    double nu = 0.0;  // Matern smoothness; unused for gaussian

    static KernelSpec gaussian(double phi);
    static KernelSpec matern(double nu, double phi);

    // Throws InputError if phi <= 0 or nu is not a supported half-integer.
    void validate() const;
};

// Kernel value as a function of the pair distance r = ||s-t|| >= 0.
double eval_radial(const KernelSpec& spec, double r);

// Throws InputError on dimension mismatch or non-finite coordinates.
double eval(const KernelSpec& spec, const Eigen::VectorXd& s, const Eigen::VectorXd& t);
double eval(const KernelSpec& spec, double s, double t);

// n x n symmetric Gram matrix with unit diagonal over the design points.
// Throws DegenerateDesignError if two points coincide.
Eigen::MatrixXd gram(const KernelSpec& spec, const Design& design);

}  // namespace calibkit
