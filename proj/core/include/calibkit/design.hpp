#pragma once

#include <Eigen/Dense>

#include "calibkit/errors.hpp"

namespace calibkit {

// Axis-aligned box domain with lower[i] < upper[i] per dimension.
struct BoxDomain {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    BoxDomain() = default;
    BoxDomain(Eigen::VectorXd lo, Eigen::VectorXd up);
    static BoxDomain interval(double a, double b);

    int dim() const { return static_cast<int>(lower.size()); }
    double volume() const;
    double span(int i) const { return upper[i] - lower[i]; }
    bool contains(const Eigen::VectorXd& x, double tol = 0.0) const;
    Eigen::VectorXd clamp(const Eigen::VectorXd& x) const;

    void validate() const;  // throws InputError
};

// Concatenate two boxes into their product (used for simulator designs over
// Omega x Theta).
BoxDomain product(const BoxDomain& a, const BoxDomain& b);

// Ordered point set inside a box domain; row i of `points` is point i. Order is
// significant (it pairs with response vectors).
struct Design {
    Eigen::MatrixXd points;  // n x d
    BoxDomain domain;

    Design() = default;
    // Validates: points inside the domain (inclusive), pairwise distinct.
    Design(Eigen::MatrixXd pts, BoxDomain dom);

    int size() const { return static_cast<int>(points.rows()); }
    int dim() const { return static_cast<int>(points.cols()); }
    Eigen::VectorXd point(int i) const { return points.row(i); }
};

// n equispaced points including both endpoints. 1-D domains only; n >= 2.
Design equispaced(const BoxDomain& domain, int n);

// First n Halton points (after skipping `skip`) with bases the first d primes,
// affinely mapped into the domain. Deterministic and seedless.
Design halton(const BoxDomain& domain, int n, int skip = 0);

// Approximates h(D) = max_{x in domain} min_i ||x - x_i|| by scanning a tensor
// grid with `resolution` points per dimension. The result never exceeds the
// true fill distance and converges to it as the resolution grows.
double fill_distance(const Design& design, int resolution);

// Default resolutions: 1001 (1-D), 101 (2-D), 21 per dimension above that.
double fill_distance(const Design& design);

}  // namespace calibkit
