#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "calibkit/design.hpp"

namespace calibkit {

using ScalarField = std::function<double(const Eigen::VectorXd&)>;

// Tensor-product Gauss-Legendre rule over a box: nodes strictly inside the
// domain, positive weights summing to the box volume.
struct QuadratureSpec {
    Eigen::MatrixXd nodes;    // m^d x d
    Eigen::VectorXd weights;  // m^d
    BoxDomain domain;
    int order = 0;            // per-dimension order m

    int size() const { return static_cast<int>(weights.size()); }
};

QuadratureSpec gauss_legendre(const BoxDomain& domain, int order);

// sqrt(sum_i w_i f(t_i)^2). Throws NumericalError naming the node if f is
// non-finite there.
double l2_norm(const ScalarField& f, const QuadratureSpec& quad);

// sum_i w_i f(t_i) g(t_i).
double inner_product(const ScalarField& f, const ScalarField& g, const QuadratureSpec& quad);

struct MinimizeSettings {
    int multistarts = 16;  // Halton starts over the search box
    int max_iters = 200;   // Nelder-Mead iterations per start
    double ftol = 1e-8;    // relative simplex objective spread
    double xtol = 1e-8;    // relative simplex diameter
};

struct StartSummary {
    Eigen::VectorXd start;
    Eigen::VectorXd best;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct MinimizeResult {
    Eigen::VectorXd argmin;
    double value = 0.0;
    int candidate_index = -1;  // set for finite-candidate minimization
    bool tie = false;          // several minimizers within 1e-12 relative
    std::vector<StartSummary> trace;
};

// Deterministic multistart Nelder-Mead over a box. Candidate points leaving the
// box are clamped to it. Non-finite objective values are treated as +inf; if no
// start ever sees a finite value, throws NumericalError. Ties within 1e-12
// relative are broken toward the lexicographically smallest point and flagged.
MinimizeResult minimize_box(const ScalarField& objective, const BoxDomain& region,
                            const MinimizeSettings& settings = {});

// Exhaustive evaluation over a finite candidate list; ties break toward the
// smallest index and are flagged.
MinimizeResult minimize_box(const ScalarField& objective,
                            const std::vector<Eigen::VectorXd>& candidates);

}  // namespace calibkit
