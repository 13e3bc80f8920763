#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "calibkit/design.hpp"
#include "calibkit/interpolate.hpp"
#include "calibkit/kernels.hpp"
#include "calibkit/numerics.hpp"

namespace calibkit {

using SimulatorFn = std::function<double(const Eigen::VectorXd& x, const Eigen::VectorXd& theta)>;

// Simulator evaluable at will.
struct CheapSimulator {
    SimulatorFn eval;
};

// Simulator known only on a design G over Omega x Theta; calibrators use a
// kernel surrogate fitted once on (G, values).
struct ExpensiveSimulator {
    Design design_g;         // points are concatenated (x, theta) coordinates
    Eigen::VectorXd values;  // y^s(G)
    KernelSpec psi;          // surrogate kernel on the product space
};

using Simulator = std::variant<CheapSimulator, ExpensiveSimulator>;

// Theta search region: a box for continuous calibration, or an explicit
// candidate list for finite-level parameters.
using ThetaRegion = std::variant<BoxDomain, std::vector<Eigen::VectorXd>>;

struct CalibrationProblem {
    BoxDomain domain;                 // Omega
    ThetaRegion theta_region;         // Theta
    Design physical_design;           // D
    Eigen::VectorXd physical_values;  // y^p(D)
    Simulator simulator;

    // Exact y^p evaluator for synthetic problems; enables l2_projection and
    // rate studies. Empty for real data.
    ScalarField physical_oracle;

    void validate() const;  // throws InputError
};

enum class Method { ko, profile_ko, modified_ko, l2, ols };

std::string method_name(Method m);
Method method_from_name(const std::string& name);  // throws InputError

struct CalibrationResult {
    Method method = Method::ko;
    Eigen::VectorXd theta_hat;
    int candidate_index = -1;  // 0-based index into a finite Theta; -1 if continuous
    double objective_value = 0.0;

    // Diagnostics.
    double nugget_used = 0.0;       // jitter of the method's main Gram fit
    double fill_distance_d = 0.0;   // h(D)
    double fill_distance_g = -1.0;  // h(G) for expensive simulators, else -1
    double phi_used = -1.0;         // kernel scale actually used, when varied
    bool tie = false;
    std::string optimizer_note;
};

// Kernel-scale schedule phi = c * h(D)^{-gamma} for the modified KO method;
// gamma in [0,1) (gamma = 0 degenerates to a fixed phi = c).
struct Schedule {
    double c = 1.0;
    double gamma = 0.5;
};

// Likelihood calibrator: argmin_theta eps^T Gram^{-1} eps with
// eps_i = y^p(x_i) - y^s(x_i, theta). Cheap simulators only.
CalibrationResult ko_calibrate(const CalibrationProblem& problem, const KernelSpec& kernel,
                               const NuggetSettings& nugget = {});

// Joint MLE over theta and the kernel scale: maximizes the profiled
// log-likelihood over phi_grid x Theta. The prototype supplies family and
// smoothness; its phi is replaced by each grid value. Returns the best result
// and the maximizing phi (also stored in result.phi_used).
std::pair<CalibrationResult, double> ko_profile_calibrate(const CalibrationProblem& problem,
                                                          const KernelSpec& prototype,
                                                          const std::vector<double>& phi_grid,
                                                          const NuggetSettings& nugget = {});

// KO with the schedule-determined scale phi = c * h(D)^{-gamma}.
CalibrationResult modified_ko_calibrate(const CalibrationProblem& problem,
                                        const KernelSpec& prototype, const Schedule& schedule,
                                        const NuggetSettings& nugget = {});

// Least-L2-distance calibrator: fits yhat^p on (D, y^p) with `phi_kernel`, then
// minimizes ||yhat^p - y^s(., theta)||_L2 (cheap) or
// ||yhat^p - yhat^s(., theta)||_L2 (expensive) by quadrature.
CalibrationResult l2_calibrate(const CalibrationProblem& problem, const KernelSpec& phi_kernel,
                               const QuadratureSpec& quad, const NuggetSettings& nugget = {});

struct ProjectionResult {
    Eigen::VectorXd theta_star;
    int candidate_index = -1;
    double l2_distance = 0.0;
    bool tie = false;
};

// L2 projection theta* = argmin_theta ||y^p - y^s(., theta)||_L2 using the
// exact physical oracle (synthetic problems only; throws InputError without
// one). Expensive simulators are projected through their surrogate.
ProjectionResult l2_projection(const CalibrationProblem& problem, const QuadratureSpec& quad);

// Ordinary least squares baseline: argmin_theta sum_i (y^p(x_i) - y^s(x_i, theta))^2.
CalibrationResult ols_calibrate(const CalibrationProblem& problem);

}  // namespace calibkit
