#include "calibkit/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <utility>

#include "calibkit/errors.hpp"

namespace calibkit {
namespace {

// Uniform view of the simulator: cheap ones are called directly, expensive ones
// through a surrogate fitted once per calibration call.
struct SimulatorSurface {
    const CheapSimulator* cheap = nullptr;
    std::shared_ptr<Interpolator> surrogate;
    double surrogate_nugget = 0.0;
    double fill_g = -1.0;

    double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& theta) const {
        if (cheap) return cheap->eval(x, theta);
        Eigen::VectorXd p(x.size() + theta.size());
        p << x, theta;
        return surrogate->predict(p);
    }
};

SimulatorSurface make_surface(const CalibrationProblem& problem, const NuggetSettings& nugget) {
    SimulatorSurface s;
    if (const auto* cheap = std::get_if<CheapSimulator>(&problem.simulator)) {
        s.cheap = cheap;
        return s;
    }
    const auto& sim = std::get<ExpensiveSimulator>(problem.simulator);
    s.surrogate = std::make_shared<Interpolator>(fit(sim.design_g, sim.values, sim.psi, nugget));
    s.surrogate_nugget = s.surrogate->nugget_used;
    s.fill_g = fill_distance(sim.design_g);
    return s;
}

Eigen::VectorXd discrepancy(const CalibrationProblem& problem, const SimulatorSurface& surface,
                            const Eigen::VectorXd& theta) {
    const Design& d = problem.physical_design;
    Eigen::VectorXd eps(d.size());
    for (int i = 0; i < d.size(); ++i)
        eps[i] = problem.physical_values[i] - surface(d.point(i), theta);
    return eps;
}

MinimizeResult search_theta(const ScalarField& objective, const ThetaRegion& region,
                            const MinimizeSettings& settings = {}) {
    if (const auto* box = std::get_if<BoxDomain>(&region))
        return minimize_box(objective, *box, settings);
    return minimize_box(objective, std::get<std::vector<Eigen::VectorXd>>(region));
}

std::string describe_search(const MinimizeResult& r) {
    std::ostringstream os;
    if (r.candidate_index >= 0) {
        os << "evaluated " << r.trace.size() << " candidates";
    } else {
        int converged = 0;
        for (const StartSummary& run : r.trace) converged += run.converged ? 1 : 0;
        os << converged << "/" << r.trace.size() << " starts converged";
    }
    return os.str();
}

void require_cheap(const CalibrationProblem& problem, const char* who) {
    if (!std::holds_alternative<CheapSimulator>(problem.simulator))
        throw InputError(std::string(who) + ": requires a cheap simulator");
    if (problem.physical_design.size() < 2)
        throw InputError(std::string(who) + ": needs at least two physical design points");
}

void check_quadrature(const QuadratureSpec& quad, const BoxDomain& domain, const char* who) {
    if (quad.size() == 0) throw InputError(std::string(who) + ": empty quadrature rule");
    if (quad.domain.dim() != domain.dim())
        throw InputError(std::string(who) + ": quadrature dimension does not match the domain");
    for (int i = 0; i < domain.dim(); ++i) {
        const double tol = 1e-9 * (1.0 + domain.span(i));
        if (std::abs(quad.domain.lower[i] - domain.lower[i]) > tol ||
            std::abs(quad.domain.upper[i] - domain.upper[i]) > tol)
            throw InputError(std::string(who) + ": quadrature domain differs from the problem domain");
    }
}

CalibrationResult finish_ko(const CalibrationProblem& problem, const SimulatorSurface& surface,
                            const KernelSpec& kernel, const NuggetSettings& nugget,
                            const MinimizeResult& r, Method method) {
    CalibrationResult out;
    out.method = method;
    out.theta_hat = r.argmin;
    out.candidate_index = r.candidate_index;
    double nub = 0.0;
    out.objective_value =
        pss(discrepancy(problem, surface, r.argmin), problem.physical_design, kernel, nugget, &nub);
    out.nugget_used = nub;
    out.fill_distance_d = fill_distance(problem.physical_design);
    out.tie = r.tie;
    out.optimizer_note = describe_search(r);
    return out;
}

}  // namespace

void CalibrationProblem::validate() const {
    domain.validate();
    if (physical_design.size() == 0) throw InputError("calibration problem: empty physical design");
    if (physical_design.dim() != domain.dim())
        throw InputError("calibration problem: physical design dimension does not match the domain");
    if (physical_values.size() != physical_design.size())
        throw InputError("calibration problem: physical values and design sizes differ");
    if (!physical_values.allFinite())
        throw DataError("calibration problem: non-finite physical values");

    int td = 0;
    if (const auto* box = std::get_if<BoxDomain>(&theta_region)) {
        box->validate();
        td = box->dim();
    } else {
        const auto& cands = std::get<std::vector<Eigen::VectorXd>>(theta_region);
        if (cands.empty()) throw InputError("calibration problem: empty candidate list");
        td = static_cast<int>(cands.front().size());
        if (td == 0) throw InputError("calibration problem: zero-dimensional candidates");
        for (size_t i = 0; i < cands.size(); ++i) {
            if (static_cast<int>(cands[i].size()) != td)
                throw InputError("calibration problem: candidates have mixed dimensions");
            if (!cands[i].allFinite())
                throw DataError("calibration problem: non-finite candidate");
            for (size_t j = 0; j < i; ++j)
                if ((cands[i] - cands[j]).norm() == 0.0)
                    throw InputError("calibration problem: duplicate candidates");
        }
    }

    if (const auto* sim = std::get_if<ExpensiveSimulator>(&simulator)) {
        if (sim->design_g.size() == 0)
            throw InputError("calibration problem: expensive simulator has an empty design");
        if (sim->design_g.dim() != domain.dim() + td)
            throw InputError(
                "calibration problem: simulator design dimension is not dim(domain) + dim(theta)");
        if (sim->values.size() != sim->design_g.size())
            throw InputError("calibration problem: simulator values and design sizes differ");
        if (!sim->values.allFinite())
            throw DataError("calibration problem: non-finite simulator values");
        sim->psi.validate();
    } else if (!std::get<CheapSimulator>(simulator).eval) {
        throw InputError("calibration problem: cheap simulator has no evaluator");
    }
}

std::string method_name(Method m) {
    switch (m) {
        case Method::ko: return "ko";
        case Method::profile_ko: return "profile-ko";
        case Method::modified_ko: return "modified-ko";
        case Method::l2: return "l2";
        case Method::ols: return "ols";
    }
    throw InputError("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
    if (name == "ko") return Method::ko;
    if (name == "profile-ko") return Method::profile_ko;
    if (name == "modified-ko") return Method::modified_ko;
    if (name == "l2") return Method::l2;
    if (name == "ols") return Method::ols;
    throw InputError("unknown method '" + name +
                     "' (expected ko, profile-ko, modified-ko, l2, or ols)");
}

CalibrationResult ko_calibrate(const CalibrationProblem& problem, const KernelSpec& kernel,
                               const NuggetSettings& nugget) {
    problem.validate();
    kernel.validate();
    require_cheap(problem, "ko_calibrate");
    SimulatorSurface surface = make_surface(problem, nugget);

    ScalarField objective = [&](const Eigen::VectorXd& theta) {
        return pss(discrepancy(problem, surface, theta), problem.physical_design, kernel, nugget);
    };
    MinimizeResult r = search_theta(objective, problem.theta_region);
    return finish_ko(problem, surface, kernel, nugget, r, Method::ko);
}

std::pair<CalibrationResult, double> ko_profile_calibrate(const CalibrationProblem& problem,
                                                          const KernelSpec& prototype,
                                                          const std::vector<double>& phi_grid,
                                                          const NuggetSettings& nugget) {
    problem.validate();
    prototype.validate();
    require_cheap(problem, "ko_profile_calibrate");
    if (phi_grid.empty()) throw InputError("ko_profile_calibrate: empty phi grid");
    for (double phi : phi_grid)
        if (!(phi > 0.0) || !std::isfinite(phi))
            throw InputError("ko_profile_calibrate: phi grid values must be positive");
    SimulatorSurface surface = make_surface(problem, nugget);

    struct PerPhi {
        double phi = 0.0;
        double loglik = -std::numeric_limits<double>::infinity();
        MinimizeResult search;
    };
    std::vector<PerPhi> runs;
    runs.reserve(phi_grid.size());
    for (double phi : phi_grid) {
        KernelSpec kernel = prototype;
        kernel.phi = phi;
        ScalarField neg_loglik = [&](const Eigen::VectorXd& theta) {
            Eigen::VectorXd eps = discrepancy(problem, surface, theta);
            // The likelihood diverges at an exact match; rank it above every
            // finite value instead of throwing on the zero vector.
            if (eps.isZero(0.0)) return -std::numeric_limits<double>::max();
            return -profile_loglik(eps, problem.physical_design, kernel, nugget);
        };
        PerPhi run;
        run.phi = phi;
        run.search = search_theta(neg_loglik, problem.theta_region);
        run.loglik = -run.search.value;
        runs.push_back(std::move(run));
    }

    int best = 0;
    for (size_t k = 1; k < runs.size(); ++k)
        if (runs[k].loglik > runs[best].loglik) best = static_cast<int>(k);

    const PerPhi& top = runs[best];
    bool tie = top.search.tie;
    const double vtol = 1e-12 * (1.0 + std::abs(top.loglik));
    for (size_t k = 0; k < runs.size(); ++k) {
        if (static_cast<int>(k) == best || !std::isfinite(runs[k].loglik)) continue;
        if (top.loglik - runs[k].loglik > vtol) continue;
        const double sep = (runs[k].search.argmin - top.search.argmin).norm();
        if (sep > 1e-9 * (1.0 + top.search.argmin.norm())) tie = true;
    }

    KernelSpec kernel = prototype;
    kernel.phi = top.phi;
    CalibrationResult out;
    out.method = Method::profile_ko;
    out.theta_hat = top.search.argmin;
    out.candidate_index = top.search.candidate_index;
    Eigen::VectorXd eps_hat = discrepancy(problem, surface, out.theta_hat);
    double nub = 0.0;
    pss(eps_hat, problem.physical_design, kernel, nugget, &nub);
    out.objective_value = eps_hat.isZero(0.0)
                              ? std::numeric_limits<double>::infinity()
                              : profile_loglik(eps_hat, problem.physical_design, kernel, nugget);
    out.nugget_used = nub;
    out.fill_distance_d = fill_distance(problem.physical_design);
    out.phi_used = top.phi;
    out.tie = tie;
    std::ostringstream note;
    note << describe_search(top.search) << " per phi; " << phi_grid.size() << " phi values";
    out.optimizer_note = note.str();
    return {out, top.phi};
}

CalibrationResult modified_ko_calibrate(const CalibrationProblem& problem,
                                        const KernelSpec& prototype, const Schedule& schedule,
                                        const NuggetSettings& nugget) {
    problem.validate();
    prototype.validate();
    require_cheap(problem, "modified_ko_calibrate");
    if (!(schedule.c > 0.0) || !std::isfinite(schedule.c))
        throw InputError("modified_ko_calibrate: schedule constant c must be positive");
    if (!(schedule.gamma >= 0.0 && schedule.gamma < 1.0))
        throw InputError("modified_ko_calibrate: schedule exponent gamma must lie in [0, 1)");

    const double h = fill_distance(problem.physical_design);
    const double phi = schedule.c * std::pow(h, -schedule.gamma);
    KernelSpec kernel = prototype;
    kernel.phi = phi;

    SimulatorSurface surface = make_surface(problem, nugget);
    ScalarField objective = [&](const Eigen::VectorXd& theta) {
        return pss(discrepancy(problem, surface, theta), problem.physical_design, kernel, nugget);
    };
    MinimizeResult r = search_theta(objective, problem.theta_region);

    CalibrationResult out = finish_ko(problem, surface, kernel, nugget, r, Method::modified_ko);
    out.fill_distance_d = h;
    out.phi_used = phi;
    return out;
}

CalibrationResult l2_calibrate(const CalibrationProblem& problem, const KernelSpec& phi_kernel,
                               const QuadratureSpec& quad, const NuggetSettings& nugget) {
    problem.validate();
    phi_kernel.validate();
    check_quadrature(quad, problem.domain, "l2_calibrate");
    SimulatorSurface surface = make_surface(problem, nugget);

    Interpolator yhat_p = fit(problem.physical_design, problem.physical_values, phi_kernel, nugget);
    Eigen::VectorXd yp_at_nodes(quad.size());
    for (int i = 0; i < quad.size(); ++i) yp_at_nodes[i] = yhat_p.predict(quad.nodes.row(i));

    ScalarField objective = [&](const Eigen::VectorXd& theta) {
        double acc = 0.0;
        for (int i = 0; i < quad.size(); ++i) {
            const double d = yp_at_nodes[i] - surface(quad.nodes.row(i), theta);
            acc += quad.weights[i] * d * d;
        }
        if (!std::isfinite(acc)) throw NumericalError("l2_calibrate: non-finite distance");
        return std::sqrt(acc);
    };
    MinimizeResult r = search_theta(objective, problem.theta_region);

    CalibrationResult out;
    out.method = Method::l2;
    out.theta_hat = r.argmin;
    out.candidate_index = r.candidate_index;
    out.objective_value = objective(r.argmin);
    out.nugget_used = yhat_p.nugget_used;
    out.fill_distance_d = fill_distance(problem.physical_design);
    out.fill_distance_g = surface.fill_g;
    out.phi_used = phi_kernel.phi;
    out.tie = r.tie;
    std::ostringstream note;
    note << describe_search(r);
    if (surface.surrogate && surface.surrogate_nugget > 0.0)
        note << "; surrogate nugget " << surface.surrogate_nugget;
    out.optimizer_note = note.str();
    return out;
}

ProjectionResult l2_projection(const CalibrationProblem& problem, const QuadratureSpec& quad) {
    problem.validate();
    check_quadrature(quad, problem.domain, "l2_projection");
    if (!problem.physical_oracle)
        throw InputError("l2_projection: requires an exact physical oracle");
    SimulatorSurface surface = make_surface(problem, NuggetSettings{});

    Eigen::VectorXd yp_at_nodes(quad.size());
    for (int i = 0; i < quad.size(); ++i) {
        yp_at_nodes[i] = problem.physical_oracle(quad.nodes.row(i));
        if (!std::isfinite(yp_at_nodes[i]))
            throw NumericalError("l2_projection: physical oracle non-finite at a quadrature node");
    }

    ScalarField objective = [&](const Eigen::VectorXd& theta) {
        double acc = 0.0;
        for (int i = 0; i < quad.size(); ++i) {
            const double d = yp_at_nodes[i] - surface(quad.nodes.row(i), theta);
            acc += quad.weights[i] * d * d;
        }
        if (!std::isfinite(acc)) throw NumericalError("l2_projection: non-finite distance");
        return std::sqrt(acc);
    };
    MinimizeResult r = search_theta(objective, problem.theta_region);

    ProjectionResult out;
    out.theta_star = r.argmin;
    out.candidate_index = r.candidate_index;
    out.l2_distance = objective(r.argmin);
    out.tie = r.tie;
    return out;
}

CalibrationResult ols_calibrate(const CalibrationProblem& problem) {
    problem.validate();
    SimulatorSurface surface = make_surface(problem, NuggetSettings{});

    ScalarField objective = [&](const Eigen::VectorXd& theta) {
        const Eigen::VectorXd eps = discrepancy(problem, surface, theta);
        const double v = eps.squaredNorm();
        if (!std::isfinite(v)) throw NumericalError("ols_calibrate: non-finite residual");
        return v;
    };
    MinimizeResult r = search_theta(objective, problem.theta_region);

    CalibrationResult out;
    out.method = Method::ols;
    out.theta_hat = r.argmin;
    out.candidate_index = r.candidate_index;
    out.objective_value = objective(r.argmin);
    out.fill_distance_d = fill_distance(problem.physical_design);
    out.fill_distance_g = surface.fill_g;
    out.tie = r.tie;
    std::ostringstream note;
    note << describe_search(r);
    if (surface.surrogate && surface.surrogate_nugget > 0.0)
        note << "; surrogate nugget " << surface.surrogate_nugget;
    out.optimizer_note = note.str();
    return out;
}

}  // namespace calibkit
