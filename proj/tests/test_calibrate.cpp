#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "calibkit/calibrate.hpp"
#include "calibkit/errors.hpp"
#include "calibkit/examples.hpp"

using namespace calibkit;

namespace {

std::vector<Eigen::VectorXd> scalar_candidates(std::initializer_list<double> values) {
    std::vector<Eigen::VectorXd> out;
    for (double v : values) {
        Eigen::VectorXd c(1);
        c << v;
        out.push_back(c);
    }
    return out;
}

std::vector<double> phi_grid_1_to_6() {
    std::vector<double> grid;
    for (int i = 0; i < 51; ++i) grid.push_back(1.0 + 0.1 * i);
    return grid;
}

// Physical response inside the span of kernel translates at the design, so the
// least-L2 objective vanishes at the matching parameter as well.
struct SpanMatchFixture {
    KernelSpec psi = KernelSpec::matern(2.5, 1.0);
    BoxDomain omega = BoxDomain::interval(0, 1);
    Design design = equispaced(omega, 9);
    Eigen::VectorXd coeff;
    double theta0 = 1.1;

    SpanMatchFixture() {
        coeff.resize(9);
        coeff << 0.7, -0.3, 0.2, 0.9, -1.1, 0.4, 0.05, -0.6, 0.33;
    }

    double yp(double x) const {
        double acc = 0.0;
        for (int i = 0; i < design.size(); ++i)
            acc += coeff[i] * eval(psi, x, design.points(i, 0));
        return acc;
    }

    double gap(double x) const { return 1.0 + 0.5 * std::cos(2.0 * x); }

    CalibrationProblem problem() const {
        CalibrationProblem p;
        p.domain = omega;
        p.theta_region = scalar_candidates({0.3, 1.1, 1.9});
        p.physical_design = design;
        Eigen::VectorXd values(design.size());
        for (int i = 0; i < design.size(); ++i) values[i] = yp(design.points(i, 0));
        p.physical_values = values;
        p.simulator = CheapSimulator{[this](const Eigen::VectorXd& x, const Eigen::VectorXd& t) {
            return yp(x[0]) + (t[0] - theta0) * gap(x[0]);
        }};
        p.physical_oracle = [this](const Eigen::VectorXd& x) { return yp(x[0]); };
        return p;
    }
};

}  // namespace

TEST_SUITE("calibrate") {

TEST_CASE("method names round-trip") {
    for (Method m : {Method::ko, Method::profile_ko, Method::modified_ko, Method::l2, Method::ols})
        CHECK(method_from_name(method_name(m)) == m);
    CHECK(method_name(Method::profile_ko) == "profile-ko");
    CHECK_THROWS_AS(method_from_name("bayes"), InputError);
}

TEST_CASE("exact-match candidate is recovered by every calibrator") {
    const SpanMatchFixture fx;
    const CalibrationProblem problem = fx.problem();
    const QuadratureSpec quad = gauss_legendre(fx.omega, 64);

    const CalibrationResult ko = ko_calibrate(problem, fx.psi);
    CHECK(ko.candidate_index == 1);
    CHECK(ko.theta_hat[0] == fx.theta0);
    CHECK(ko.objective_value == 0.0);

    const auto [prof, phi_hat] = ko_profile_calibrate(problem, fx.psi, {1.0, 2.0, 3.0});
    CHECK(prof.candidate_index == 1);
    CHECK(prof.theta_hat[0] == fx.theta0);
    CHECK(std::isinf(prof.objective_value));
    CHECK(phi_hat == 1.0);

    const CalibrationResult mko = modified_ko_calibrate(problem, fx.psi, Schedule{1.0, 0.5});
    CHECK(mko.candidate_index == 1);
    CHECK(mko.objective_value == 0.0);

    const CalibrationResult l2 = l2_calibrate(problem, fx.psi, quad);
    CHECK(l2.candidate_index == 1);
    CHECK(l2.objective_value < 1e-8);

    const CalibrationResult ols = ols_calibrate(problem);
    CHECK(ols.candidate_index == 1);
    CHECK(ols.objective_value == 0.0);
}

TEST_CASE("continuous theta recovery on a linear family") {
    CalibrationProblem problem;
    problem.domain = BoxDomain::interval(-1, 1);
    problem.theta_region = BoxDomain::interval(0, 2);
    problem.physical_design = equispaced(problem.domain, 11);
    Eigen::VectorXd values(11);
    for (int i = 0; i < 11; ++i) values[i] = problem.physical_design.points(i, 0);
    problem.physical_values = values;
    problem.simulator = CheapSimulator{
        [](const Eigen::VectorXd& x, const Eigen::VectorXd& t) { return t[0] * x[0]; }};
    problem.physical_oracle = [](const Eigen::VectorXd& x) { return x[0]; };

    const KernelSpec g = KernelSpec::gaussian(1.0);
    const QuadratureSpec quad = gauss_legendre(problem.domain, 64);

    const CalibrationResult ko = ko_calibrate(problem, g);
    CHECK(ko.candidate_index == -1);
    CHECK(ko.theta_hat[0] == doctest::Approx(1.0).epsilon(1e-6));

    const CalibrationResult l2 = l2_calibrate(problem, g, quad);
    CHECK(l2.theta_hat[0] == doctest::Approx(1.0).epsilon(1e-4));

    const CalibrationResult ols = ols_calibrate(problem);
    CHECK(ols.theta_hat[0] == doctest::Approx(1.0).epsilon(1e-6));

    const ProjectionResult proj = l2_projection(problem, quad);
    CHECK(proj.theta_star[0] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("constant simulator projects onto the mean of x^2") {
    CalibrationProblem problem;
    problem.domain = BoxDomain::interval(0, 1);
    problem.theta_region = BoxDomain::interval(0, 2);
    problem.physical_design = equispaced(problem.domain, 21);
    Eigen::VectorXd values(21);
    for (int i = 0; i < 21; ++i) {
        const double x = problem.physical_design.points(i, 0);
        values[i] = x * x;
    }
    problem.physical_values = values;
    problem.simulator =
        CheapSimulator{[](const Eigen::VectorXd&, const Eigen::VectorXd& t) { return t[0]; }};
    problem.physical_oracle = [](const Eigen::VectorXd& x) { return x[0] * x[0]; };

    const QuadratureSpec quad = gauss_legendre(problem.domain, 64);

    // L2 projection of x^2 onto constants is its integral, 1/3.
    const ProjectionResult proj = l2_projection(problem, quad);
    CHECK(proj.theta_star[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));

    const CalibrationResult l2 = l2_calibrate(problem, KernelSpec::matern(2.5, 1.0), quad);
    CHECK(l2.theta_hat[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-4));

    // OLS matches the design average of x^2 instead, which differs from 1/3.
    double design_mean = values.mean();
    const CalibrationResult ols = ols_calibrate(problem);
    CHECK(ols.theta_hat[0] == doctest::Approx(design_mean).epsilon(1e-6));
    CHECK(std::abs(design_mean - 1.0 / 3.0) > 5e-3);
}

TEST_CASE("objective values match an independent recomputation") {
    const SpanMatchFixture fx;
    CalibrationProblem problem = fx.problem();
    problem.theta_region = scalar_candidates({0.3, 1.9});  // drop the exact match

    const CalibrationResult ko = ko_calibrate(problem, fx.psi);
    Eigen::VectorXd eps(problem.physical_design.size());
    for (int i = 0; i < problem.physical_design.size(); ++i) {
        const double x = problem.physical_design.points(i, 0);
        eps[i] = fx.yp(x) - (fx.yp(x) + (ko.theta_hat[0] - fx.theta0) * fx.gap(x));
    }
    const double re_pss = pss(eps, problem.physical_design, fx.psi);
    CHECK(ko.objective_value ==
          doctest::Approx(re_pss).epsilon(1e-10));

    const CalibrationResult ols = ols_calibrate(problem);
    Eigen::VectorXd eps2(problem.physical_design.size());
    for (int i = 0; i < problem.physical_design.size(); ++i) {
        const double x = problem.physical_design.points(i, 0);
        eps2[i] = -(ols.theta_hat[0] - fx.theta0) * fx.gap(x);
    }
    CHECK(ols.objective_value == doctest::Approx(eps2.squaredNorm()).epsilon(1e-10));
}

TEST_CASE("three-candidate example selections at n=11") {
    const Example1 ex;
    const CalibrationProblem problem = ex.problem(11);
    const KernelSpec g = Example1::calibration_kernel();

    const CalibrationResult ko = ko_calibrate(problem, g);
    CHECK(ko.candidate_index == 0);
    CHECK(ko.theta_hat[0] == 1.0);
    CHECK(ko.fill_distance_d == doctest::Approx(0.1).epsilon(1e-12));

    const auto [prof, phi_hat] = ko_profile_calibrate(problem, g, phi_grid_1_to_6());
    CHECK(prof.candidate_index == 0);
    CHECK(phi_hat == 1.0);
    CHECK(prof.phi_used == 1.0);

    const CalibrationResult mko = modified_ko_calibrate(problem, g, Schedule{1.0, 0.5});
    CHECK(mko.candidate_index == 2);
    CHECK(mko.phi_used == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));

    const QuadratureSpec quad = gauss_legendre(problem.domain, 64);
    const CalibrationResult l2 = l2_calibrate(problem, g, quad);
    CHECK(l2.candidate_index == 2);

    const ProjectionResult proj = l2_projection(problem, quad);
    CHECK(proj.candidate_index == 2);
    CHECK(proj.l2_distance == doctest::Approx(1.0).epsilon(1e-4));

    const CalibrationResult ols = ols_calibrate(problem);
    CHECK(ols.candidate_index == 2);
}

TEST_CASE("candidate reordering does not change the selected parameter") {
    const Example1 ex;
    CalibrationProblem problem = ex.problem(11);
    const KernelSpec g = Example1::calibration_kernel();
    const CalibrationResult base = ko_calibrate(problem, g);

    problem.theta_region = scalar_candidates({3.0, 1.0, 2.0});
    const CalibrationResult permuted = ko_calibrate(problem, g);
    CHECK(permuted.theta_hat[0] == base.theta_hat[0]);
    CHECK(permuted.candidate_index == 1);
    CHECK(permuted.objective_value == doctest::Approx(base.objective_value).epsilon(1e-12));
}

TEST_CASE("zero-gamma schedule degenerates to a fixed scale") {
    const Example1 ex;
    const CalibrationProblem problem = ex.problem(11);
    const KernelSpec proto = Example1::calibration_kernel();

    const CalibrationResult fixed = modified_ko_calibrate(problem, proto, Schedule{2.0, 0.0});
    KernelSpec at_two = proto;
    at_two.phi = 2.0;
    const CalibrationResult direct = ko_calibrate(problem, at_two);
    CHECK(fixed.phi_used == 2.0);
    CHECK(fixed.theta_hat[0] == direct.theta_hat[0]);
    CHECK(fixed.objective_value == direct.objective_value);
}

TEST_CASE("rate problem converges near theta_star at moderate n") {
    const RateProblem rate;
    const CalibrationProblem problem = rate.problem(21);
    const QuadratureSpec quad = gauss_legendre(problem.domain, 64);

    const CalibrationResult l2 =
        l2_calibrate(problem, RateProblem::surrogate_kernel(), quad);
    const double err_l2 = std::abs(l2.theta_hat[0] - RateProblem::theta_star());
    CHECK(err_l2 < 1e-3);

    const CalibrationResult ols = ols_calibrate(problem);
    const double err_ols = std::abs(ols.theta_hat[0] - RateProblem::theta_star());
    CHECK(err_ols > err_l2);
}

TEST_CASE("expensive simulator agrees with its cheap counterpart") {
    const SpanProblem span;
    const CalibrationProblem cheap = span.problem(21, false);
    const CalibrationProblem expensive = span.problem(21, true);
    const QuadratureSpec quad = gauss_legendre(cheap.domain, 64);
    const KernelSpec psi = SpanProblem::surrogate_kernel();

    const CalibrationResult l2_cheap = l2_calibrate(cheap, psi, quad);
    const CalibrationResult l2_exp = l2_calibrate(expensive, psi, quad);
    CHECK(std::abs(l2_cheap.theta_hat[0] - l2_exp.theta_hat[0]) < 1e-6);
    CHECK(l2_cheap.fill_distance_g == -1.0);
    CHECK(l2_exp.fill_distance_g > 0.0);

    const CalibrationResult ols_cheap = ols_calibrate(cheap);
    const CalibrationResult ols_exp = ols_calibrate(expensive);
    CHECK(std::abs(ols_cheap.theta_hat[0] - ols_exp.theta_hat[0]) < 1e-6);
}

TEST_CASE("problem validation rejects malformed inputs") {
    const SpanMatchFixture fx;
    CalibrationProblem bad = fx.problem();
    bad.physical_values = Eigen::VectorXd::Zero(3);
    CHECK_THROWS_AS(bad.validate(), InputError);

    CalibrationProblem empty_theta = fx.problem();
    empty_theta.theta_region = std::vector<Eigen::VectorXd>{};
    CHECK_THROWS_AS(empty_theta.validate(), InputError);

    CalibrationProblem dup = fx.problem();
    dup.theta_region = scalar_candidates({0.3, 0.3});
    CHECK_THROWS_AS(dup.validate(), InputError);
}

TEST_CASE("method preconditions") {
    const SpanProblem span;
    const CalibrationProblem expensive = span.problem(11, true);
    CHECK_THROWS_AS(ko_calibrate(expensive, SpanProblem::surrogate_kernel()), InputError);
    CHECK_THROWS_AS(modified_ko_calibrate(expensive, SpanProblem::surrogate_kernel(), {}),
                    InputError);

    const SpanMatchFixture fx;
    const CalibrationProblem problem = fx.problem();
    CHECK_THROWS_AS(ko_profile_calibrate(problem, fx.psi, {}), InputError);
    CHECK_THROWS_AS(ko_profile_calibrate(problem, fx.psi, {1.0, -2.0}), InputError);
    CHECK_THROWS_AS(modified_ko_calibrate(problem, fx.psi, Schedule{-1.0, 0.5}), InputError);
    CHECK_THROWS_AS(modified_ko_calibrate(problem, fx.psi, Schedule{1.0, 1.0}), InputError);

    const QuadratureSpec wrong = gauss_legendre(BoxDomain::interval(0, 2), 16);
    CHECK_THROWS_AS(l2_calibrate(problem, fx.psi, wrong), InputError);

    CalibrationProblem no_oracle = fx.problem();
    no_oracle.physical_oracle = nullptr;
    const QuadratureSpec quad = gauss_legendre(fx.omega, 16);
    CHECK_THROWS_AS(l2_projection(no_oracle, quad), InputError);
}

}  // TEST_SUITE
