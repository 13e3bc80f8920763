#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "calibkit/errors.hpp"
#include "calibkit/numerics.hpp"

using namespace calibkit;

TEST_SUITE("numerics") {

TEST_CASE("gauss-legendre node and weight invariants") {
    const BoxDomain box = BoxDomain::interval(-1, 3);
    const QuadratureSpec quad = gauss_legendre(box, 16);
    CHECK(quad.size() == 16);
    CHECK(quad.weights.minCoeff() > 0.0);
    CHECK(quad.weights.sum() == doctest::Approx(box.volume()).epsilon(1e-14));
    for (int i = 0; i < quad.size(); ++i) {
        CHECK(quad.nodes(i, 0) > box.lower[0]);
        CHECK(quad.nodes(i, 0) < box.upper[0]);
    }

    const BoxDomain square = product(BoxDomain::interval(0, 1), BoxDomain::interval(0, 2));
    const QuadratureSpec q2 = gauss_legendre(square, 8);
    CHECK(q2.size() == 64);
    CHECK(q2.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2m-1 exactly") {
    const BoxDomain box = BoxDomain::interval(0, 1);
    for (int m : {2, 4, 8}) {
        const QuadratureSpec quad = gauss_legendre(box, m);
        for (int k = 0; k <= 2 * m - 1; ++k) {
            double acc = 0.0;
            for (int i = 0; i < quad.size(); ++i)
                acc += quad.weights[i] * std::pow(quad.nodes(i, 0), k);
            CHECK(acc == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("l2 norm examples") {
    const QuadratureSpec sym = gauss_legendre(BoxDomain::interval(-1, 1), 64);
    CHECK(l2_norm([](const Eigen::VectorXd&) { return 1.0; }, sym) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(l2_norm([](const Eigen::VectorXd& x) { return std::sin(2.0 * std::numbers::pi * x[0]); },
                  sym) == doctest::Approx(1.0).epsilon(1e-8));

    const QuadratureSpec unit = gauss_legendre(BoxDomain::interval(0, 1), 32);
    CHECK(l2_norm([](const Eigen::VectorXd& x) { return x[0]; }, unit) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("l2 norm is absolutely homogeneous") {
    const QuadratureSpec quad = gauss_legendre(BoxDomain::interval(0, 2), 24);
    const ScalarField f = [](const Eigen::VectorXd& x) { return std::exp(x[0]) - 0.7 * x[0]; };
    const double base = l2_norm(f, quad);
    for (double c : {-3.0, -0.5, 0.0, 2.25}) {
        const ScalarField cf = [&](const Eigen::VectorXd& x) { return c * f(x); };
        CHECK(l2_norm(cf, quad) == doctest::Approx(std::abs(c) * base).epsilon(1e-14));
    }
}

TEST_CASE("l2 norm reports the offending node for non-finite values") {
    const QuadratureSpec quad = gauss_legendre(BoxDomain::interval(0, 1), 8);
    const ScalarField bad = [](const Eigen::VectorXd& x) {
        return x[0] > 0.5 ? std::nan("") : 1.0;
    };
    CHECK_THROWS_AS(l2_norm(bad, quad), NumericalError);
}

TEST_CASE("inner product") {
    const QuadratureSpec quad = gauss_legendre(BoxDomain::interval(0, 1), 16);
    const ScalarField id = [](const Eigen::VectorXd& x) { return x[0]; };
    CHECK(inner_product(id, id, quad) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("minimize_box on smooth objectives") {
    const MinimizeResult r1 = minimize_box(
        [](const Eigen::VectorXd& t) { return (t[0] - 0.3) * (t[0] - 0.3); },
        BoxDomain::interval(0, 1));
    CHECK(r1.argmin[0] == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(r1.candidate_index == -1);
    CHECK(r1.trace.size() == 16);

    const BoxDomain square = product(BoxDomain::interval(0, 1), BoxDomain::interval(0, 1));
    const MinimizeResult r2 = minimize_box(
        [](const Eigen::VectorXd& t) {
            return (t[0] - 0.2) * (t[0] - 0.2) + (t[1] - 0.7) * (t[1] - 0.7);
        },
        square);
    CHECK(r2.argmin[0] == doctest::Approx(0.2).epsilon(1e-4));
    CHECK(r2.argmin[1] == doctest::Approx(0.7).epsilon(1e-4));
    CHECK(std::abs(r2.argmin[0] - 0.2) < 1e-5);
    CHECK(std::abs(r2.argmin[1] - 0.7) < 1e-5);
}

TEST_CASE("minimize_box respects the box") {
    const MinimizeResult r = minimize_box(
        [](const Eigen::VectorXd& t) { return (t[0] + 1.0) * (t[0] + 1.0); },
        BoxDomain::interval(0, 1));
    CHECK(r.argmin[0] >= 0.0);
    CHECK(r.argmin[0] <= 1e-6);
}

TEST_CASE("candidate minimization picks the smallest value") {
    std::vector<Eigen::VectorXd> candidates;
    for (double v : {1.0, 2.0, 3.0}) {
        Eigen::VectorXd c(1);
        c << v;
        candidates.push_back(c);
    }
    const ScalarField pss_table = [](const Eigen::VectorXd& t) {
        if (t[0] == 1.0) return 12.594;
        if (t[0] == 2.0) return 57.908;
        return 17978.65;
    };
    const MinimizeResult r = minimize_box(pss_table, candidates);
    CHECK(r.candidate_index == 0);
    CHECK(r.argmin[0] == 1.0);
    CHECK(r.value == 12.594);
    CHECK_FALSE(r.tie);
    CHECK(r.trace.size() == 3);
}

TEST_CASE("candidate minimization is permutation invariant") {
    const ScalarField f = [](const Eigen::VectorXd& t) {
        return std::cos(3.0 * t[0]) + 0.1 * t[0];
    };
    std::vector<Eigen::VectorXd> candidates;
    for (double v : {0.1, 0.9, 1.4, 2.2, 3.0}) {
        Eigen::VectorXd c(1);
        c << v;
        candidates.push_back(c);
    }
    const MinimizeResult base = minimize_box(f, candidates);
    std::vector<Eigen::VectorXd> shuffled = {candidates[3], candidates[0], candidates[4],
                                             candidates[2], candidates[1]};
    const MinimizeResult perm = minimize_box(f, shuffled);
    CHECK(perm.argmin[0] == base.argmin[0]);
    CHECK(perm.value == base.value);
}

TEST_CASE("candidate ties break toward the smallest index") {
    std::vector<Eigen::VectorXd> candidates;
    for (double v : {4.0, 2.0, 2.0, 5.0}) {
        Eigen::VectorXd c(1);
        c << v;
        candidates.push_back(c);
    }
    const MinimizeResult r =
        minimize_box([](const Eigen::VectorXd& t) { return t[0]; }, candidates);
    CHECK(r.candidate_index == 1);
    CHECK(r.tie);
}

TEST_CASE("all-non-finite objectives raise a numerical error") {
    const ScalarField nan_field = [](const Eigen::VectorXd&) { return std::nan(""); };
    CHECK_THROWS_AS(minimize_box(nan_field, BoxDomain::interval(0, 1)), NumericalError);

    std::vector<Eigen::VectorXd> candidates;
    Eigen::VectorXd c(1);
    c << 0.5;
    candidates.push_back(c);
    CHECK_THROWS_AS(minimize_box(nan_field, candidates), NumericalError);
}

TEST_CASE("non-finite regions are skipped rather than fatal") {
    const ScalarField partial = [](const Eigen::VectorXd& t) {
        return t[0] < 0.5 ? std::nan("") : (t[0] - 0.8) * (t[0] - 0.8);
    };
    const MinimizeResult r = minimize_box(partial, BoxDomain::interval(0, 1));
    CHECK(r.argmin[0] == doctest::Approx(0.8).epsilon(1e-5));
}

}  // TEST_SUITE
