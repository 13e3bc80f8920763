#include <doctest.h>

#include <cmath>
#include <numbers>

#include "calibkit/errors.hpp"
#include "calibkit/integral_operator.hpp"

using namespace calibkit;

namespace {

double quad_inner(const EigenSystem& eig, int i, int j) {
    double acc = 0.0;
    for (int k = 0; k < eig.quadrature.size(); ++k)
        acc += eig.quadrature.weights[k] * eig.node_values(k, i) * eig.node_values(k, j);
    return acc;
}

}  // namespace

TEST_SUITE("operator") {

TEST_CASE("near-constant kernel is a rank-one operator") {
    // gaussian with a vanishing scale is pointwise within 4e-16 of the constant
    // kernel on [-1,1]: lambda_1 = Vol = 2 and f_1 = 1/sqrt(2).
    const EigenSystem eig =
        nystrom_eig(KernelSpec::gaussian(1e-8), BoxDomain::interval(-1, 1), 64, 1);
    REQUIRE(eig.modes() == 1);
    CHECK(eig.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
    for (int k = 0; k < eig.quadrature.size(); ++k)
        CHECK(eig.node_values(k, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(eig.eigenfunction(0, 0.3) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("gaussian spectrum on [-1,1]") {
    const EigenSystem eig = nystrom_eig(KernelSpec::gaussian(0.70710678118654752),
                                        BoxDomain::interval(-1, 1), 64, 5);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.5446631135306708).epsilon(1e-8));
    CHECK(eig.eigenvalues[1] == doctest::Approx(0.39724922141035979).epsilon(1e-8));
    for (int i = 1; i < eig.modes(); ++i) {
        CHECK(eig.eigenvalues[i] > 0.0);
        CHECK(eig.eigenvalues[i] <= eig.eigenvalues[i - 1]);
    }
}

TEST_CASE("trace matches the domain volume") {
    // matern nu=1/2 has a polynomially decaying spectrum, so every mode of the
    // order-64 discretization stays positive and can be retained.
    const BoxDomain box = BoxDomain::interval(-1, 1);
    const int order = 64;
    const EigenSystem eig = nystrom_eig(KernelSpec::matern(0.5, 1.0), box, order, order);
    double trace = 0.0;
    for (double lambda : eig.eigenvalues) trace += lambda;
    CHECK(trace == doctest::Approx(box.volume()).epsilon(1e-4));
}

TEST_CASE("modes are orthonormal under the quadrature inner product") {
    const EigenSystem eig =
        nystrom_eig(KernelSpec::gaussian(1.0), BoxDomain::interval(-1, 1), 64, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            CHECK(std::abs(quad_inner(eig, i, j) - expected) < 1e-6);
        }
}

TEST_CASE("nystrom residual is small on the quadrature nodes") {
    const EigenSystem eig =
        nystrom_eig(KernelSpec::gaussian(1.0), BoxDomain::interval(-1, 1), 64, 4);
    const QuadratureSpec& quad = eig.quadrature;
    for (int i = 0; i < eig.modes(); ++i) {
        double resid_sq = 0.0;
        for (int a = 0; a < quad.size(); ++a) {
            double kf = 0.0;
            for (int b = 0; b < quad.size(); ++b)
                kf += quad.weights[b] *
                      eval_radial(eig.kernel, std::abs(quad.nodes(a, 0) - quad.nodes(b, 0))) *
                      eig.node_values(b, i);
            const double r = kf - eig.eigenvalues[i] * eig.node_values(a, i);
            resid_sq += quad.weights[a] * r * r;
        }
        CHECK(std::sqrt(resid_sq) < 1e-6 * eig.eigenvalues[0]);
    }
}

TEST_CASE("refinement stability of the leading eigenvalues") {
    const BoxDomain box = BoxDomain::interval(-1, 1);
    const EigenSystem coarse = nystrom_eig(KernelSpec::gaussian(1.0), box, 64, 2);
    const EigenSystem fine = nystrom_eig(KernelSpec::gaussian(1.0), box, 128, 2);
    CHECK(std::abs(coarse.eigenvalues[0] - fine.eigenvalues[0]) < 1e-6);
    CHECK(std::abs(coarse.eigenvalues[1] - fine.eigenvalues[1]) < 1e-6);
}

TEST_CASE("sign convention") {
    const EigenSystem eig =
        nystrom_eig(KernelSpec::gaussian(1.0), BoxDomain::interval(-1, 1), 64, 3);
    const QuadratureSpec& quad = eig.quadrature;

    double integral_f1 = 0.0;
    for (int k = 0; k < quad.size(); ++k)
        integral_f1 += quad.weights[k] * eig.node_values(k, 0);
    CHECK(integral_f1 > 0.0);

    // The second mode is odd, so its integral vanishes and the fallback pins
    // the value at the leftmost node positive.
    double integral_f2 = 0.0;
    for (int k = 0; k < quad.size(); ++k)
        integral_f2 += quad.weights[k] * eig.node_values(k, 1);
    CHECK(std::abs(integral_f2) < 1e-10);
    CHECK(eig.node_values(0, 1) > 0.0);
}

TEST_CASE("nystrom extension agrees with the node values") {
    const EigenSystem eig =
        nystrom_eig(KernelSpec::matern(2.5, 1.0), BoxDomain::interval(0, 2), 48, 3);
    for (int i = 0; i < eig.modes(); ++i)
        for (int k : {0, 10, 33, 47})
            CHECK(eig.eigenfunction(i, eig.quadrature.nodes(k, 0)) ==
                  doctest::Approx(eig.node_values(k, i)).epsilon(1e-9));
}

TEST_CASE("input validation and rank deficiency") {
    const BoxDomain box = BoxDomain::interval(-1, 1);
    CHECK_THROWS_AS(nystrom_eig(KernelSpec::gaussian(1.0), box, 4, 5), InputError);
    // Retaining the full spectrum of a numerically rank-one discretization hits
    // eigenvalues that are zero to rounding.
    CHECK_THROWS_AS(nystrom_eig(KernelSpec::gaussian(1e-9), box, 32, 32), NumericalError);
}

TEST_CASE("kl density exponent collapses on an eigenfunction") {
    const EigenSystem eig =
        nystrom_eig(KernelSpec::gaussian(1.0), BoxDomain::interval(-1, 1), 64, 5);
    const ScalarField f1 = [&](const Eigen::VectorXd& x) { return eig.eigenfunction(0, x[0]); };
    const double lambda1 = eig.eigenvalues[0];
    CHECK(kl_density_exponent(f1, eig, 5) ==
          doctest::Approx(-1.0 / (2.0 * lambda1 * lambda1)).epsilon(1e-8));

    // A mode outside the truncation window is orthogonal to every retained one.
    const ScalarField f5 = [&](const Eigen::VectorXd& x) { return eig.eigenfunction(4, x[0]); };
    CHECK(std::abs(kl_density_exponent(f5, eig, 4)) < 1e-10);

    CHECK_THROWS_AS(kl_density_exponent(f1, eig, 6), InputError);
}

TEST_CASE("kl density exponent ranks the leading mode highest") {
    const EigenSystem eig =
        nystrom_eig(KernelSpec::gaussian(1.0), BoxDomain::interval(-1, 1), 64, 5);
    const double scale = std::sqrt(20.0);
    const ScalarField e1 = [&](const Eigen::VectorXd& x) {
        return scale * eig.eigenfunction(0, x[0]);
    };
    const ScalarField e2 = [&](const Eigen::VectorXd& x) {
        return scale * eig.eigenfunction(1, x[0]);
    };
    const ScalarField e3 = [](const Eigen::VectorXd& x) {
        return std::sin(2.0 * std::numbers::pi * x[0]);
    };
    const double k1 = kl_density_exponent(e1, eig, 5);
    const double k2 = kl_density_exponent(e2, eig, 5);
    const double k3 = kl_density_exponent(e3, eig, 5);
    CHECK(k1 > k2);
    CHECK(k1 > k3);
}

}  // TEST_SUITE
