#include "calibkit/interpolate.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <sstream>

namespace calibkit {

namespace {

// Attempts LLT factorizations of Gram + nugget*I per the policy; returns the
// factor and the nugget that succeeded.
std::pair<Eigen::MatrixXd, double> factor_gram(const Eigen::MatrixXd& K,
                                               const NuggetSettings& settings) {
    const int n = static_cast<int>(K.rows());
    auto attempt = [&](double nugget, Eigen::MatrixXd& L) {
        Eigen::MatrixXd A = K;
        A.diagonal().array() += nugget;
        Eigen::LLT<Eigen::MatrixXd> llt(A);
        if (llt.info() != Eigen::Success) return false;
        L = llt.matrixL();
        return L.diagonal().minCoeff() > 0.0 && L.allFinite();
    };

    Eigen::MatrixXd L;
    if (attempt(0.0, L)) return {std::move(L), 0.0};
    if (settings.policy == NuggetPolicy::none) {
        std::ostringstream msg;
        msg << "Cholesky failed on a " << n << "x" << n
            << " Gram matrix with the nugget policy disabled";
        throw IllConditionedError(msg.str(), n, 0.0);
    }
    double nugget = settings.start;
    while (nugget <= settings.max * (1.0 + 1e-12)) {
        if (attempt(nugget, L)) return {std::move(L), nugget};
        nugget *= settings.factor;
    }
    std::ostringstream msg;
    msg << "Cholesky failed on a " << n << "x" << n << " Gram matrix for every nugget up to "
        << settings.max;
    throw IllConditionedError(msg.str(), n, settings.max);
}

}  // namespace

Interpolator fit(const Design& design, const Eigen::VectorXd& values, const KernelSpec& kernel,
                 const NuggetSettings& nugget) {
    kernel.validate();
    if (values.size() != design.size())
        throw InputError("fit: response length does not match the design size");

    Interpolator interp;
    interp.design = design;
    interp.kernel = kernel;
    interp.values = values;

    const Eigen::MatrixXd K = gram(kernel, design);
    auto [L, used] = factor_gram(K, nugget);
    interp.chol_lower = std::move(L);
    interp.nugget_used = used;
    interp.coefficients = interp.chol_lower.triangularView<Eigen::Lower>().solve(values);
    interp.chol_lower.triangularView<Eigen::Lower>().transpose().solveInPlace(
        interp.coefficients);
    return interp;
}

double Interpolator::predict(const Eigen::VectorXd& x) const {
    if (x.size() != design.dim()) throw InputError("predict: point dimension mismatch");
    double acc = 0.0;
    for (int i = 0; i < design.size(); ++i) {
        const double r = (design.points.row(i).transpose() - x).norm();
        acc += coefficients[i] * eval_radial(kernel, r);
    }
    return acc;
}

double Interpolator::predict(double x) const {
    Eigen::VectorXd px(1);
    px << x;
    return predict(px);
}

double predict(const Interpolator& interp, const Eigen::VectorXd& x) { return interp.predict(x); }

double native_norm_sq(const Interpolator& interp) {
    // u^T (Gram + nugget*I) u = ||L^T u||^2, nonnegative by construction.
    const Eigen::VectorXd Ltu =
        interp.chol_lower.transpose().triangularView<Eigen::Upper>() * interp.coefficients;
    return Ltu.squaredNorm();
}

double pss(const Eigen::VectorXd& values, const Design& design, const KernelSpec& kernel,
           const NuggetSettings& nugget, double* nugget_used) {
    const Interpolator interp = fit(design, values, kernel, nugget);
    if (nugget_used != nullptr) *nugget_used = interp.nugget_used;
    return native_norm_sq(interp);
}

double profile_loglik(const Eigen::VectorXd& values, const Design& design,
                      const KernelSpec& kernel, const NuggetSettings& nugget) {
    if (design.size() < 2) throw InputError("profile_loglik: need n >= 2");
    if (values.isZero(0.0))
        throw NumericalError("profile_loglik: undefined for identically zero responses");

    const Interpolator interp = fit(design, values, kernel, nugget);
    const double quad_form = native_norm_sq(interp);
    if (!(quad_form > 0.0))
        throw NumericalError("profile_loglik: quadratic form vanished");
    const double half_logdet = interp.chol_lower.diagonal().array().log().sum();
    const double n = static_cast<double>(design.size());
    return -0.5 * n * std::log(quad_form) - half_logdet;
}

}  // namespace calibkit
