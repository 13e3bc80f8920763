#include "calibkit/kernels.hpp"

#include <cmath>

#include "calibkit/design.hpp"

namespace calibkit {

KernelSpec KernelSpec::gaussian(double phi) {
    KernelSpec spec{KernelFamily::gaussian, phi, 0.0};
    spec.validate();
    return spec;
}

KernelSpec KernelSpec::matern(double nu, double phi) {
    KernelSpec spec{KernelFamily::matern, phi, nu};
    spec.validate();
    return spec;
}

void KernelSpec::validate() const {
    if (!(phi > 0.0) || !std::isfinite(phi))
        throw InputError("kernel scale phi must be positive and finite");
    if (family == KernelFamily::matern) {
        if (nu != 0.5 && nu != 1.5 && nu != 2.5 && nu != 3.5)
            throw InputError("matern smoothness nu must be one of 1/2, 3/2, 5/2, 7/2");
    }
}

double eval_radial(const KernelSpec& spec, double r) {
    if (r == 0.0) return 1.0;
    if (spec.family == KernelFamily::gaussian) {
        const double z = spec.phi * r;
        return std::exp(-z * z);
    }
    const double z = 2.0 * std::sqrt(spec.nu) * spec.phi * r;
    double poly = 1.0;
    if (spec.nu == 1.5) {
        poly = 1.0 + z;
    } else if (spec.nu == 2.5) {
        poly = 1.0 + z + z * z / 3.0;
    } else if (spec.nu == 3.5) {
        poly = 1.0 + z + 2.0 * z * z / 5.0 + z * z * z / 15.0;
    }
    return poly * std::exp(-z);
}

double eval(const KernelSpec& spec, const Eigen::VectorXd& s, const Eigen::VectorXd& t) {
    if (s.size() != t.size()) throw InputError("kernel eval: point dimensions differ");
    if (!s.allFinite() || !t.allFinite()) throw InputError("kernel eval: non-finite coordinates");
    return eval_radial(spec, (s - t).norm());
}

double eval(const KernelSpec& spec, double s, double t) {
    if (!std::isfinite(s) || !std::isfinite(t))
        throw InputError("kernel eval: non-finite coordinates");
    return eval_radial(spec, std::abs(s - t));
}

Eigen::MatrixXd gram(const KernelSpec& spec, const Design& design) {
    spec.validate();
    const int n = design.size();
    Eigen::MatrixXd K(n, n);
    for (int i = 0; i < n; ++i) {
        K(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double r = (design.points.row(i) - design.points.row(j)).norm();
            if (r == 0.0)
                throw DegenerateDesignError("gram: design points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
            K(i, j) = K(j, i) = eval_radial(spec, r);
        }
    }
    return K;
}

}  // namespace calibkit
