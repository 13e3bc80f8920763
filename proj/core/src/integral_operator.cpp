#include "calibkit/integral_operator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace calibkit {

EigenSystem nystrom_eig(const KernelSpec& kernel, const BoxDomain& domain, int quad_order,
                        int num_modes) {
    kernel.validate();
    if (num_modes < 1) throw InputError("nystrom_eig: need num_modes >= 1");
    if (quad_order < num_modes)
        throw InputError("nystrom_eig: quad_order must be >= num_modes");

    EigenSystem sys;
    sys.kernel = kernel;
    sys.quadrature = gauss_legendre(domain, quad_order);
    const int m = sys.quadrature.size();
    if (m < num_modes) throw InputError("nystrom_eig: quadrature has fewer nodes than modes");

    // Symmetrized discretization B = W^{1/2} K W^{1/2}; its eigenvalues
    // approximate the operator's, and v_i / sqrt(w) samples the L2-normalized
    // eigenfunction at the nodes.
    const Eigen::VectorXd sqrt_w = sys.quadrature.weights.array().sqrt();
    Eigen::MatrixXd B(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const double r = (sys.quadrature.nodes.row(i) - sys.quadrature.nodes.row(j)).norm();
            B(i, j) = B(j, i) = sqrt_w[i] * eval_radial(kernel, r) * sqrt_w[j];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
    if (es.info() != Eigen::Success)
        throw NumericalError("nystrom_eig: eigendecomposition failed");

    sys.eigenvalues.resize(num_modes);
    sys.node_values.resize(m, num_modes);
    for (int k = 0; k < num_modes; ++k) {
        const int src = m - 1 - k;  // solver returns ascending order
        const double lambda = es.eigenvalues()[src];
        if (!(lambda > 0.0))
            throw NumericalError("nystrom_eig: retained eigenvalue " + std::to_string(k + 1) +
                                 " is not positive (rank-deficient operator)");
        sys.eigenvalues[k] = lambda;
        sys.node_values.col(k) = es.eigenvectors().col(src).cwiseQuotient(sqrt_w);

        // Sign convention: integral f_k >= 0, falling back to a positive value
        // at the first node.
        const double integral = sys.quadrature.weights.dot(sys.node_values.col(k));
        const double scale = std::sqrt(sys.quadrature.domain.volume());
        if (integral < -1e-10 * scale ||
            (std::abs(integral) <= 1e-10 * scale && sys.node_values(0, k) < 0.0))
            sys.node_values.col(k) = -sys.node_values.col(k);
    }
    return sys;
}

double EigenSystem::eigenfunction(int i, const Eigen::VectorXd& x) const {
    if (i < 0 || i >= modes()) throw InputError("eigenfunction: mode index out of range");
    double acc = 0.0;
    for (int k = 0; k < quadrature.size(); ++k) {
        const double r = (quadrature.nodes.row(k).transpose() - x).norm();
        acc += quadrature.weights[k] * eval_radial(kernel, r) * node_values(k, i);
    }
    return acc / eigenvalues[i];
}

double EigenSystem::eigenfunction(int i, double x) const {
    Eigen::VectorXd px(1);
    px << x;
    return eigenfunction(i, px);
}

double kl_density_exponent(const ScalarField& f, const EigenSystem& eig, int truncation) {
    if (truncation < 1 || truncation > eig.modes())
        throw InputError("kl_density_exponent: truncation exceeds retained modes");

    Eigen::VectorXd f_nodes(eig.quadrature.size());
    for (int k = 0; k < eig.quadrature.size(); ++k) {
        f_nodes[k] = f(eig.quadrature.nodes.row(k).transpose());
        if (!std::isfinite(f_nodes[k]))
            throw NumericalError("kl_density_exponent: non-finite f at node " + std::to_string(k));
    }

    double exponent = 0.0;
    for (int i = 0; i < truncation; ++i) {
        const double coeff =
            (eig.quadrature.weights.array() * f_nodes.array() * eig.node_values.col(i).array())
                .sum();
        exponent -= coeff * coeff / (2.0 * eig.eigenvalues[i] * eig.eigenvalues[i]);
    }
    return exponent;
}

}  // namespace calibkit
