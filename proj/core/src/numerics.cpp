#include "calibkit/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace calibkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1-D Gauss-Legendre nodes/weights on [-1,1] by Golub-Welsch: eigenvalues of
// the symmetric tridiagonal Jacobi matrix, weights from the first eigenvector
// components.
void legendre_rule(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes = es.eigenvalues();  // ascending
    weights.resize(m);
    for (int i = 0; i < m; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = 2.0 * v0 * v0;
    }
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

struct Vertex {
    Eigen::VectorXd x;
    double f;
};

void sort_simplex(std::vector<Vertex>& simplex) {
    std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) {
        if (a.f != b.f) return a.f < b.f;
        return lex_less(a.x, b.x);
    });
}

}  // namespace

QuadratureSpec gauss_legendre(const BoxDomain& domain, int order) {
    domain.validate();
    if (order < 1) throw InputError("gauss_legendre: order must be >= 1");
    const int d = domain.dim();

    Eigen::VectorXd t, w;
    legendre_rule(order, t, w);

    long total = 1;
    for (int i = 0; i < d; ++i) total *= order;

    QuadratureSpec quad;
    quad.domain = domain;
    quad.order = order;
    quad.nodes.resize(total, d);
    quad.weights.resize(total);
    std::vector<int> idx(d, 0);
    for (long row = 0; row < total; ++row) {
        long rem = row;
        double weight = 1.0;
        for (int i = 0; i < d; ++i) {
            idx[i] = static_cast<int>(rem % order);
            rem /= order;
            const double half = 0.5 * domain.span(i);
            quad.nodes(row, i) = domain.lower[i] + half * (t[idx[i]] + 1.0);
            weight *= half * w[idx[i]];
        }
        quad.weights[row] = weight;
    }
    return quad;
}

double l2_norm(const ScalarField& f, const QuadratureSpec& quad) {
    double acc = 0.0;
    for (int i = 0; i < quad.size(); ++i) {
        const double v = f(quad.nodes.row(i).transpose());
        if (!std::isfinite(v))
            throw NumericalError("l2_norm: non-finite integrand at node " + std::to_string(i));
        acc += quad.weights[i] * v * v;
    }
    return std::sqrt(acc);
}

double inner_product(const ScalarField& f, const ScalarField& g, const QuadratureSpec& quad) {
    double acc = 0.0;
    for (int i = 0; i < quad.size(); ++i) {
        const Eigen::VectorXd x = quad.nodes.row(i).transpose();
        const double fv = f(x), gv = g(x);
        if (!std::isfinite(fv) || !std::isfinite(gv))
            throw NumericalError("inner_product: non-finite integrand at node " +
                                 std::to_string(i));
        acc += quad.weights[i] * fv * gv;
    }
    return acc;
}

namespace {

// One Nelder-Mead run from x0, candidates clamped into the box. `evals` counts
// finite objective values seen across the whole multistart.
StartSummary nelder_mead(const ScalarField& objective, const BoxDomain& box,
                         const Eigen::VectorXd& x0, const MinimizeSettings& s, long& finite_evals) {
    const int d = box.dim();
    auto eval = [&](const Eigen::VectorXd& x) {
        double v;
        try {
            v = objective(x);
        } catch (const std::exception&) {
            return kInf;
        }
        if (!std::isfinite(v)) return kInf;
        ++finite_evals;
        return v;
    };

    std::vector<Vertex> simplex;
    simplex.push_back({x0, eval(x0)});
    for (int i = 0; i < d; ++i) {
        double step = 0.05 * box.span(i);
        if (x0[i] + step > box.upper[i]) step = -step;
        Eigen::VectorXd v = x0;
        v[i] += step;
        v = box.clamp(v);
        simplex.push_back({v, eval(v)});
    }

    StartSummary summary;
    summary.start = x0;
    int iter = 0;
    for (; iter < s.max_iters; ++iter) {
        sort_simplex(simplex);

        const double fbest = simplex.front().f, fworst = simplex.back().f;
        double diam = 0.0;
        for (int i = 1; i <= d; ++i)
            diam = std::max(diam, (simplex[i].x - simplex[0].x).norm());
        const bool fdone = std::isfinite(fbest) &&
                           (fworst - fbest) <= s.ftol * (1.0 + std::abs(fbest));
        const bool xdone = diam <= s.xtol * (1.0 + simplex[0].x.norm());
        if (fdone && xdone) {
            summary.converged = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
        for (int i = 0; i < d; ++i) centroid += simplex[i].x;
        centroid /= static_cast<double>(d);

        const Eigen::VectorXd& xw = simplex[d].x;
        Eigen::VectorXd xr = box.clamp(centroid + (centroid - xw));
        const double fr = eval(xr);

        if (fr < simplex[0].f) {
            Eigen::VectorXd xe = box.clamp(centroid + 2.0 * (centroid - xw));
            const double fe = eval(xe);
            simplex[d] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < simplex[d - 1].f) {
            simplex[d] = {xr, fr};
        } else {
            const bool outside = fr < simplex[d].f;
            Eigen::VectorXd xc = outside ? box.clamp(centroid + 0.5 * (xr - centroid))
                                         : box.clamp(centroid - 0.5 * (centroid - xw));
            const double fc = eval(xc);
            if ((outside && fc <= fr) || (!outside && fc < simplex[d].f)) {
                simplex[d] = {xc, fc};
            } else {
                for (int i = 1; i <= d; ++i) {
                    simplex[i].x = box.clamp(simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x));
                    simplex[i].f = eval(simplex[i].x);
                }
            }
        }
    }
    sort_simplex(simplex);
    summary.best = simplex[0].x;
    summary.value = simplex[0].f;
    summary.iterations = iter;
    return summary;
}

}  // namespace

MinimizeResult minimize_box(const ScalarField& objective, const BoxDomain& region,
                            const MinimizeSettings& settings) {
    region.validate();
    if (settings.multistarts < 1) throw InputError("minimize_box: need at least one start");

    const Design starts = halton(region, settings.multistarts);
    long finite_evals = 0;

    MinimizeResult result;
    for (int k = 0; k < starts.size(); ++k) {
        StartSummary run = nelder_mead(objective, region, starts.point(k), settings, finite_evals);
        result.trace.push_back(std::move(run));
    }
    if (finite_evals == 0)
        throw NumericalError("minimize_box: objective produced no finite value at any start");

    int best = -1;
    for (size_t k = 0; k < result.trace.size(); ++k) {
        if (!std::isfinite(result.trace[k].value)) continue;
        if (best < 0 || result.trace[k].value < result.trace[best].value ||
            (result.trace[k].value == result.trace[best].value &&
             lex_less(result.trace[k].best, result.trace[best].best)))
            best = static_cast<int>(k);
    }

    // Tie detection: distinct minimizers whose values agree to 1e-12 relative.
    const double vbest = result.trace[best].value;
    const double vtol = 1e-12 * (1.0 + std::abs(vbest));
    Eigen::VectorXd xbest = result.trace[best].best;
    for (const StartSummary& run : result.trace) {
        if (!std::isfinite(run.value) || run.value - vbest > vtol) continue;
        const double sep = (run.best - xbest).norm();
        if (sep > 10.0 * settings.xtol * (1.0 + xbest.norm())) {
            result.tie = true;
            if (lex_less(run.best, xbest)) xbest = run.best;
        }
    }

    result.argmin = xbest;
    result.value = objective(xbest);
    return result;
}

MinimizeResult minimize_box(const ScalarField& objective,
                            const std::vector<Eigen::VectorXd>& candidates) {
    if (candidates.empty()) throw InputError("minimize_box: empty candidate list");

    MinimizeResult result;
    std::vector<double> values(candidates.size(), kInf);
    double vmin = kInf;
    for (size_t i = 0; i < candidates.size(); ++i) {
        double v;
        try {
            v = objective(candidates[i]);
        } catch (const std::exception&) {
            v = kInf;
        }
        if (!std::isfinite(v)) v = kInf;
        values[i] = v;
        StartSummary run;
        run.start = candidates[i];
        run.best = candidates[i];
        run.value = v;
        run.iterations = 1;
        run.converged = std::isfinite(v);
        result.trace.push_back(std::move(run));
        vmin = std::min(vmin, v);
    }
    if (!std::isfinite(vmin))
        throw NumericalError("minimize_box: objective non-finite on every candidate");

    // Smallest index among values tied with the minimum to 1e-12 relative.
    const double vtol = 1e-12 * (1.0 + std::abs(vmin));
    int best = -1;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (values[i] - vmin > vtol) continue;
        if (best < 0)
            best = static_cast<int>(i);
        else
            result.tie = true;
    }

    result.candidate_index = best;
    result.argmin = candidates[best];
    result.value = values[best];
    return result;
}

}  // namespace calibkit
