#include "calibkit/design.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace calibkit {

BoxDomain::BoxDomain(Eigen::VectorXd lo, Eigen::VectorXd up)
    : lower(std::move(lo)), upper(std::move(up)) {
    validate();
}

BoxDomain BoxDomain::interval(double a, double b) {
    Eigen::VectorXd lo(1), up(1);
    lo << a;
    up << b;
    return BoxDomain(std::move(lo), std::move(up));
}

void BoxDomain::validate() const {
    if (lower.size() == 0 || lower.size() != upper.size())
        throw InputError("box domain: dimension must be >= 1 with matching bounds");
    for (int i = 0; i < lower.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || !(lower[i] < upper[i]))
            throw InputError("box domain: need finite lower[i] < upper[i] in dimension " +
                             std::to_string(i));
    }
}

double BoxDomain::volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= span(i);
    return v;
}

bool BoxDomain::contains(const Eigen::VectorXd& x, double tol) const {
    if (x.size() != lower.size()) return false;
    for (int i = 0; i < dim(); ++i) {
        const double slack = tol * span(i);
        if (x[i] < lower[i] - slack || x[i] > upper[i] + slack) return false;
    }
    return true;
}

Eigen::VectorXd BoxDomain::clamp(const Eigen::VectorXd& x) const {
    return x.cwiseMax(lower).cwiseMin(upper);
}

BoxDomain product(const BoxDomain& a, const BoxDomain& b) {
    Eigen::VectorXd lo(a.dim() + b.dim()), up(a.dim() + b.dim());
    lo << a.lower, b.lower;
    up << a.upper, b.upper;
    return BoxDomain(std::move(lo), std::move(up));
}

Design::Design(Eigen::MatrixXd pts, BoxDomain dom) : points(std::move(pts)), domain(std::move(dom)) {
    domain.validate();
    if (points.rows() == 0) throw DegenerateDesignError("design: empty point set");
    if (points.cols() != domain.dim())
        throw DegenerateDesignError("design: point dimension does not match the domain");
    for (int i = 0; i < points.rows(); ++i) {
        if (!domain.contains(points.row(i).transpose(), 1e-12))
            throw DegenerateDesignError("design: point " + std::to_string(i) +
                                        " lies outside the domain");
    }
    for (int i = 0; i < points.rows(); ++i)
        for (int j = i + 1; j < points.rows(); ++j)
            if ((points.row(i) - points.row(j)).norm() == 0.0)
                throw DegenerateDesignError("design: points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
}

Design equispaced(const BoxDomain& domain, int n) {
    domain.validate();
    if (domain.dim() != 1) throw InputError("equispaced: 1-D domains only");
    if (n < 2) throw InputError("equispaced: need n >= 2");
    Eigen::MatrixXd pts(n, 1);
    const double a = domain.lower[0], b = domain.upper[0];
    for (int j = 0; j < n; ++j) pts(j, 0) = a + (b - a) * static_cast<double>(j) / (n - 1);
    pts(n - 1, 0) = b;
    return Design(std::move(pts), domain);
}

namespace {

// Van der Corput radical inverse of `index` in the given base.
double radical_inverse(long index, int base) {
    double inv_base = 1.0 / base;
    double factor = inv_base;
    double value = 0.0;
    while (index > 0) {
        value += factor * static_cast<double>(index % base);
        index /= base;
        factor *= inv_base;
    }
    return value;
}

std::vector<int> first_primes(int count) {
    std::vector<int> primes;
    for (int candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
        bool prime = true;
        for (int p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(candidate);
    }
    return primes;
}

}  // namespace

Design halton(const BoxDomain& domain, int n, int skip) {
    domain.validate();
    if (n < 1) throw InputError("halton: need n >= 1");
    if (skip < 0) throw InputError("halton: skip must be nonnegative");
    const int d = domain.dim();
    const std::vector<int> bases = first_primes(d);
    Eigen::MatrixXd pts(n, d);
    for (int j = 0; j < n; ++j) {
        const long index = static_cast<long>(skip) + j + 1;  // sequence starts at index 1
        for (int k = 0; k < d; ++k) {
            const double u = radical_inverse(index, bases[k]);
            pts(j, k) = domain.lower[k] + domain.span(k) * u;
        }
    }
    return Design(std::move(pts), domain);
}

double fill_distance(const Design& design, int resolution) {
    if (design.size() == 0) throw InputError("fill_distance: empty design");
    if (resolution < 2) throw InputError("fill_distance: resolution must be >= 2");
    const int d = design.dim();
    const BoxDomain& box = design.domain;

    long total = 1;
    for (int i = 0; i < d; ++i) total *= resolution;

    double h = 0.0;
    std::vector<int> idx(d, 0);
    Eigen::VectorXd x(d);
    for (long cell = 0; cell < total; ++cell) {
        long rem = cell;
        for (int i = 0; i < d; ++i) {
            idx[i] = static_cast<int>(rem % resolution);
            rem /= resolution;
        }
        for (int i = 0; i < d; ++i)
            x[i] = box.lower[i] + box.span(i) * static_cast<double>(idx[i]) / (resolution - 1);
        double nearest = std::numeric_limits<double>::infinity();
        for (int r = 0; r < design.size(); ++r) {
            const double dist = (design.points.row(r).transpose() - x).norm();
            if (dist < nearest) nearest = dist;
        }
        if (nearest > h) h = nearest;
    }
    return h;
}

double fill_distance(const Design& design) {
    const int d = design.dim();
    const int resolution = d == 1 ? 1001 : (d == 2 ? 101 : 21);
    return fill_distance(design, resolution);
}

}  // namespace calibkit
