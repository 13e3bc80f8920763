#include <benchmark/benchmark.h>

#include <cmath>

#include "calibkit/calibrate.hpp"
#include "calibkit/examples.hpp"
#include "calibkit/integral_operator.hpp"
#include "calibkit/interpolate.hpp"
#include "calibkit/kernels.hpp"
#include "calibkit/numerics.hpp"

namespace {

using namespace calibkit;

Eigen::VectorXd smooth_values(const Design& design) {
    Eigen::VectorXd y(design.size());
    for (int i = 0; i < design.size(); ++i) {
        const double x = design.points(i, 0);
        y[i] = std::sin(3.0 * x) + 0.25 * x * x;
    }
    return y;
}

void bm_gram(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Design design = equispaced(BoxDomain::interval(0.0, 1.0), n);
    const KernelSpec kernel = KernelSpec::matern(2.5, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(gram(kernel, design));
    state.SetComplexityN(n);
}
BENCHMARK(bm_gram)->Arg(41)->Arg(161)->Arg(641)->Complexity();

void bm_fit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Design design = equispaced(BoxDomain::interval(0.0, 1.0), n);
    const KernelSpec kernel = KernelSpec::matern(2.5, 1.0);
    const Eigen::VectorXd y = smooth_values(design);
    for (auto _ : state) benchmark::DoNotOptimize(fit(design, y, kernel));
    state.SetComplexityN(n);
}
BENCHMARK(bm_fit)->Arg(41)->Arg(161)->Arg(641)->Complexity();

void bm_pss(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Design design = equispaced(BoxDomain::interval(-1.0, 1.0), n);
    const KernelSpec kernel = KernelSpec::gaussian(1.0);
    const Eigen::VectorXd y = smooth_values(design);
    for (auto _ : state) benchmark::DoNotOptimize(pss(y, design, kernel));
}
BENCHMARK(bm_pss)->Arg(11)->Arg(41)->Arg(161);

void bm_nystrom(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const KernelSpec kernel = KernelSpec::gaussian(1.0);
    const BoxDomain domain = BoxDomain::interval(-1.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(nystrom_eig(kernel, domain, order, 5));
    state.SetComplexityN(order);
}
BENCHMARK(bm_nystrom)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void bm_minimize(benchmark::State& state) {
    const BoxDomain region = BoxDomain::interval(0.0, 2.0);
    const ScalarField objective = [](const Eigen::VectorXd& t) {
        const double u = t[0] - 0.8;
        return u * u + 0.05 * std::sin(9.0 * t[0]);
    };
    for (auto _ : state) benchmark::DoNotOptimize(minimize_box(objective, region));
}
BENCHMARK(bm_minimize);

void bm_profile_grid(benchmark::State& state) {
    const Example1 example;
    const Design design = equispaced(BoxDomain::interval(-1.0, 1.0), 11);
    Eigen::VectorXd eps(design.size());
    for (int i = 0; i < design.size(); ++i) eps[i] = example.eps(0, design.points(i, 0));
    for (auto _ : state) {
        double acc = 0.0;
        for (int j = 0; j < 51; ++j) {
            KernelSpec k = KernelSpec::gaussian(1.0 + 0.1 * j);
            acc += profile_loglik(eps, design, k);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_profile_grid);

void bm_l2_calibrate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CalibrationProblem problem = RateProblem().problem(n);
    const KernelSpec kernel = RateProblem::surrogate_kernel();
    const QuadratureSpec quad = gauss_legendre(problem.domain, 64);
    for (auto _ : state) benchmark::DoNotOptimize(l2_calibrate(problem, kernel, quad));
}
BENCHMARK(bm_l2_calibrate)->Arg(21)->Arg(81);

}  // namespace

BENCHMARK_MAIN();
