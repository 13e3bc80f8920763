#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "calibkit/errors.hpp"
#include "calibkit/io.hpp"
#include "commands.hpp"

namespace {

void apply_thread_cap() {
    if (const char* env = std::getenv("CALIBKIT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) Eigen::setNbThreads(n);
    }
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"calibkit: frequentist calibration of deterministic computer models"};
    app.set_version_flag("--version", calibkit::version());
    app.require_subcommand(1);

    int rc = 0;
    const auto run = [&rc](const std::function<int()>& body) {
        rc = calibkit::cli::guarded(std::cerr, body);
    };

    // example1
    calibkit::cli::ExampleOptions example_opts;
    CLI::App* example = app.add_subcommand(
        "example1", "Reproduce the three-candidate example artifacts and golden checks");
    example->add_option("--out", example_opts.out_dir, "Output directory")->required();
    example->callback([&] {
        run([&] { return calibkit::cli::cmd_example1(example_opts, std::cout, std::cerr); });
    });

    // calibrate
    calibkit::cli::CalibrateOptions cal_opts;
    std::string cal_phi_grid;
    CLI::App* calibrate =
        app.add_subcommand("calibrate", "Run calibration methods from a problem manifest");
    calibrate->add_option("--manifest", cal_opts.manifest, "Problem manifest (json)")->required();
    calibrate->add_option("--out", cal_opts.out_dir, "Output directory")->required();
    calibrate->add_option("--method", cal_opts.method,
                          "Method name (ko, profile-ko, modified-ko, l2, ols) or 'all'");
    calibrate->add_option("--quad-order", cal_opts.quad_order,
                          "Override the manifest quadrature order");
    calibrate->add_option("--phi-grid", cal_phi_grid, "Profile-KO grid as a:b:steps");
    calibrate->callback([&] {
        run([&] {
            if (!cal_phi_grid.empty())
                cal_opts.phi_grid = calibkit::cli::parse_grid_spec(cal_phi_grid);
            return calibkit::cli::cmd_calibrate(cal_opts, std::cout, std::cerr);
        });
    });

    // rates
    calibkit::cli::RatesOptions rates_opts;
    std::string rates_sizes, rates_phi_grid;
    CLI::App* rates =
        app.add_subcommand("rates", "Convergence-rate sweep over design sizes from a manifest");
    rates->add_option("--manifest", rates_opts.manifest, "Problem manifest (json)")->required();
    rates->add_option("--out", rates_opts.out_dir, "Output directory")->required();
    rates->add_option("--sizes", rates_sizes, "Design sizes, e.g. 11,21,41,81,161");
    rates->add_option("--quad-order", rates_opts.quad_order,
                      "Override the manifest quadrature order");
    rates->add_option("--phi-grid", rates_phi_grid, "Profile-KO grid as a:b:steps");
    rates->callback([&] {
        run([&] {
            if (!rates_sizes.empty())
                rates_opts.sizes = calibkit::cli::parse_size_list(rates_sizes);
            if (!rates_phi_grid.empty())
                rates_opts.phi_grid = calibkit::cli::parse_grid_spec(rates_phi_grid);
            return calibkit::cli::cmd_rates(rates_opts, std::cout, std::cerr);
        });
    });

    // eig
    calibkit::cli::EigOptions eig_opts;
    std::string eig_domain = "-1:1";
    CLI::App* eig = app.add_subcommand("eig", "Nystrom eigenanalysis of a kernel on an interval");
    eig->add_option("--kernel", eig_opts.kernel_json, "Kernel spec json (inline or a file path)");
    eig->add_option("--domain", eig_domain, "Interval as a:b (default -1:1)");
    eig->add_option("--quad-order", eig_opts.quad_order, "Quadrature order (default 64)");
    eig->add_option("--modes", eig_opts.modes, "Number of eigenpairs (default 5)");
    eig->add_option("--grid-points", eig_opts.grid_points,
                    "Sampling grid for modes.csv (default 201)");
    eig->add_option("--out", eig_opts.out_dir, "Output directory")->required();
    eig->callback([&] {
        run([&] {
            const auto colon = eig_domain.find(':');
            if (colon == std::string::npos)
                throw calibkit::InputError("eig: --domain must be a:b");
            const auto parse_bound = [](const std::string& s) {
                char* end = nullptr;
                const double v = std::strtod(s.c_str(), &end);
                if (end == s.c_str() || *end != '\0' || !std::isfinite(v))
                    throw calibkit::InputError("eig: cannot parse '" + s + "' in --domain");
                return v;
            };
            eig_opts.lower = parse_bound(eig_domain.substr(0, colon));
            eig_opts.upper = parse_bound(eig_domain.substr(colon + 1));
            return calibkit::cli::cmd_eig(eig_opts, std::cout, std::cerr);
        });
    });

    // interp
    calibkit::cli::InterpOptions interp_opts;
    CLI::App* interp = app.add_subcommand("interp", "Fit a kernel interpolant to csv data");
    interp->add_option("--design", interp_opts.design_csv, "Design csv (columns x1..xd)")
        ->required();
    interp->add_option("--values", interp_opts.values_csv, "Values csv (single column)")
        ->required();
    interp->add_option("--kernel", interp_opts.kernel_json, "Kernel spec json (inline or a path)")
        ->required();
    interp->add_option("--domain", interp_opts.domain, "Box as a:b[,a2:b2,...]")->required();
    interp->add_option("--grid", interp_opts.grid, "Prediction grid a:b:steps (1-D only)");
    interp->add_option("--out", interp_opts.out_dir, "Output directory")->required();
    interp->callback([&] {
        run([&] { return calibkit::cli::cmd_interp(interp_opts, std::cout, std::cerr); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return rc;
}
