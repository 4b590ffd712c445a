// Command-line front end: eval, verify, sweep, identities.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage, parameter
// or domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ioc/distribution.hpp"
#include "ioc/family.hpp"
#include "ioc/harness/config.hpp"
#include "ioc/harness/sweep.hpp"
#include "ioc/harness/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GridFlags {
    std::string config_path;
    std::vector<double> c_list;
    std::vector<double> n_list;
    std::string suites;
    int max_n = -1;
    int x_points = -1;
    double x_max = -1.0;
    double tol = -1.0;
    int workers = -1;
    std::string out_path;
    bool full = false;
};

void add_grid_flags(CLI::App* cmd, GridFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON configuration file; flags take precedence");
    cmd->add_option("--c", f.c_list, "comma-separated c values")->delimiter(',');
    cmd->add_option("--n", f.n_list, "comma-separated n values (c<0 keeps integer l = -n/c)")
        ->delimiter(',');
    cmd->add_option("--x-points", f.x_points, "grid points per domain including both ends");
    cmd->add_option("--x-max", f.x_max, "right end of the grid for c >= 0");
    cmd->add_option("--workers", f.workers, "worker threads (0 = hardware concurrency)");
    cmd->add_option("--out", f.out_path, "output path");
}

ioc::harness::SweepConfig build_config(const GridFlags& f) {
    ioc::harness::SweepConfig cfg;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) {
            throw ioc::ParameterError("cannot read config file '" + f.config_path + "'");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        ioc::harness::apply_json_config(cfg, ss.str());
    }
    if (!f.c_list.empty()) cfg.c_list = f.c_list;
    if (!f.n_list.empty()) {
        cfg.n_list = f.n_list;
        cfg.n_explicit = true;
    }
    if (!f.suites.empty()) cfg.suites = ioc::harness::parse_suite_list(f.suites);
    if (f.max_n >= 0) cfg.identities_max_n = f.max_n;
    if (f.x_points >= 0) cfg.x_points = f.x_points;
    if (f.x_max > 0.0) cfg.x_max = f.x_max;
    if (f.tol >= 0.0) cfg.tol_override = f.tol;
    if (f.workers >= 0) cfg.workers = f.workers;
    cfg.validate();
    return cfg;
}

int emit_report(const ioc::harness::SuiteReport& report, const GridFlags& f) {
    if (!f.out_path.empty()) {
        std::ofstream out(f.out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << f.out_path << "'\n";
            return kExitUsage;
        }
        out << report.to_json().dump(1) << '\n';
        if (!out) {
            std::cerr << "error: failed writing '" << f.out_path << "'\n";
            return kExitUsage;
        }
    }
    std::cout << report.to_json(!f.full).dump(1) << '\n';
    return report.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index of coincidence: evaluation, bounds and verification"};
    app.require_subcommand(1);

    double c = 0.0;
    double n = 0.0;
    double x = 0.0;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate S, derivatives, entropies and bounds at one point");
    eval_cmd->add_option("--c", c, "family parameter c")->required();
    eval_cmd->add_option("--n", n, "family parameter n")->required();
    eval_cmd->add_option("--x", x, "point in I_c")->required();

    GridFlags verify_flags;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites over a grid");
    add_grid_flags(verify_cmd, verify_flags);
    verify_cmd->add_option("--suites", verify_flags.suites, "comma-separated suites or 'all'");
    verify_cmd->add_option("--max-n", verify_flags.max_n, "largest n for the identity triangle");
    verify_cmd->add_option("--tol", verify_flags.tol, "replace every check tolerance");
    verify_cmd->add_flag("--full", verify_flags.full, "print every record, not only failures");

    GridFlags sweep_flags;
    auto* sweep_cmd = app.add_subcommand("sweep", "write a CSV of values and bounds over a grid");
    add_grid_flags(sweep_cmd, sweep_flags);

    GridFlags ident_flags;
    auto* ident_cmd = app.add_subcommand("identities", "check the binomial-sum identities exactly");
    ident_cmd->add_option("--max-n", ident_flags.max_n, "largest n (default 120)");
    ident_cmd->add_option("--out", ident_flags.out_path, "write the full JSON report here");
    ident_cmd->add_option("--workers", ident_flags.workers, "worker threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*eval_cmd) {
            const ioc::FamilyParams params(n, c);
            std::cout << ioc::harness::evaluate_point(params, x).dump(1) << '\n';
            return kExitPass;
        }
        if (*verify_cmd) {
            return emit_report(ioc::harness::run_verify(build_config(verify_flags)), verify_flags);
        }
        if (*ident_cmd) {
            ident_flags.suites = "identities";
            return emit_report(ioc::harness::run_verify(build_config(ident_flags)), ident_flags);
        }
        if (*sweep_cmd) {
            const ioc::harness::SweepConfig cfg = build_config(sweep_flags);
            if (sweep_flags.out_path.empty()) {
                ioc::harness::write_sweep_csv(cfg, std::cout);
                return kExitPass;
            }
            std::ofstream out(sweep_flags.out_path);
            if (!out) {
                std::cerr << "error: cannot write '" << sweep_flags.out_path << "'\n";
                return kExitUsage;
            }
            ioc::harness::write_sweep_csv(cfg, out);
            if (!out) {
                std::cerr << "error: failed writing '" << sweep_flags.out_path << "'\n";
                return kExitUsage;
            }
            return kExitPass;
        }
    } catch (const ioc::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ioc::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
