#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "kepler/cli.hpp"

int main(int argc, char** argv) {
    using kepler::cli::RunConfig;

    CLI::App app{"kepler: two-body orbit propagation, the analytic time law along the "
                 "ellipse, and cross-checked invariant suites"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<double> state_values;
    std::string format = "csv";

    CLI::App* figures =
        app.add_subcommand("figures", "emit theta-density, time-law and speed curves");
    figures->add_option("--eps", cfg.eps_list, "eccentricities (comma separated)")
        ->required()
        ->delimiter(',');
    figures->add_option("--samples", cfg.samples, "samples per curve");
    figures->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "svg"}));
    figures->add_option("--out", cfg.out_dir, "output directory");

    CLI::App* propagate = app.add_subcommand("propagate", "integrate an orbit and recover "
                                                          "its elements");
    propagate->add_option("--state", state_values, "initial state x,y,z,vx,vy,vz")
        ->required()
        ->delimiter(',');
    propagate->add_option("--mu", cfg.mu, "gravitational parameter");
    propagate->add_option("--dt", cfg.dt, "time step");
    propagate->add_option("--steps", cfg.steps, "step count (default: one period)");
    propagate->add_option("--out", cfg.out_file, "trajectory CSV path");

    CLI::App* check = app.add_subcommand("check", "run the invariant suite");
    check->add_option("--eps", cfg.eps_list, "eccentricity grid")->delimiter(',');
    check->add_option("--seed", cfg.seed, "random seed");
    check->add_flag("--fail-inject", cfg.fail_inject, "inject a fault (harness self-test)");

    CLI::App* planets = app.add_subcommand("planets", "print the planet eccentricity table");
    planets->add_flag("--csv", cfg.csv, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kepler::cli::kExitUsage;
    }

    if (figures->parsed()) {
        cfg.command = kepler::cli::Command::figures;
        cfg.format = format == "svg" ? kepler::cli::Format::svg : kepler::cli::Format::csv;
        return kepler::cli::cmd_figures(cfg, std::cout, std::cerr);
    }
    if (propagate->parsed()) {
        cfg.command = kepler::cli::Command::propagate;
        if (state_values.size() != 6) {
            std::cerr << "propagate: --state needs exactly 6 values (x,y,z,vx,vy,vz)\n";
            return kepler::cli::kExitUsage;
        }
        std::copy(state_values.begin(), state_values.end(), cfg.state.begin());
        cfg.have_state = true;
        return kepler::cli::cmd_propagate(cfg, std::cout, std::cerr);
    }
    if (check->parsed()) {
        cfg.command = kepler::cli::Command::check;
        return kepler::cli::cmd_check(cfg, std::cout, std::cerr);
    }
    cfg.command = kepler::cli::Command::planets;
    return kepler::cli::cmd_planets(cfg, std::cout);
}
