#include "kepler/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "kepler/analytic.hpp"
#include "kepler/checks.hpp"
#include "kepler/dynamics.hpp"
#include "kepler/errors.hpp"
#include "kepler/io.hpp"
#include "kepler/planets.hpp"

namespace kepler::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxEps = 0.99;  // closed form is ill-conditioned beyond

std::string eps_tag(double eps) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", eps);
    return buf;
}

std::vector<double> sample_grid(double lo, double hi, int samples) {
    std::vector<double> grid(samples);
    for (int i = 0; i < samples; ++i) {
        grid[i] = lo + (hi - lo) * i / (samples - 1);
    }
    return grid;
}

bool validate_eps_list(const std::vector<double>& eps_list, std::ostream& err,
                       const char* command) {
    if (eps_list.empty()) {
        err << command << ": at least one eccentricity is required\n";
        return false;
    }
    for (const double eps : eps_list) {
        if (!(eps >= 0.0 && eps <= kMaxEps)) {
            err << command << ": eps " << eps << " outside supported range [0, "
                << kMaxEps << "]\n";
            return false;
        }
    }
    return true;
}

void write_curve(const std::filesystem::path& base, Format format,
                 const std::vector<double>& thetas, const std::vector<double>& values) {
    if (format == Format::csv) {
        io::write_curve_csv(base.string() + ".csv", thetas, values);
    } else {
        io::write_curve_svg(base.string() + ".svg", thetas, values);
    }
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const dynamics::Trajectory& traj, double mu) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "t,x,y,z,vx,vy,vz,A,B,C,h\n";
    for (const dynamics::BodyState& s : traj.states) {
        const dynamics::FirstIntegrals fi = dynamics::first_integrals(s, mu);
        out << io::format_sig17(s.t) << ',' << io::format_sig17(s.pos.x) << ','
            << io::format_sig17(s.pos.y) << ',' << io::format_sig17(s.pos.z) << ','
            << io::format_sig17(s.vel.x) << ',' << io::format_sig17(s.vel.y) << ','
            << io::format_sig17(s.vel.z) << ',' << io::format_sig17(fi.A) << ','
            << io::format_sig17(fi.B) << ',' << io::format_sig17(fi.C) << ','
            << io::format_sig17(fi.h) << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace

int cmd_figures(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!validate_eps_list(cfg.eps_list, err, "figures")) {
        return kExitUsage;
    }
    if (cfg.samples < 2) {
        err << "figures: --samples must be at least 2\n";
        return kExitUsage;
    }
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec && !std::filesystem::is_directory(cfg.out_dir)) {
        err << "figures: cannot create output directory " << cfg.out_dir << ": "
            << ec.message() << '\n';
        return kExitUsage;
    }

    const std::vector<double> long_grid = sample_grid(0.0, 3.0 * kPi, cfg.samples);
    const std::vector<double> rev_grid = sample_grid(0.0, 2.0 * kPi, cfg.samples);
    try {
        for (const double eps : cfg.eps_list) {
            std::vector<double> density(cfg.samples), integral(cfg.samples), speed(cfg.samples);
            const analytic::SpeedProfile profile(eps, 1.0);
            for (int i = 0; i < cfg.samples; ++i) {
                density[i] = analytic::theta_density(long_grid[i], eps);
                integral[i] = analytic::antiderivative_continuous(long_grid[i], eps);
                speed[i] = analytic::speed_from_angle(rev_grid[i], profile);
            }
            const std::string tag = eps_tag(eps);
            write_curve(cfg.out_dir / ("theta_density_" + tag), cfg.format, long_grid, density);
            write_curve(cfg.out_dir / ("time_law_" + tag), cfg.format, long_grid, integral);
            write_curve(cfg.out_dir / ("speed_" + tag), cfg.format, rev_grid, speed);
            out << "wrote theta_density_" << tag << ", time_law_" << tag << ", speed_" << tag
                << " (" << cfg.samples << " samples) to " << cfg.out_dir.string() << '\n';
        }
    } catch (const std::runtime_error& e) {
        err << "figures: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_propagate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.have_state) {
        err << "propagate: --state x,y,z,vx,vy,vz is required\n";
        return kExitUsage;
    }
    if (!(cfg.dt > 0.0)) {
        err << "propagate: --dt must be positive\n";
        return kExitUsage;
    }
    const dynamics::BodyState s0{{cfg.state[0], cfg.state[1], cfg.state[2]},
                                 {cfg.state[3], cfg.state[4], cfg.state[5]},
                                 0.0};
    try {
        const dynamics::OrbitElements el = dynamics::elements_from_state(s0, cfg.mu);
        const double T = dynamics::period(el);
        const int steps =
            cfg.steps > 0 ? cfg.steps : static_cast<int>(std::ceil(T / cfg.dt));
        const dynamics::Trajectory traj = dynamics::propagate(s0, cfg.mu, cfg.dt, steps);

        const dynamics::FirstIntegrals fi0 = dynamics::first_integrals(s0, cfg.mu);
        const double n0 = std::sqrt(fi0.A * fi0.A + fi0.B * fi0.B + fi0.C * fi0.C);
        double drift = 0.0;
        for (const dynamics::BodyState& s : traj.states) {
            const dynamics::FirstIntegrals fi = dynamics::first_integrals(s, cfg.mu);
            drift = std::max({drift, std::abs(fi.A - fi0.A) / n0, std::abs(fi.B - fi0.B) / n0,
                              std::abs(fi.C - fi0.C) / n0,
                              std::abs(fi.h - fi0.h) / std::abs(fi0.h)});
        }
        const double residual = dynamics::plane_residual(traj, fi0);

        write_trajectory_csv(cfg.out_file, traj, cfg.mu);

        out << "trajectory: " << cfg.out_file.string() << " (" << traj.states.size()
            << " states, dt=" << io::format_sig17(cfg.dt) << ")\n";
        out << "elements: p=" << io::format_sig17(el.p) << " eps=" << io::format_sig17(el.eps)
            << " k=" << io::format_sig17(el.k) << " sense=" << (el.sense > 0 ? "+1" : "-1")
            << " C=" << io::format_sig17(el.C) << " h=" << io::format_sig17(el.h) << '\n';
        out << "period: " << io::format_sig17(T) << '\n';
        out << "max first-integral drift: " << io::format_sig17(drift) << '\n';
        out << "plane residual: " << io::format_sig17(residual) << '\n';
        return kExitOk;
    } catch (const SingularityError& e) {
        err << "propagate: singularity: " << e.what() << '\n';
        return kExitPhysics;
    } catch (const UnboundOrbitError& e) {
        err << "propagate: unbound orbit: " << e.what() << '\n';
        return kExitPhysics;
    } catch (const DegenerateOrbitError& e) {
        err << "propagate: degenerate orbit: " << e.what() << '\n';
        return kExitPhysics;
    } catch (const std::runtime_error& e) {
        err << "propagate: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    checks::CheckOptions opts;
    if (!cfg.eps_list.empty()) {
        if (!validate_eps_list(cfg.eps_list, err, "check")) {
            return kExitUsage;
        }
        opts.eps_grid = cfg.eps_list;
    }
    opts.seed = cfg.seed;
    opts.fail_inject = cfg.fail_inject;

    const std::vector<checks::CheckResult> results = checks::run_all(opts);
    std::size_t passed = 0;
    char line[160];
    for (const checks::CheckResult& r : results) {
        std::snprintf(line, sizeof line, "[%s] %-36s worst %10.3e  tol %8.1e",
                      r.pass ? "PASS" : "FAIL", r.name.c_str(), r.worst, r.tol);
        out << line << '\n';
        passed += r.pass ? 1 : 0;
    }
    out << "check: " << passed << '/' << results.size() << " invariant groups passed\n";
    return passed == results.size() ? kExitOk : kExitPhysics;
}

int cmd_planets(const RunConfig& cfg, std::ostream& out) {
    const auto& planets = solar::load_planets();
    if (cfg.csv) {
        out << "name,eccentricity,speed_ratio\n";
        for (const auto& p : planets) {
            char row[96];
            std::snprintf(row, sizeof row, "%s,%.8f,%s", std::string(p.name).c_str(), p.eps,
                          io::format_sig17(solar::planet_speed_ratio(p)).c_str());
            out << row << '\n';
        }
    } else {
        char row[96];
        std::snprintf(row, sizeof row, "%-8s  %-12s  %s", "name", "eccentricity", "speed_ratio");
        out << row << '\n';
        for (const auto& p : planets) {
            std::snprintf(row, sizeof row, "%-8s  %12.8f  %12.8f", std::string(p.name).c_str(),
                          p.eps, solar::planet_speed_ratio(p));
            out << row << '\n';
        }
    }
    return kExitOk;
}

}  // namespace kepler::cli
