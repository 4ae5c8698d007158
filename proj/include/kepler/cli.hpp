#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace kepler::cli {

enum class Command { figures, propagate, check, planets };
enum class Format { csv, svg };

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPhysics = 1;  // invariant or physics failure
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::figures;
    std::vector<double> eps_list;
    int samples = 1000;
    double dt = 1e-4;
    int steps = 0;  // 0: cover one full period
    double mu = 1.0;
    std::filesystem::path out_dir = ".";
    Format format = Format::csv;

    // propagate
    std::array<double, 6> state{};  // x, y, z, vx, vy, vz
    bool have_state = false;
    std::filesystem::path out_file = "trajectory.csv";

    // check
    std::uint64_t seed = 12345;
    bool fail_inject = false;

    // planets
    bool csv = false;
};

/// Writes theta-density, time-law and speed curves per eccentricity:
/// theta_density_<eps>, time_law_<eps> (both over [0, 3 pi]) and
/// speed_<eps> (over [0, 2 pi]), as CSV or SVG files in out_dir.
int cmd_figures(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Propagates cfg.state, writes the trajectory CSV
/// (t,x,y,z,vx,vy,vz,A,B,C,h) and prints a summary of the recovered
/// elements, period, first-integral drift and plane residual.
int cmd_propagate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Runs the library invariant suite; one pass/fail line per group.
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Prints the planet eccentricity table with apsidal speed ratios.
int cmd_planets(const RunConfig& cfg, std::ostream& out);

}  // namespace kepler::cli
