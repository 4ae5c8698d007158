#pragma once

#include <cstdio>
#include <filesystem>
#include <span>
#include <string>

namespace kepler::io {

/// 17 significant digits: lossless decimal round-trip for doubles.
inline std::string format_sig17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Two-column curve file, header "theta,value". Throws std::runtime_error if
/// the file cannot be opened.
void write_curve_csv(const std::filesystem::path& path,
                     std::span<const double> thetas,
                     std::span<const double> values);

/// Minimal SVG rendering of a sampled curve: fixed canvas, axis frame, one
/// polyline, min/max annotations.
void write_curve_svg(const std::filesystem::path& path,
                     std::span<const double> xs,
                     std::span<const double> ys);

}  // namespace kepler::io
