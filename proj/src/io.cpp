#include "kepler/io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace kepler::io {

namespace {

std::ofstream open_or_throw(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_curve_csv(const std::filesystem::path& path,
                     std::span<const double> thetas,
                     std::span<const double> values) {
    std::ofstream out = open_or_throw(path);
    out << "theta,value\n";
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        out << format_sig17(thetas[i]) << ',' << format_sig17(values[i]) << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

void write_curve_svg(const std::filesystem::path& path,
                     std::span<const double> xs,
                     std::span<const double> ys) {
    constexpr double kWidth = 720.0;
    constexpr double kHeight = 480.0;
    constexpr double kMargin = 48.0;

    const auto [x_min_it, x_max_it] = std::minmax_element(xs.begin(), xs.end());
    const auto [y_min_it, y_max_it] = std::minmax_element(ys.begin(), ys.end());
    const double x_min = *x_min_it, x_max = *x_max_it;
    const double y_min = *y_min_it, y_max = *y_max_it;
    const double x_span = x_max > x_min ? x_max - x_min : 1.0;
    const double y_span = y_max > y_min ? y_max - y_min : 1.0;

    const auto px = [&](double x) {
        return kMargin + (x - x_min) / x_span * (kWidth - 2.0 * kMargin);
    };
    const auto py = [&](double y) {
        return kHeight - kMargin - (y - y_min) / y_span * (kHeight - 2.0 * kMargin);
    };

    std::ofstream out = open_or_throw(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << kWidth << ' ' << kHeight << "\">\n";
    // Axis frame: left and bottom edges of the plot area.
    out << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << fmt_coord(px(xs[i])) << ',' << fmt_coord(py(ys[i]));
    }
    out << "\"/>\n";
    const std::size_t i_min = static_cast<std::size_t>(y_min_it - ys.begin());
    const std::size_t i_max = static_cast<std::size_t>(y_max_it - ys.begin());
    out << "  <text x=\"" << kMargin + 4 << "\" y=\"" << kMargin - 8 << "\" font-size=\"12\">max "
        << format_sig17(y_max) << " at " << format_sig17(xs[i_max]) << "</text>\n";
    out << "  <text x=\"" << kMargin + 4 << "\" y=\"" << kHeight - kMargin + 16
        << "\" font-size=\"12\">min " << format_sig17(y_min) << " at " << format_sig17(xs[i_min])
        << "</text>\n";
    out << "</svg>\n";
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace kepler::io
