#include "qmaze/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace qmaze::cli {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& xs,
                           const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("chart needs matching, nonempty series");

    constexpr double width = 880, height = 520;
    constexpr double left = 80, right = 860, top = 50, bottom = 460;

    double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
        xmin = std::min(xmin, xs[i]);
        xmax = std::max(xmax, xs[i]);
        ymin = std::min(ymin, ys[i]);
        ymax = std::max(ymax, ys[i]);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (right - left); };
    const auto py = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
           fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt((left + right) / 2) +
           "\" y=\"28\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\">" +
           title + "</text>\n";

    // axes
    svg += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(bottom) + "\" x2=\"" + fmt(right) +
           "\" y2=\"" + fmt(bottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(left) + "\" y1=\"" + fmt(top) + "\" x2=\"" + fmt(left) +
           "\" y2=\"" + fmt(bottom) + "\" stroke=\"black\"/>\n";

    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / ticks;
        const double fy = ymin + (ymax - ymin) * i / ticks;
        const double tx = px(fx), ty = py(fy);
        svg += "<line x1=\"" + fmt(tx) + "\" y1=\"" + fmt(bottom) + "\" x2=\"" + fmt(tx) +
               "\" y2=\"" + fmt(bottom + 6) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(tx) + "\" y=\"" + fmt(bottom + 22) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               fmt(fx) + "</text>\n";
        svg += "<line x1=\"" + fmt(left - 6) + "\" y1=\"" + fmt(ty) + "\" x2=\"" + fmt(left) +
               "\" y2=\"" + fmt(ty) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt(left - 10) + "\" y=\"" + fmt(ty + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" + fmt(fy) +
               "</text>\n";
    }
    svg += "<text x=\"" + fmt((left + right) / 2) + "\" y=\"" + fmt(height - 14) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" + x_label +
           "</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt((top + bottom) / 2) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           fmt((top + bottom) / 2) + ")\">" + y_label + "</text>\n";

    svg += "<polyline fill=\"none\" stroke=\"#2a6fb0\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) svg += ' ';
        svg += fmt(px(xs[i])) + "," + fmt(py(ys[i]));
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

} // namespace qmaze::cli
