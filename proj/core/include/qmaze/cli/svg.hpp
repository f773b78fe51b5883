#pragma once

#include <string>
#include <vector>

namespace qmaze::cli {

// Hand-written static SVG line chart: axes, ticks, labels, one polyline.
// Output contains no timestamps, so identical data gives identical bytes.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& xs,
                           const std::vector<double>& ys);

} // namespace qmaze::cli
