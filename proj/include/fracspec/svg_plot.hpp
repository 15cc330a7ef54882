#ifndef FRACSPEC_SVG_PLOT_HPP
#define FRACSPEC_SVG_PLOT_HPP

#include <string>
#include <vector>

namespace fracspec {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line plot: axes box, ticks, one polyline per series,
/// legend in the top-right corner.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<PlotSeries>& series);

}  // namespace fracspec

#endif
