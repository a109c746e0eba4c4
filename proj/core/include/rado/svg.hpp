#pragma once

#include <string>
#include <vector>

namespace rado {

struct PlotPoint {
    double x = 0;
    double y = 0;
};

// Static line plot with a base-10 logarithmic x axis and y in [0,1].
// Output depends only on the inputs, so it is byte-stable.
std::string render_log_x_plot(const std::vector<PlotPoint>& points, const std::string& title,
                              const std::string& x_label, const std::string& y_label);

}  // namespace rado
