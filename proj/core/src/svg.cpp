#include "rado/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rado {

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_log_x_plot(const std::vector<PlotPoint>& points, const std::string& title,
                              const std::string& x_label, const std::string& y_label)
{
    double lo = 0, hi = 1;
    if (!points.empty()) {
        lo = std::floor(std::log10(std::max(1.0, points.front().x)));
        hi = std::ceil(std::log10(std::max(1.0, points.back().x)));
        for (const auto& p : points) {
            lo = std::min(lo, std::floor(std::log10(std::max(1.0, p.x))));
            hi = std::max(hi, std::ceil(std::log10(std::max(1.0, p.x))));
        }
        if (hi <= lo)
            hi = lo + 1;
    }
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (std::log10(std::max(1.0, x)) - lo) / (hi - lo) * pw; };
    auto sy = [&](double y) { return kTop + (1.0 - std::clamp(y, 0.0, 1.0)) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
      << "</text>\n";
    o << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\""
      << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int d = static_cast<int>(lo); d <= static_cast<int>(hi); ++d) {
        const double x = kLeft + (d - lo) / (hi - lo) * pw;
        o << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(x) << "\" y2=\""
          << fmt(kTop + ph) << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + ph + 18) << "\" text-anchor=\"middle\">10^" << d
          << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double y = i / 4.0;
        o << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(sy(y)) << "\" x2=\"" << fmt(kLeft + pw) << "\" y2=\""
          << fmt(sy(y)) << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(sy(y) + 4) << "\" text-anchor=\"end\">" << fmt(y)
          << "</text>\n";
    }
    o << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 15)
      << "\" text-anchor=\"middle\">" << escape(x_label) << " (log scale)</text>\n";
    o << "<text x=\"18\" y=\"" << fmt(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << fmt(kTop + ph / 2) << ")\">" << escape(y_label) << "</text>\n";
    if (!points.empty()) {
        o << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < points.size(); ++i)
            o << (i ? " " : "") << fmt(sx(points[i].x)) << "," << fmt(sy(points[i].y));
        o << "\"/>\n";
        for (const auto& p : points)
            o << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace rado
