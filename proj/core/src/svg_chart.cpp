#include "ismkit/svg_chart.hpp"

#include <cstdio>
#include <map>
#include <utility>
#include <vector>

namespace ismkit {

namespace {

// Fixed-point formatting keeps the output locale-independent and stable.
std::string num(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f", value);
    return buffer;
}

struct Layout {
    double left = 70, top = 40, width = 540, height = 540;
    double span = 1;

    double x(double dependence) const { return left + dependence / span * width; }
    double y(double driving) const { return top + height - driving / span * height; }
};

std::string text(double x, double y, const std::string& anchor, const std::string& cls,
                 const std::string& body) {
    return "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor +
           "\" class=\"" + cls + "\">" + body + "</text>\n";
}

std::string line(double x1, double y1, double x2, double y2, const std::string& cls) {
    return "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\" class=\"" + cls + "\"/>\n";
}

} // namespace

std::string micmac_svg(const QuadrantChart& chart) {
    Layout layout;
    layout.span = chart.axis_max > 0 ? static_cast<double>(chart.axis_max) : 1.0;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    svg += "  <style>\n"
           "    .axis { stroke: #333; stroke-width: 1; }\n"
           "    .tick { stroke: #999; stroke-width: 0.5; }\n"
           "    .cutoff { stroke: #c33; stroke-width: 1; stroke-dasharray: 6 3; }\n"
           "    .label { font: 12px sans-serif; fill: #333; }\n"
           "    .quadrant { font: 14px sans-serif; fill: #777; }\n"
           "    .title { font: 16px sans-serif; fill: #111; }\n"
           "    .point { fill: #1f5fa8; }\n"
           "  </style>\n";

    svg += text(320, 24, "middle", "title", "MICMAC classification");

    const double right = layout.left + layout.width;
    const double bottom = layout.top + layout.height;
    svg += line(layout.left, bottom, right, bottom, "axis");
    svg += line(layout.left, layout.top, layout.left, bottom, "axis");
    svg += text((layout.left + right) / 2, bottom + 40, "middle", "label", "dependence power");
    svg += "  <text x=\"" + num(layout.left - 45) + "\" y=\"" + num((layout.top + bottom) / 2) +
           "\" text-anchor=\"middle\" class=\"label\" transform=\"rotate(-90 " +
           num(layout.left - 45) + " " + num((layout.top + bottom) / 2) +
           ")\">driving power</text>\n";

    // Integer ticks; thin out when the axis is long.
    const std::size_t step = chart.axis_max > 20 ? (chart.axis_max + 19) / 20 : 1;
    for (std::size_t v = 0; v <= chart.axis_max; v += step) {
        double x = layout.x(static_cast<double>(v));
        double y = layout.y(static_cast<double>(v));
        svg += line(x, bottom, x, bottom + 5, "tick");
        svg += text(x, bottom + 18, "middle", "label", std::to_string(v));
        svg += line(layout.left - 5, y, layout.left, y, "tick");
        svg += text(layout.left - 10, y + 4, "end", "label", std::to_string(v));
    }

    svg += line(layout.x(chart.thresholds.dependence), layout.top,
                layout.x(chart.thresholds.dependence), bottom, "cutoff");
    svg += line(layout.left, layout.y(chart.thresholds.driving), right,
                layout.y(chart.thresholds.driving), "cutoff");

    svg += text(layout.left + 10, layout.top + 18, "start", "quadrant", "independent");
    svg += text(right - 10, layout.top + 18, "end", "quadrant", "linkage");
    svg += text(layout.left + 10, bottom - 8, "start", "quadrant", "autonomous");
    svg += text(right - 10, bottom - 8, "end", "quadrant", "dependent");

    // Points sharing a position are drawn once with a joint label.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>> grouped;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (const auto& p : chart.points) {
        auto key = std::make_pair(p.dependence, p.driving);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, grouped.size());
            grouped.push_back({key, p.id});
        } else {
            grouped[it->second].second += ", " + p.id;
        }
    }
    for (const auto& [position, label] : grouped) {
        double x = layout.x(static_cast<double>(position.first));
        double y = layout.y(static_cast<double>(position.second));
        svg += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"4\" class=\"point\"/>\n";
        svg += text(x + 6, y - 6, "start", "label", label);
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace ismkit
