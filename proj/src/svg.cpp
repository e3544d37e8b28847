#include "ifslab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <vector>

namespace ifslab {

namespace {

const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string fmt_coord(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const PointCloud& cloud, const SvgStyle& style) {
    double min_x = cloud.points[0].x, max_x = cloud.points[0].x;
    double min_y = cloud.points[0].y, max_y = cloud.points[0].y;
    for (const Point2& p : cloud.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span_x = std::max(max_x - min_x, 1e-12);
    const double span_y = std::max(max_y - min_y, 1e-12);
    const double plot_w = style.width - 2.0 * style.margin;
    const double plot_h = style.height - 2.0 * style.margin;
    const double scale = std::min(plot_w / span_x, plot_h / span_y);
    const double off_x = style.margin + 0.5 * (plot_w - scale * span_x);
    const double off_y = style.margin + 0.5 * (plot_h - scale * span_y);

    auto sx = [&](double x) { return off_x + (x - min_x) * scale; };
    auto sy = [&](double y) { return off_y + (max_y - y) * scale; };  // y up

    // Stable label -> color assignment: sorted unique labels, palette cycled.
    std::map<std::string, const char*> colors;
    if (cloud.has_labels()) {
        std::vector<std::string> unique(cloud.labels.begin(), cloud.labels.end());
        std::sort(unique.begin(), unique.end());
        unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
        for (std::size_t i = 0; i < unique.size(); ++i) {
            colors[unique[i]] = kPalette[i % kPaletteSize];
        }
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(style.width) +
           "\" height=\"" + fmt(style.height) + "\" viewBox=\"0 0 " +
           fmt(style.width) + " " + fmt(style.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<rect x=\"" + fmt(off_x) + "\" y=\"" + fmt(off_y) + "\" width=\"" +
           fmt(scale * span_x) + "\" height=\"" + fmt(scale * span_y) +
           "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + fmt(off_x) + "\" y=\"" + fmt(off_y + scale * span_y + 16.0) +
           "\" font-size=\"11\" fill=\"#444444\">(" + fmt_coord(min_x) + ", " +
           fmt_coord(min_y) + ")</text>\n";
    out += "<text x=\"" + fmt(off_x + scale * span_x) + "\" y=\"" + fmt(off_y - 6.0) +
           "\" font-size=\"11\" fill=\"#444444\" text-anchor=\"end\">(" +
           fmt_coord(max_x) + ", " + fmt_coord(max_y) + ")</text>\n";

    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const char* color = "#000000";
        if (cloud.has_labels()) {
            auto it = colors.find(cloud.labels[i]);
            if (it != colors.end()) color = it->second;
        }
        out += "<circle cx=\"" + fmt(sx(cloud.points[i].x)) + "\" cy=\"" +
               fmt(sy(cloud.points[i].y)) + "\" r=\"" + fmt(style.point_radius) +
               "\" fill=\"" + color + "\"/>\n";
    }

    if (style.legend && !colors.empty()) {
        double ly = 8.0;
        const double lx = 8.0;
        for (const auto& [label, color] : colors) {
            out += "<rect x=\"" + fmt(lx) + "\" y=\"" + fmt(ly) +
                   "\" width=\"10\" height=\"10\" fill=\"" + std::string(color) +
                   "\"/>\n";
            out += "<text x=\"" + fmt(lx + 14.0) + "\" y=\"" + fmt(ly + 9.0) +
                   "\" font-size=\"11\" fill=\"#222222\">" + label + "</text>\n";
            ly += 16.0;
            if (ly > style.height - style.margin) break;
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ifslab
