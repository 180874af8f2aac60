// Copyright 2026 The QIC Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qic/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace qic {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string tick(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_svg_line_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                         const std::vector<PlotSeries>& series) {
    constexpr double width = 720, height = 440;
    constexpr double left = 70, right = 170, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        for (double x : s.x) x_min = std::min(x_min, x), x_max = std::max(x_max, x);
        for (double y : s.y) y_min = std::min(y_min, y), y_max = std::max(y_max, y);
    }
    if (!std::isfinite(x_min)) x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    if (x_max == x_min) x_max = x_min + 1;
    y_min = std::min(y_min, 0.0);
    y_max = std::max(y_max, 0.0);
    if (y_max == y_min) y_max = y_min + 1;
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"15\">" << escape(title) << "</text>\n";
    out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(plot_w) << "\" height=\""
        << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(left + plot_w) << "\" y2=\""
        << num(py(0)) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    const auto label = [&](double x, double y, const std::string& text, const char* anchor) {
        out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" text-anchor=\"" << anchor
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(text) << "</text>\n";
    };
    label(left, top + plot_h + 16, tick(x_min), "middle");
    label(left + plot_w, top + plot_h + 16, tick(x_max), "middle");
    label(left - 6, top + 4, tick(y_max), "end");
    label(left - 6, top + plot_h, tick(y_min), "end");
    label(left - 6, py(0) + 4, "0", "end");
    label(left + plot_w / 2, height - 12, x_label, "middle");

    for (size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        const size_t n = std::min(s.x.size(), s.y.size());
        for (size_t i = 0; i < n; ++i) out << (i ? " " : "") << num(px(s.x[i])) << ',' << num(py(s.y[i]));
        out << "\"/>\n";
        for (size_t i = 0; i < n; ++i) {
            out << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"2.2\" fill=\""
                << s.color << "\"/>\n";
        }
        const double ly = top + 14 + 18 * static_cast<double>(k);
        out << "<line x1=\"" << num(left + plot_w + 14) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
            << num(left + plot_w + 38) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
        label(left + plot_w + 44, ly, s.label, "start");
    }
    out << "</svg>\n";
}

}  // namespace qic
