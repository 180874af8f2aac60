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

#ifndef QIC_SVG_PLOT_HPP
#define QIC_SVG_PLOT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qic {

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal self-contained SVG line plot: axes with min/max tick labels, one
/// polyline with point markers per series, and a legend. Output depends only on
/// the inputs, so it is byte-stable.
void write_svg_line_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                         const std::vector<PlotSeries>& series);

}  // namespace qic

#endif
