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

#include "qic/text_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <functional>
#include <sstream>

#include "qic/svg_plot.hpp"
#include "test_util.hpp"

using namespace qic;
using namespace qic_test;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const QicError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no QicError thrown";
    return ErrorKind::internal_consistency;
}

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const QicError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(FormatDouble, round_trips_exactly) {
    auto rng = test_rng(50);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::ldexp(uni(rng), i % 200 - 100);
        const std::string s = format_double(x);
        EXPECT_EQ(std::strtod(s.c_str(), nullptr), x) << s;
    }
    EXPECT_EQ(format_double(0.25), "0.25");
    EXPECT_EQ(format_double(1.0), "1");
}

TEST(ParseRealList, values_and_errors) {
    EXPECT_EQ(parse_real_list("1, -2.5,3e-2"), (std::vector<double>{1, -2.5, 3e-2}));
    EXPECT_EQ(kind_of([] { parse_real_list("1,,2", 7); }), ErrorKind::parse);
    EXPECT_NE(message_of([] { parse_real_list("1,abc", 7); }).find("line 7"), std::string::npos);
}

TEST(GaussianRecord, round_trip) {
    auto rng = test_rng(51);
    auto s = GaussianState::random_pure(3, rng);
    std::stringstream buf;
    write_gaussian_state(buf, s);
    const std::string text = buf.str();
    EXPECT_EQ(text.rfind("gaussian N=3\nmean: ", 0), 0u);
    auto back = read_gaussian_state(buf);
    EXPECT_EQ(back.mean(), s.mean());
    EXPECT_EQ(back.covariance(), s.covariance());
}

TEST(GaussianRecord, reports_line_numbers) {
    std::stringstream bad("gaussian N=1\nmean: 0,0\n0.5,0\n0,zz\n");
    EXPECT_NE(message_of([&] { read_gaussian_record(bad); }).find("line 4"), std::string::npos);
    std::stringstream short_row("gaussian N=1\nmean: 0,0\n0.5\n0,0.5\n");
    EXPECT_NE(message_of([&] { read_gaussian_record(short_row); }).find("line 3"), std::string::npos);
    std::stringstream header("gauss N=1\n");
    EXPECT_EQ(kind_of([&] { read_gaussian_record(header); }), ErrorKind::parse);
    std::stringstream truncated("gaussian N=2\nmean: 0,0,0,0\n");
    EXPECT_EQ(kind_of([&] { read_gaussian_record(truncated); }), ErrorKind::parse);
    std::stringstream asym("gaussian N=1\nmean: 0,0\n0.5,0.001\n0,0.5\n");
    EXPECT_EQ(kind_of([&] { read_gaussian_state(asym); }), ErrorKind::invalid_state);
}

TEST(ModePairRecord, round_trip_and_cv_swap) {
    auto rng = test_rng(52);
    auto s = GaussianState::random_pure(2, rng);
    auto pair = conjugate_qic_vector(random_uniform_vector(4, -1, 1, rng), s);
    std::stringstream buf;
    write_mode_pair(buf, pair);
    auto back = read_mode_pair(buf);
    EXPECT_EQ(back.v, pair.v);
    EXPECT_EQ(back.u, pair.u);
    EXPECT_EQ(back.q_offset, pair.q_offset);
    EXPECT_EQ(back.p_offset, pair.p_offset);

    auto desc = cv_swap_generator(pair);
    std::stringstream sb;
    write_cv_swap(sb, desc);
    auto d2 = read_cv_swap(sb);
    EXPECT_EQ(d2.strength, desc.strength);
    EXPECT_EQ(d2.pair.u, desc.pair.u);
}

TEST(CsvWriter, layout) {
    std::stringstream buf;
    CsvWriter csv(buf, {"a", "b"});
    csv.row(std::vector<double>{0.1, -3});
    csv.row(std::vector<std::string>{"x", "y"});
    EXPECT_EQ(buf.str(), "a,b\n0.10000000000000001,-3\nx,y\n");
    EXPECT_THROW(csv.row(std::vector<double>{1}), QicError);
}

TEST(SvgPlot, deterministic_and_well_formed) {
    std::vector<PlotSeries> series{{"a", "#000", {1, 2, 3}, {0.5, -1, 2}}, {"b", "#f00", {1, 2, 3}, {0, 0, 0}}};
    std::stringstream x, y;
    write_svg_line_plot(x, "title", "site", series);
    write_svg_line_plot(y, "title", "site", series);
    EXPECT_EQ(x.str(), y.str());
    EXPECT_EQ(x.str().rfind("<svg", 0), 0u);
    EXPECT_NE(x.str().find("</svg>"), std::string::npos);
    EXPECT_NE(x.str().find("<polyline"), std::string::npos);
}
