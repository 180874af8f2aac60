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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

namespace qic {

namespace {

std::string at_line(int line) { return line > 0 ? " (line " + std::to_string(line) + ")" : std::string(); }

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

struct LineReader {
    std::istream& in;
    int line = 0;

    std::string next(const char* what) {
        std::string s;
        while (std::getline(in, s)) {
            ++line;
            s = trim(s);
            if (!s.empty()) return s;
        }
        throw QicError(ErrorKind::parse, std::string("unexpected end of input, expected ") + what + at_line(line + 1));
    }
};

std::string expect_prefix(const std::string& s, std::string_view prefix, int line) {
    if (s.rfind(prefix, 0) != 0) {
        throw QicError(ErrorKind::parse, "expected '" + std::string(prefix) + "'" + at_line(line));
    }
    return trim(std::string_view(s).substr(prefix.size()));
}

int parse_mode_count(const std::string& header, std::string_view keyword, int line) {
    const std::string rest = expect_prefix(header, keyword, line);
    const std::string value = expect_prefix(rest, "N=", line);
    char* end = nullptr;
    const long n = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0' || n < 1) {
        throw QicError(ErrorKind::parse, "bad mode count '" + value + "'" + at_line(line));
    }
    return static_cast<int>(n);
}

RVector to_vector(const std::vector<double>& xs) { return Eigen::Map<const RVector>(xs.data(), static_cast<Eigen::Index>(xs.size())); }

void write_list(std::ostream& out, const RVector& xs) {
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << format_double(xs(i));
    }
}

ModePair read_mode_pair_body(LineReader& r) {
    const std::string header = r.next("mode pair header");
    const int n = parse_mode_count(header, "modepair", r.line);
    ModePair pair;
    const std::string v_line = r.next("v row");
    auto v = parse_real_list(expect_prefix(v_line, "v:", r.line), r.line);
    if (v.size() != static_cast<size_t>(2 * n)) throw QicError(ErrorKind::parse, "v row needs 2N entries" + at_line(r.line));
    const std::string u_line = r.next("u row");
    auto u = parse_real_list(expect_prefix(u_line, "u:", r.line), r.line);
    if (u.size() != static_cast<size_t>(2 * n)) throw QicError(ErrorKind::parse, "u row needs 2N entries" + at_line(r.line));
    const std::string off_line = r.next("offsets row");
    auto off = parse_real_list(expect_prefix(off_line, "offsets:", r.line), r.line);
    if (off.size() != 2) throw QicError(ErrorKind::parse, "offsets row needs 2 entries" + at_line(r.line));
    pair.v = to_vector(v);
    pair.u = to_vector(u);
    pair.q_offset = off[0];
    pair.p_offset = off[1];
    return pair;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<double> parse_real_list(std::string_view text, int line) {
    std::vector<double> out;
    size_t pos = 0;
    while (true) {
        const size_t comma = text.find(',', pos);
        const std::string field = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (field.empty()) throw QicError(ErrorKind::parse, "empty numeric field" + at_line(line));
        char* end = nullptr;
        errno = 0;
        const double x = std::strtod(field.c_str(), &end);
        if (end == field.c_str() || *end != '\0' || errno == ERANGE) {
            throw QicError(ErrorKind::parse, "not a real number: '" + field + "'" + at_line(line));
        }
        out.push_back(x);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

GaussianRecord read_gaussian_record(std::istream& in) {
    LineReader r{in};
    const std::string header = r.next("state header");
    const int n = parse_mode_count(header, "gaussian", r.line);
    const int dim = 2 * n;
    GaussianRecord rec;
    const std::string mean_line = r.next("mean row");
    const auto mean = parse_real_list(expect_prefix(mean_line, "mean:", r.line), r.line);
    if (mean.size() != static_cast<size_t>(dim)) throw QicError(ErrorKind::parse, "mean row needs 2N entries" + at_line(r.line));
    rec.mean = to_vector(mean);
    rec.covariance.resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const std::string row_line = r.next("covariance row");
        const auto row = parse_real_list(row_line, r.line);
        if (row.size() != static_cast<size_t>(dim)) {
            throw QicError(ErrorKind::parse, "covariance row needs 2N entries" + at_line(r.line));
        }
        for (int j = 0; j < dim; ++j) rec.covariance(i, j) = row[static_cast<size_t>(j)];
    }
    return rec;
}

GaussianState read_gaussian_state(std::istream& in) {
    GaussianRecord rec = read_gaussian_record(in);
    return GaussianState(std::move(rec.mean), std::move(rec.covariance));
}

void write_gaussian_state(std::ostream& out, const GaussianState& state) {
    out << "gaussian N=" << state.n_modes() << '\n' << "mean: ";
    write_list(out, state.mean());
    out << '\n';
    for (Eigen::Index i = 0; i < state.covariance().rows(); ++i) {
        write_list(out, state.covariance().row(i).transpose());
        out << '\n';
    }
}

void write_mode_pair(std::ostream& out, const ModePair& pair) {
    out << "modepair N=" << pair.v.size() / 2 << "\nv: ";
    write_list(out, pair.v);
    out << "\nu: ";
    write_list(out, pair.u);
    out << "\noffsets: " << format_double(pair.q_offset) << ',' << format_double(pair.p_offset) << '\n';
}

ModePair read_mode_pair(std::istream& in) {
    LineReader r{in};
    return read_mode_pair_body(r);
}

void write_cv_swap(std::ostream& out, const CvSwapDescriptor& desc) {
    out << "cvswap strength=" << format_double(desc.strength) << '\n';
    write_mode_pair(out, desc.pair);
}

CvSwapDescriptor read_cv_swap(std::istream& in) {
    LineReader r{in};
    const std::string header = r.next("cvswap header");
    const std::string value = expect_prefix(expect_prefix(header, "cvswap", r.line), "strength=", r.line);
    const auto strength = parse_real_list(value, r.line);
    if (strength.size() != 1) throw QicError(ErrorKind::parse, "bad strength" + at_line(r.line));
    CvSwapDescriptor desc{read_mode_pair_body(r), strength[0]};
    return desc;
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), width_(header.size()) {
    row(header);
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_double(v));
    row(cells);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw QicError(ErrorKind::io, "CSV row width does not match the header");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

}  // namespace qic
