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

#ifndef QIC_TEXT_IO_HPP
#define QIC_TEXT_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qic/common.hpp"
#include "qic/gaussian_cv.hpp"

namespace qic {

/// Shortest round-trip-safe decimal text: printf("%.17g").
std::string format_double(double x);

/// Comma-separated reals; throws parse error mentioning `line` on bad input.
std::vector<double> parse_real_list(std::string_view text, int line = 0);

/// Raw contents of a state file, before any physical validation.
///
///   gaussian N=<n>
///   mean: m_1,...,m_2N
///   <2N rows of 2N comma-separated covariance entries>
struct GaussianRecord {
    RVector mean;
    RMatrix covariance;
};

GaussianRecord read_gaussian_record(std::istream& in);
/// Reads a record and builds a GaussianState (symmetry checked, purity not).
GaussianState read_gaussian_state(std::istream& in);
void write_gaussian_state(std::ostream& out, const GaussianState& state);

///   modepair N=<n>
///   v: ...
///   u: ...
///   offsets: q_offset,p_offset
void write_mode_pair(std::ostream& out, const ModePair& pair);
ModePair read_mode_pair(std::istream& in);

///   cvswap strength=<s>
///   <mode pair record>
void write_cv_swap(std::ostream& out, const CvSwapDescriptor& desc);
CvSwapDescriptor read_cv_swap(std::istream& in);

/// UTF-8, comma-separated, LF endings, 17 significant digits.
class CsvWriter {
   public:
    CsvWriter(std::ostream& out, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);
    void row(const std::vector<std::string>& cells);

   private:
    std::ostream& out_;
    size_t width_;
};

}  // namespace qic

#endif
