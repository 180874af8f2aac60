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

#ifndef QIC_TESTS_TEST_UTIL_HPP
#define QIC_TESTS_TEST_UTIL_HPP

#include <complex>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "qic/common.hpp"
#include "qic/random.hpp"

namespace qic_test {

using qic::cplx;
using qic::CMatrix;
using qic::CVector;
using qic::RMatrix;
using qic::RVector;

inline constexpr cplx kI{0.0, 1.0};

inline CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

inline CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

/// Textbook Gell-Mann matrices lambda_1 .. lambda_8.
inline std::vector<CMatrix> gell_mann() {
    std::vector<CMatrix> l(8, CMatrix::Zero(3, 3));
    l[0](0, 1) = l[0](1, 0) = 1;
    l[1](0, 1) = -kI;
    l[1](1, 0) = kI;
    l[2](0, 0) = 1;
    l[2](1, 1) = -1;
    l[3](0, 2) = l[3](2, 0) = 1;
    l[4](0, 2) = -kI;
    l[4](2, 0) = kI;
    l[5](1, 2) = l[5](2, 1) = 1;
    l[6](1, 2) = -kI;
    l[6](2, 1) = kI;
    l[7](0, 0) = l[7](1, 1) = 1.0 / std::sqrt(3.0);
    l[7](2, 2) = -2.0 / std::sqrt(3.0);
    return l;
}

/// Element-by-element Kronecker product.
inline CMatrix kron_loops(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

/// Partial trace over the second factor of |v><v| on C^{da} (x) C^{db}, by
/// explicit index sums.
inline CMatrix trace_out_right(const CVector& v, Eigen::Index da) {
    const Eigen::Index db = v.size() / da;
    CMatrix rho = CMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            for (Eigen::Index k = 0; k < db; ++k) rho(i, j) += v(i * db + k) * std::conj(v(j * db + k));
    return rho;
}

/// Partial trace over the first factor.
inline CMatrix trace_out_left(const CVector& v, Eigen::Index da) {
    const Eigen::Index db = v.size() / da;
    CMatrix rho = CMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < db; ++i)
        for (Eigen::Index j = 0; j < db; ++j)
            for (Eigen::Index k = 0; k < da; ++k) rho(i, j) += v(k * db + i) * std::conj(v(k * db + j));
    return rho;
}

/// exp(-i theta h) by the Pade/scaling-squaring matrix exponential.
inline CMatrix expm_minus_i(const CMatrix& h, double theta) {
    const CMatrix x = (-kI * theta) * h;
    return x.exp();
}

inline double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }
inline double max_diff_r(const RMatrix& a, const RMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline qic::Rng test_rng(std::uint64_t salt = 0) { return qic::Rng(0x5eed1234ULL + salt); }

}  // namespace qic_test

#endif
