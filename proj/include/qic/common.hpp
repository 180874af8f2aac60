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

#ifndef QIC_COMMON_HPP
#define QIC_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qic {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// path; `parallel` distributes the outer loop with OpenMP and must agree with
/// it to rounding.
enum class Exec { serial, parallel };

enum class ErrorKind {
    invalid_dimension,
    invalid_unitary,
    invalid_state,
    no_environment,
    contract_violation,
    internal_consistency,
    precondition,
    degenerate_variance,
    unphysical_mode,
    numerical_failure,
    ill_conditioned,
    parse,
    io,
};

const char* to_string(ErrorKind kind);

class QicError : public std::runtime_error {
   public:
    QicError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace qic

#endif
