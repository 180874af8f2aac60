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

#ifndef QIC_LINALG_HPP
#define QIC_LINALG_HPP

#include "qic/common.hpp"

namespace qic {

/// d^n for small non-negative n.
long long int_pow(int base, int exponent);

double max_abs(const CMatrix& m);
double max_abs(const RMatrix& m);

/// ||U^dagger U - I||_max.
double unitarity_residual(const CMatrix& u);
/// ||H - H^dagger||_max.
double hermiticity_residual(const CMatrix& h);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Applies `op` (d x d) to the most significant tensor factor of `vec`.
/// Amplitude index convention: i_1 d^{N-1} + ... + i_N, so the first site is the
/// slowest-varying index.
CVector apply_first_site(const CMatrix& op, const CVector& vec);

/// Reduced density matrix of the first d-dimensional factor of `vec`.
CMatrix reduced_first_site(const CVector& vec, int d);

/// Reduced density matrices of a bipartite vector of dimension dim_a * dim_b
/// (first factor slowest).
CMatrix reduced_left(const CVector& vec, long long dim_a);
CMatrix reduced_right(const CVector& vec, long long dim_a);

/// exp(-i theta h) for Hermitian h, via its eigendecomposition.
CMatrix unitary_from_hermitian(const CMatrix& h, double theta);

/// (1/2) sum |lambda_i(rho - sigma)|.
double trace_distance(const CMatrix& rho, const CMatrix& sigma);

/// <phi|rho|phi> for a unit vector phi.
double pure_fidelity(const CMatrix& rho, const CVector& phi);

/// Square unitary whose leading columns are the given orthonormal columns.
/// The remaining columns are obtained by Gram-Schmidt over the standard basis.
CMatrix complete_orthonormal_columns(const CMatrix& columns);

/// Multiplies `vec` by a phase so its first component with modulus above
/// `threshold * ||vec||_inf` is real and positive.
CVector fix_gauge_first_nonzero(const CVector& vec, double threshold = 1e-8);

}  // namespace qic

#endif
