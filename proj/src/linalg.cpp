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

#include "qic/linalg.hpp"

#include <cmath>

namespace qic {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_dimension: return "invalid-dimension";
        case ErrorKind::invalid_unitary: return "invalid-unitary";
        case ErrorKind::invalid_state: return "invalid-state";
        case ErrorKind::no_environment: return "no-environment";
        case ErrorKind::contract_violation: return "contract-violation";
        case ErrorKind::internal_consistency: return "internal-consistency";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::degenerate_variance: return "degenerate-variance";
        case ErrorKind::unphysical_mode: return "unphysical-mode";
        case ErrorKind::numerical_failure: return "numerical-failure";
        case ErrorKind::ill_conditioned: return "ill-conditioned";
        case ErrorKind::parse: return "parse";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

long long int_pow(int base, int exponent) {
    long long r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const RMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double unitarity_residual(const CMatrix& u) {
    if (u.rows() != u.cols()) return INFINITY;
    return max_abs(CMatrix(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())));
}

double hermiticity_residual(const CMatrix& h) {
    if (h.rows() != h.cols()) return INFINITY;
    return max_abs(CMatrix(h - h.adjoint()));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CVector apply_first_site(const CMatrix& op, const CVector& vec) {
    const Eigen::Index d = op.rows();
    const Eigen::Index rest = vec.size() / d;
    // Column-major view: view(r, i) = vec[i * rest + r].
    Eigen::Map<const CMatrix> view(vec.data(), rest, d);
    CVector out(vec.size());
    Eigen::Map<CMatrix> out_view(out.data(), rest, d);
    out_view.noalias() = view * op.transpose();
    return out;
}

CMatrix reduced_left(const CVector& vec, long long dim_a) {
    const Eigen::Index rest = vec.size() / dim_a;
    Eigen::Map<const CMatrix> view(vec.data(), rest, dim_a);
    return view.transpose() * view.conjugate();
}

CMatrix reduced_right(const CVector& vec, long long dim_a) {
    const Eigen::Index rest = vec.size() / dim_a;
    Eigen::Map<const CMatrix> view(vec.data(), rest, dim_a);
    return view * view.adjoint();
}

CMatrix reduced_first_site(const CVector& vec, int d) { return reduced_left(vec, d); }

CMatrix unitary_from_hermitian(const CMatrix& h, double theta) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const RVector& ev = es.eigenvalues();
    CVector phases(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) phases(i) = std::exp(cplx(0.0, -theta * ev(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_distance(const CMatrix& rho, const CMatrix& sigma) {
    CMatrix diff = rho - sigma;
    diff = 0.5 * (diff + diff.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double pure_fidelity(const CMatrix& rho, const CVector& phi) {
    return std::real(phi.dot(rho * phi));
}

CMatrix complete_orthonormal_columns(const CMatrix& columns) {
    const Eigen::Index dim = columns.rows();
    CMatrix out(dim, dim);
    Eigen::Index filled = columns.cols();
    out.leftCols(filled) = columns;
    for (Eigen::Index e = 0; e < dim && filled < dim; ++e) {
        CVector candidate = CVector::Unit(dim, e);
        // Two passes of classical Gram-Schmidt keep the completion orthonormal to
        // machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index k = 0; k < filled; ++k) {
                candidate -= out.col(k) * out.col(k).dot(candidate);
            }
        }
        const double norm = candidate.norm();
        if (norm > 1e-6) out.col(filled++) = candidate / norm;
    }
    return out;
}

CVector fix_gauge_first_nonzero(const CVector& vec, double threshold) {
    const double scale = vec.cwiseAbs().maxCoeff();
    if (scale == 0.0) return vec;
    for (Eigen::Index i = 0; i < vec.size(); ++i) {
        const double mag = std::abs(vec(i));
        if (mag > threshold * scale) return vec * (std::conj(vec(i)) / mag);
    }
    return vec;
}

}  // namespace qic
