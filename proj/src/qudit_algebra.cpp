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

#include "qic/qudit_algebra.hpp"

#include <cmath>
#include <string>

#include "qic/linalg.hpp"

namespace qic {

SuBasis::SuBasis(int d) : d_(d) {
    if (d < 2) throw QicError(ErrorKind::invalid_dimension, "su(d) basis needs d >= 2, got " + std::to_string(d));
    identity_ = CMatrix::Identity(d, d);
    const double scale = std::sqrt(d / 2.0);
    generators_.reserve(static_cast<size_t>(d * d - 1));
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix s = CMatrix::Zero(d, d);
            s(j, k) = scale;
            s(k, j) = scale;
            generators_.push_back(std::move(s));
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix a = CMatrix::Zero(d, d);
            a(j, k) = cplx(0.0, -scale);
            a(k, j) = cplx(0.0, scale);
            generators_.push_back(std::move(a));
        }
    }
    for (int l = 1; l < d; ++l) {
        CMatrix diag = CMatrix::Zero(d, d);
        const double norm = scale * std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) diag(j, j) = norm;
        diag(l, l) = -l * norm;
        generators_.push_back(std::move(diag));
    }
}

const CMatrix& SuBasis::extended(int mu) const {
    if (mu == 0) return identity_;
    return generators_.at(static_cast<size_t>(mu - 1));
}

std::vector<int> SuBasis::cartan_indices() const {
    std::vector<int> idx;
    for (int i = size() - (d_ - 1); i < size(); ++i) idx.push_back(i);
    return idx;
}

CVector SuBasis::coefficients(const CMatrix& h) const {
    CVector c(extended_size());
    for (int mu = 0; mu < extended_size(); ++mu) c(mu) = (extended(mu) * h).trace() / static_cast<double>(d_);
    return c;
}

SuBasis build_su_basis(int d) { return SuBasis(d); }

PureState::PureState(int num_sites, int local_dim, CVector amplitudes, double tol)
    : num_sites_(num_sites), local_dim_(local_dim), amplitudes_(std::move(amplitudes)) {
    if (local_dim < 2 || num_sites < 1) {
        throw QicError(ErrorKind::invalid_dimension, "pure state needs d >= 2 and N >= 1");
    }
    if (amplitudes_.size() != int_pow(local_dim, num_sites)) {
        throw QicError(ErrorKind::invalid_dimension, "amplitude count is not d^N");
    }
    const double err = std::abs(amplitudes_.norm() - 1.0);
    if (err > tol) throw QicError(ErrorKind::invalid_state, "state norm deviates from 1 by " + std::to_string(err));
}

PureState PureState::product(const std::vector<CVector>& factors) {
    if (factors.empty()) throw QicError(ErrorKind::invalid_dimension, "empty product state");
    const auto d = static_cast<int>(factors.front().size());
    CVector amps = CVector::Ones(1);
    for (const auto& f : factors) {
        if (f.size() != d) throw QicError(ErrorKind::invalid_dimension, "product factors differ in dimension");
        amps = kron(amps, f);
    }
    return PureState(static_cast<int>(factors.size()), d, amps / amps.norm());
}

PureState PureState::random(int num_sites, int local_dim, Rng& rng) {
    return PureState(num_sites, local_dim, random_unit_vector(int_pow(local_dim, num_sites), rng));
}

PureState PureState::normalized(int num_sites, int local_dim, CVector amplitudes) {
    const double n = amplitudes.norm();
    if (n == 0.0) throw QicError(ErrorKind::invalid_state, "zero vector cannot be normalized");
    return PureState(num_sites, local_dim, amplitudes / n);
}

HermitianOp::HermitianOp(CMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    const double err = hermiticity_residual(matrix_);
    if (!(err <= tol)) throw QicError(ErrorKind::precondition, "operator is not Hermitian (residual " + std::to_string(err) + ")");
}

CVector SchmidtDecomposition::reconstruct() const {
    CVector out = CVector::Zero(left.rows() * right.rows());
    for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
        out += coefficients(i) * kron(left.col(i), right.col(i));
    }
    return out;
}

CMatrix swap_operator(int d) {
    if (d < 2) throw QicError(ErrorKind::invalid_dimension, "swap needs d >= 2");
    CMatrix u = CMatrix::Zero(d * d, d * d);
    // |i><j| (x) |j><i| maps |j, i> to |i, j>.
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) u(i * d + j, j * d + i) = 1.0;
    }
    return u;
}

CMatrix swap_from_generators(const SuBasis& basis) {
    const int d = basis.dim();
    CMatrix u = CMatrix::Zero(d * d, d * d);
    for (int mu = 0; mu < basis.extended_size(); ++mu) u += kron(basis.extended(mu), basis.extended(mu));
    return u / static_cast<double>(d);
}

SchmidtDecomposition schmidt(const PureState& state) {
    if (state.num_sites() < 2) throw QicError(ErrorKind::no_environment, "Schmidt decomposition needs N >= 2");
    const int d = state.local_dim();
    const Eigen::Index rest = state.dim() / d;
    // coeff(i, r) = amplitude[i * rest + r].
    const CMatrix coeff = Eigen::Map<const CMatrix>(state.amplitudes().data(), rest, d).transpose();
    Eigen::JacobiSVD<CMatrix> svd(coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchmidtDecomposition out;
    out.coefficients = svd.singularValues().head(d);
    out.left = svd.matrixU();
    // coeff = U S V^dagger  =>  |Psi> = sum_k s_k |u_k> (x) conj(v_k).
    out.right = svd.matrixV().leftCols(d).conjugate();
    return out;
}

PureState apply_structured_unitary(const PureState& state, const CMatrix& u_first,
                                   const std::optional<CMatrix>& global_u) {
    const int d = state.local_dim();
    if (u_first.rows() != d || u_first.cols() != d) {
        throw QicError(ErrorKind::invalid_dimension, "local unitary must be d x d");
    }
    if (unitarity_residual(u_first) > 1e-8) throw QicError(ErrorKind::invalid_unitary, "local operator is not unitary");
    CVector v = state.amplitudes();
    if (global_u) {
        if (global_u->rows() != state.dim() || global_u->cols() != state.dim()) {
            throw QicError(ErrorKind::invalid_dimension, "global unitary does not match the state dimension");
        }
        if (unitarity_residual(*global_u) > 1e-8) throw QicError(ErrorKind::invalid_unitary, "global operator is not unitary");
        v = *global_u * v;
        v = apply_first_site(u_first, v);
        v = global_u->adjoint() * v;
    } else {
        v = apply_first_site(u_first, v);
    }
    return PureState(state.num_sites(), d, std::move(v), 1e-10);
}

CMatrix map_vector_unitary(const CVector& src, const CVector& dst) {
    if (src.size() != dst.size()) throw QicError(ErrorKind::invalid_dimension, "vectors differ in dimension");
    const Eigen::Index n = src.size();
    const cplx alpha = src.dot(dst);  // <src|dst>
    CVector e = dst - alpha * src;
    const double beta = e.norm();
    CMatrix v = CMatrix::Identity(n, n);
    if (beta < 1e-14) {
        // dst = alpha src with |alpha| = 1; alpha = -1 is the antipodal case.
        v += (alpha / std::abs(alpha) - 1.0) * src * src.adjoint();
        return v;
    }
    e /= beta;
    // Re-orthogonalize once against src for accuracy when beta is small.
    e -= src * src.dot(e);
    e /= e.norm();
    cplx a = src.dot(dst);
    double b = std::real(e.dot(dst));
    const double r = std::sqrt(std::norm(a) + b * b);
    a /= r;
    b /= r;
    CMatrix plane(n, 2);
    plane.col(0) = src;
    plane.col(1) = e;
    Eigen::Matrix2cd rot;
    rot << a, -b, b, std::conj(a);
    v -= plane * plane.adjoint();
    v += plane * rot * plane.adjoint();
    return v;
}

}  // namespace qic
