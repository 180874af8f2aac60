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

#include "qic/gaussian_cv.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qic/linalg.hpp"

namespace qic {

RMatrix symplectic_form(int n_modes) {
    RMatrix omega = RMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

GaussianState::GaussianState(RVector mean, RMatrix covariance) : mean_(std::move(mean)), covariance_(std::move(covariance)) {
    if (mean_.size() == 0 || mean_.size() % 2 != 0) {
        throw QicError(ErrorKind::invalid_dimension, "first-moment vector must have even length 2N > 0");
    }
    if (covariance_.rows() != mean_.size() || covariance_.cols() != mean_.size()) {
        throw QicError(ErrorKind::invalid_dimension, "covariance must be 2N x 2N");
    }
    const double asym = symmetry_residual();
    if (asym >= 1e-12) {
        throw QicError(ErrorKind::invalid_state, "GaussianState symmetry violated: max |M - M^T| = " + std::to_string(asym));
    }
}

GaussianState GaussianState::pure(RVector mean, RMatrix covariance) {
    GaussianState s(std::move(mean), std::move(covariance));
    s.require_pure();
    return s;
}

GaussianState GaussianState::vacuum(int n_modes) {
    if (n_modes < 1) throw QicError(ErrorKind::invalid_dimension, "need at least one mode");
    return GaussianState(RVector::Zero(2 * n_modes), 0.5 * RMatrix::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState GaussianState::squeezed(double r) {
    RMatrix m = RMatrix::Zero(2, 2);
    m(0, 0) = 0.5 * std::exp(2.0 * r);
    m(1, 1) = 0.5 * std::exp(-2.0 * r);
    return GaussianState(RVector::Zero(2), std::move(m));
}

GaussianState GaussianState::two_mode_squeezed(double r) {
    const double c = 0.5 * std::cosh(2.0 * r);
    const double s = 0.5 * std::sinh(2.0 * r);
    RMatrix m = RMatrix::Zero(4, 4);
    m.diagonal().setConstant(c);
    m(0, 2) = m(2, 0) = s;
    m(1, 3) = m(3, 1) = -s;
    return GaussianState(RVector::Zero(4), std::move(m));
}

GaussianState GaussianState::random_pure(int n_modes, Rng& rng) {
    const int dim = 2 * n_modes;
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    RMatrix h(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) h(i, j) = h(j, i) = uni(rng);
    }
    const RMatrix omega = symplectic_form(n_modes);
    RMatrix generator = omega * h;
    const double norm = Eigen::JacobiSVD<RMatrix>(generator).singularValues()(0);
    if (norm > 2.0) generator *= 2.0 / norm;
    const RMatrix s = generator.exp();
    RMatrix m = 0.5 * s.transpose() * s;
    m = 0.5 * (m + m.transpose()).eval();
    RVector mean = random_uniform_vector(dim, -1.0, 1.0, rng);
    return pure(std::move(mean), std::move(m));
}

double GaussianState::symmetry_residual() const { return max_abs(RMatrix(covariance_ - covariance_.transpose())); }

double GaussianState::purity_residual() const {
    const RMatrix omega = symplectic_form(n_modes());
    return max_abs(RMatrix(covariance_ * omega * covariance_ - 0.25 * omega));
}

double GaussianState::uncertainty_min_eigenvalue() const {
    const RMatrix omega = symplectic_form(n_modes());
    const CMatrix h = covariance_.cast<cplx>() + cplx(0.0, 0.5) * omega.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void GaussianState::require_pure() const {
    const double res = purity_residual();
    if (!(res < kPurityTolerance)) {
        throw QicError(ErrorKind::invalid_state, "GaussianState purity violated: ||M Omega M - Omega/4||_max = " + std::to_string(res));
    }
    const double min_eig = uncertainty_min_eigenvalue();
    if (min_eig < -1e-9) {
        throw QicError(ErrorKind::invalid_state, "GaussianState uncertainty violated: min eig(M + i Omega/2) = " + std::to_string(min_eig));
    }
}

double ModePair::pairing() const {
    return v.dot(symplectic_form(static_cast<int>(v.size() / 2)) * u);
}

ModePair conjugate_qic_vector(const RVector& v, const GaussianState& state) {
    const RMatrix& m = state.covariance();
    if (v.size() != m.rows()) throw QicError(ErrorKind::invalid_dimension, "weighting vector must have length 2N");
    const double variance = v.dot(m * v);
    if (!(variance > 1e-14)) {
        throw QicError(ErrorKind::degenerate_variance, "v^T M v = " + std::to_string(variance) + " leaves no conjugate mode");
    }
    if (!state.is_pure()) {
        throw QicError(ErrorKind::precondition, "conjugate QIC construction needs a pure state (purity residual " +
                                                    std::to_string(state.purity_residual()) + ")");
    }
    const RMatrix omega = symplectic_form(state.n_modes());
    ModePair pair;
    pair.v = v;
    pair.u = -(omega * (m * v)) / variance;
    pair.q_offset = v.dot(state.mean());
    pair.p_offset = pair.u.dot(state.mean());
    return pair;
}

ModeCovariance mode_covariance(const ModePair& pair, const GaussianState& state) {
    const RMatrix& m = state.covariance();
    if (pair.v.size() != m.rows() || pair.u.size() != m.rows()) {
        throw QicError(ErrorKind::invalid_dimension, "mode pair does not match the state");
    }
    const RVector mv = m * pair.v;
    const RVector mu = m * pair.u;
    ModeCovariance out;
    const double off = 0.5 * (pair.v.dot(mu) + pair.u.dot(mv));
    out.m << pair.v.dot(mv), off, off, pair.u.dot(mu);
    return out;
}

double mode_entropy_from_g(double g) {
    if (g < 1e-8) return 0.0;
    // sqrt(1+g^2) ln((sqrt(1+g^2)+1)/g) + ln(g/2), rearranged to avoid the
    // cancellation between the two logarithms at small g.
    const double s = std::sqrt(1.0 + g * g);
    const double a = g * g / (s + 1.0);
    return a * std::log((s + 1.0) / g) + std::log1p(0.5 * a);
}

double mode_entropy(const ModeCovariance& m) {
    const double det = m.det();
    if (det < 0.25 - 1e-10) {
        throw QicError(ErrorKind::unphysical_mode, "mode covariance violates det m >= 1/4 (det = " + std::to_string(det) + ")");
    }
    return mode_entropy_from_g(std::sqrt(std::max(0.0, 4.0 * det - 1.0)));
}

GaussianState apply_shift_write(const GaussianState& state, const RVector& v, double theta) {
    if (v.size() != state.mean().size()) throw QicError(ErrorKind::invalid_dimension, "weighting vector must have length 2N");
    const RMatrix omega = symplectic_form(state.n_modes());
    return GaussianState(state.mean() + theta * (omega * v), state.covariance());
}

namespace {

MultiparamReport evaluate_conditions(std::span<const RVector> vs, const GaussianState& state) {
    const auto k = static_cast<Eigen::Index>(vs.size());
    const RMatrix omega = symplectic_form(state.n_modes());
    const RMatrix& m = state.covariance();
    MultiparamReport rep;
    rep.symplectic_products.resize(k, k);
    rep.covariance_products.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (vs[static_cast<size_t>(i)].size() != m.rows()) {
            throw QicError(ErrorKind::invalid_dimension, "weighting vector must have length 2N");
        }
    }
    rep.commuting = true;
    rep.independent = true;
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            const RVector& vi = vs[static_cast<size_t>(i)];
            const RVector& vj = vs[static_cast<size_t>(j)];
            rep.symplectic_products(i, j) = vi.dot(omega * vj);
            rep.covariance_products(i, j) = vi.dot(m * vj);
            if (i < j) {
                rep.commuting = rep.commuting && std::abs(rep.symplectic_products(i, j)) < 1e-10;
                rep.independent = rep.independent && std::abs(rep.covariance_products(i, j)) < 1e-10;
            }
        }
    }
    if (rep.independent) {
        rep.cross_pairings.resize(k, k);
        for (const auto& v : vs) rep.conjugates.push_back(conjugate_qic_vector(v, state));
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) {
                rep.cross_pairings(i, j) = vs[static_cast<size_t>(i)].dot(omega * rep.conjugates[static_cast<size_t>(j)].u);
                const double expected = i == j ? 1.0 : 0.0;
                rep.cross_pairing_error = std::max(rep.cross_pairing_error, std::abs(rep.cross_pairings(i, j) - expected));
            }
        }
    }
    return rep;
}

}  // namespace

MultiparamReport multiparam_conditions(std::span<const RVector> vs, const GaussianState& state) {
    if (vs.size() < 2) throw QicError(ErrorKind::precondition, "multi-parameter conditions need at least two writes");
    return evaluate_conditions(vs, state);
}

RMatrix shift_fisher_matrix(std::span<const RVector> vs, const GaussianState& state) {
    if (vs.empty()) throw QicError(ErrorKind::precondition, "no write vectors");
    const MultiparamReport rep = evaluate_conditions(vs, state);
    if (!rep.commuting || !rep.independent) {
        throw QicError(ErrorKind::precondition, "shift Fisher matrix needs commuting, independently retrievable writes");
    }
    const auto k = static_cast<Eigen::Index>(vs.size());
    RMatrix f = RMatrix::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) f(i, i) = 4.0 * rep.covariance_products(i, i);
    return f;
}

WriteDrift qic_invariance_under_other_writes(const ModePair& pair, const RVector& v2, double theta2,
                                             const GaussianState& state) {
    const RMatrix omega = symplectic_form(state.n_modes());
    const RMatrix& m = state.covariance();
    const double variance = pair.v.dot(m * pair.v);
    return WriteDrift{std::abs(theta2 * pair.v.dot(omega * v2)), std::abs(theta2 * pair.v.dot(m * v2) / variance)};
}

CvSwapDescriptor cv_swap_generator(const ModePair& pair) {
    return CvSwapDescriptor{pair, std::numbers::pi / 2.0};
}

}  // namespace qic
