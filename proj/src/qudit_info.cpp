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

#include "qic/qudit_info.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qic/linalg.hpp"

namespace qic {

namespace {

void require_same_register(const PureState& state, Eigen::Index dim, int d) {
    if (state.dim() != dim || state.local_dim() != d) {
        throw QicError(ErrorKind::invalid_dimension, "state does not live on the operator's register");
    }
}

CMatrix embed_first(const CMatrix& local, Eigen::Index rest) {
    return kron(local, CMatrix::Identity(rest, rest));
}

}  // namespace

// ---------------------------------------------------------------------------
// VirtualQudit

VirtualQudit::VirtualQudit(SuBasis basis, int num_sites, CMatrix conjugator)
    : basis_(std::move(basis)), num_sites_(num_sites), conjugator_(std::move(conjugator)) {
    if (conjugator_.rows() != int_pow(basis_.dim(), num_sites)) {
        throw QicError(ErrorKind::invalid_dimension, "conjugator is not d^N x d^N");
    }
    const double err = unitarity_residual(conjugator_);
    if (err > 1e-8) throw QicError(ErrorKind::invalid_unitary, "virtual qudit conjugator residual " + std::to_string(err));
}

VirtualQudit VirtualQudit::first_site(int d, int num_sites) {
    const auto dim = int_pow(d, num_sites);
    return VirtualQudit(SuBasis(d), num_sites, CMatrix::Identity(dim, dim));
}

CMatrix VirtualQudit::op(int mu) const {
    const Eigen::Index rest = dim() / local_dim();
    return conjugator_.adjoint() * embed_first(basis_.extended(mu), rest) * conjugator_;
}

std::vector<CMatrix> VirtualQudit::operators() const {
    std::vector<CMatrix> ops;
    ops.reserve(static_cast<size_t>(basis_.size()));
    for (int mu = 1; mu < basis_.extended_size(); ++mu) ops.push_back(op(mu));
    return ops;
}

CVector VirtualQudit::apply_op(int mu, const CVector& v) const {
    if (mu == 0) return v;
    const CVector w = conjugator_ * v;
    return conjugator_.adjoint() * apply_first_site(basis_.extended(mu), w);
}

// ---------------------------------------------------------------------------
// WriteOperation

WriteOperation::WriteOperation(CMatrix local_generator, CMatrix conjugator, int num_sites)
    : local_generator_(std::move(local_generator)), conjugator_(std::move(conjugator)), num_sites_(num_sites) {
    const auto d = local_generator_.rows();
    if (d < 2 || local_generator_.cols() != d) throw QicError(ErrorKind::invalid_dimension, "write generator must be d x d, d >= 2");
    if (conjugator_.rows() != int_pow(static_cast<int>(d), num_sites) || conjugator_.cols() != conjugator_.rows()) {
        throw QicError(ErrorKind::invalid_dimension, "write conjugator is not d^N x d^N");
    }
    if (hermiticity_residual(local_generator_) > 1e-12) throw QicError(ErrorKind::precondition, "write generator is not Hermitian");
    if (std::abs(local_generator_.trace()) > 1e-10) throw QicError(ErrorKind::precondition, "write generator is not traceless");
    const double norm = std::real((local_generator_ * local_generator_).trace());
    if (std::abs(norm - static_cast<double>(d)) > 1e-10) {
        throw QicError(ErrorKind::precondition, "write generator must satisfy Tr(t^2) = d, got " + std::to_string(norm));
    }
    if (unitarity_residual(conjugator_) > 1e-8) throw QicError(ErrorKind::invalid_unitary, "write conjugator is not unitary");
}

WriteOperation WriteOperation::local(CMatrix local_generator, int num_sites) {
    const auto dim = int_pow(static_cast<int>(local_generator.rows()), num_sites);
    return WriteOperation(std::move(local_generator), CMatrix::Identity(dim, dim), num_sites);
}

CMatrix WriteOperation::local_unitary(double theta) const { return unitary_from_hermitian(local_generator_, theta); }

CMatrix WriteOperation::generator() const {
    const Eigen::Index rest = conjugator_.rows() / local_dim();
    return conjugator_.adjoint() * embed_first(local_generator_, rest) * conjugator_;
}

CVector WriteOperation::apply_generator(const CVector& v) const {
    return conjugator_.adjoint() * apply_first_site(local_generator_, conjugator_ * v);
}

PureState WriteOperation::apply(double theta, const PureState& state) const {
    require_same_register(state, conjugator_.rows(), local_dim());
    CVector v = conjugator_ * state.amplitudes();
    v = apply_first_site(local_unitary(theta), v);
    v = conjugator_.adjoint() * v;
    return PureState(state.num_sites(), state.local_dim(), std::move(v), 1e-10);
}

// ---------------------------------------------------------------------------
// Correlation-space states

CorrelationState correlation_state(const VirtualQudit& q, const PureState& state) {
    require_same_register(state, q.dim(), q.local_dim());
    const SuBasis& basis = q.basis();
    const int d = basis.dim();
    const CVector w = q.conjugator() * state.amplitudes();
    CMatrix rho = CMatrix::Zero(d, d);
    for (int mu = 0; mu < basis.extended_size(); ++mu) {
        const cplx expectation = w.dot(apply_first_site(basis.extended(mu), w));
        rho += std::real(expectation) * basis.extended(mu);
    }
    rho /= static_cast<double>(d);
    if (std::abs(rho.trace() - 1.0) > 1e-10) {
        throw QicError(ErrorKind::internal_consistency, "correlation state does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw QicError(ErrorKind::internal_consistency, "correlation state has a negative eigenvalue");
    }
    return CorrelationState{std::move(rho)};
}

CMatrix correlation_joint_state(const VirtualQudit& a, const VirtualQudit& b, const PureState& state, Exec exec) {
    require_same_register(state, a.dim(), a.local_dim());
    require_same_register(state, b.dim(), b.local_dim());
    const SuBasis& basis = a.basis();
    const int d = basis.dim();
    const int m = basis.extended_size();
    const CVector& psi = state.amplitudes();

    std::vector<CVector> a_vecs(static_cast<size_t>(m));
    std::vector<CVector> b_vecs(static_cast<size_t>(m));
    CMatrix expectations(m, m);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int mu = 0; mu < 2 * m; ++mu) {
            if (mu < m) {
                a_vecs[static_cast<size_t>(mu)] = a.apply_op(mu, psi);
            } else {
                b_vecs[static_cast<size_t>(mu - m)] = b.apply_op(mu - m, psi);
            }
        }
#pragma omp parallel for collapse(2) schedule(static)
        for (int mu = 0; mu < m; ++mu) {
            for (int nu = 0; nu < m; ++nu) {
                // T^A is Hermitian: <Psi|T^A T^B|Psi> = <T^A Psi | T^B Psi>.
                expectations(mu, nu) = a_vecs[static_cast<size_t>(mu)].dot(b_vecs[static_cast<size_t>(nu)]);
            }
        }
    } else {
        for (int mu = 0; mu < m; ++mu) {
            a_vecs[static_cast<size_t>(mu)] = a.apply_op(mu, psi);
            b_vecs[static_cast<size_t>(mu)] = b.apply_op(mu, psi);
        }
        for (int mu = 0; mu < m; ++mu) {
            for (int nu = 0; nu < m; ++nu) {
                expectations(mu, nu) = a_vecs[static_cast<size_t>(mu)].dot(b_vecs[static_cast<size_t>(nu)]);
            }
        }
    }

    CMatrix rho = CMatrix::Zero(d * d, d * d);
    for (int mu = 0; mu < m; ++mu) {
        for (int nu = 0; nu < m; ++nu) rho += expectations(mu, nu) * kron(basis.extended(mu), basis.extended(nu));
    }
    return rho / static_cast<double>(d * d);
}

double locality_residual(const VirtualQudit& a, const VirtualQudit& b) {
    const auto ops_a = a.operators();
    const auto ops_b = b.operators();
    double worst = 0.0;
    for (const auto& x : ops_a) {
        for (const auto& y : ops_b) worst = std::max(worst, max_abs(CMatrix(x * y - y * x)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Partners

PartnerPair construct_partner(const VirtualQudit& qudit_a, const PureState& state, Exec exec) {
    const int n = qudit_a.num_sites();
    if (n < 2) throw QicError(ErrorKind::no_environment, "a partner needs at least one environment site (N >= 2)");
    require_same_register(state, qudit_a.dim(), qudit_a.local_dim());
    const int d = qudit_a.local_dim();
    const Eigen::Index rest = qudit_a.dim() / d;
    const Eigen::Index tail = rest / d;  // d^{N-2}

    const PureState rotated(n, d, qudit_a.conjugator() * state.amplitudes(), 1e-10);
    const SchmidtDecomposition sd = schmidt(rotated);

    // v maps |psi_i> to |phi_i> (x) |0...0>; choosing psi'_i = phi_i turns the
    // basis exchange sum_{ij} |phi_i><phi_j| (x) |psi'_j><psi'_i| into the plain
    // SWAP of the first two sites.
    CMatrix targets(rest, d);
    for (int i = 0; i < d; ++i) targets.col(i) = kron(sd.left.col(i), CVector::Unit(tail, 0));
    const CMatrix source_basis = complete_orthonormal_columns(sd.right);
    const CMatrix target_basis = complete_orthonormal_columns(targets);
    const CMatrix v_hat = target_basis * source_basis.adjoint();

    const CMatrix lift = kron(CMatrix::Identity(d, d), v_hat);
    const CMatrix exchange = kron(swap_operator(d), CMatrix::Identity(tail, tail));
    CMatrix conj_b = exchange * lift * qudit_a.conjugator();

    VirtualQudit qudit_b(qudit_a.basis(), n, std::move(conj_b));

    CVector joint_vector = CVector::Zero(d * d);
    for (int i = 0; i < d; ++i) joint_vector += sd.coefficients(i) * kron(sd.left.col(i), sd.left.col(i));

    CMatrix joint = correlation_joint_state(qudit_a, qudit_b, state, exec);
    return PartnerPair{qudit_a, std::move(qudit_b), std::move(joint), std::move(joint_vector)};
}

CMatrix partner_write_action(const PartnerPair& pair, const WriteOperation& w, double theta, const PureState& state,
                             Exec exec) {
    if (pair.qudit_a.dim() != w.conjugator().rows() ||
        max_abs(CMatrix(pair.qudit_a.conjugator() - w.conjugator())) > 1e-12) {
        throw QicError(ErrorKind::contract_violation, "partner A must be built from the write's conjugating unitary");
    }
    return correlation_joint_state(pair.qudit_a, pair.qudit_b, w.apply(theta, state), exec);
}

CMatrix local_write_image(const CMatrix& rho_ab, const CMatrix& w_local) {
    const CMatrix lifted = kron(w_local, CMatrix::Identity(w_local.rows(), w_local.rows()));
    return lifted * rho_ab * lifted.adjoint();
}

// ---------------------------------------------------------------------------
// Quantum information capsules

QicConstruction construct_qic(const WriteOperation& w, const PureState& state) {
    const int d = w.local_dim();
    const int n = w.num_sites();
    require_same_register(state, w.conjugator().rows(), d);
    const Eigen::Index rest = state.dim() / d;

    // Eigenbasis of t, ordered by descending eigenvalue.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(w.local_generator());
    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return es.eigenvalues()(x) > es.eigenvalues()(y); });
    CMatrix phis(d, d);
    RVector evals(d);
    for (int i = 0; i < d; ++i) {
        phis.col(i) = fix_gauge_first_nonzero(es.eigenvectors().col(order[static_cast<size_t>(i)]));
        evals(i) = es.eigenvalues()(order[static_cast<size_t>(i)]);
    }

    // U|Psi> = sum_i c_i |phi_i> (x) |psi_i>.
    const CVector rotated = w.conjugator() * state.amplitudes();
    Eigen::Map<const CMatrix> view(rotated.data(), rest, d);
    CMatrix conditionals(rest, d);
    CVector amplitudes(d);
    std::vector<bool> live(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        const CVector branch = view * phis.col(i).conjugate();
        const double norm = branch.norm();
        live[static_cast<size_t>(i)] = norm >= 1e-12;
        if (live[static_cast<size_t>(i)]) {
            conditionals.col(i) = fix_gauge_first_nonzero(branch / norm);
            amplitudes(i) = conditionals.col(i).dot(branch);
        } else {
            conditionals.col(i).setZero();
            amplitudes(i) = 0.0;
        }
    }

    int ref = 0;
    for (int i = 1; i < d; ++i) {
        if (std::abs(amplitudes(i)) > std::abs(amplitudes(ref)) + 1e-12) ref = i;
    }
    const CVector reference = conditionals.col(ref);

    CMatrix inner = CMatrix::Zero(state.dim(), state.dim());
    for (int i = 0; i < d; ++i) {
        const CMatrix proj = phis.col(i) * phis.col(i).adjoint();
        const CMatrix vi = live[static_cast<size_t>(i)] ? map_vector_unitary(conditionals.col(i), reference)
                                                        : CMatrix(CMatrix::Identity(rest, rest));
        inner += kron(proj, vi);
    }

    const CVector capsule = phis * amplitudes;
    VirtualQudit qudit(SuBasis(d), n, inner * w.conjugator());
    CorrelationState cs = correlation_state(qudit, state);
    return QicConstruction{std::move(qudit), std::move(cs), std::move(inner), reference, capsule,
                           std::move(phis),  std::move(evals), std::move(amplitudes), ref};
}

VirtualQudit qic_family(const QicConstruction& qic, const WriteOperation& w, double r) {
    const Eigen::Index dim = qic.inner.rows();
    const CMatrix projector = qic.reference * qic.reference.adjoint();
    const int d = w.local_dim();
    const CMatrix deform = CMatrix::Identity(dim, dim) + kron(w.local_unitary(r) - CMatrix::Identity(d, d), projector);
    return VirtualQudit(qic.qudit.basis(), w.num_sites(), deform * qic.inner * w.conjugator());
}

CMatrix assemble_swap(const VirtualQudit& q) {
    const SuBasis& basis = q.basis();
    const int d = basis.dim();
    CMatrix u = CMatrix::Zero(q.dim() * d, q.dim() * d);
    for (int mu = 0; mu < basis.extended_size(); ++mu) u += kron(q.op(mu), basis.extended(mu));
    return u / static_cast<double>(d);
}

SwapRetrieval retrieve_by_swap(const VirtualQudit& q, const PureState& state_after_write) {
    require_same_register(state_after_write, q.dim(), q.local_dim());
    const int d = q.local_dim();
    const CMatrix u_swap = assemble_swap(q);
    const double err = unitarity_residual(u_swap);
    if (err > 1e-8) {
        throw QicError(ErrorKind::internal_consistency,
                       "broken virtual qudit: assembled SWAP is not unitary (residual " + std::to_string(err) + ")");
    }
    const CVector joint = u_swap * kron(state_after_write.amplitudes(), CVector::Unit(d, 0));
    return SwapRetrieval{reduced_left(joint, q.dim()), reduced_right(joint, q.dim())};
}

// ---------------------------------------------------------------------------
// Fisher information

double fisher_information(const WriteOperation& w, const PureState& state) {
    require_same_register(state, w.conjugator().rows(), w.local_dim());
    const CVector& psi = state.amplitudes();
    const CVector t_psi = w.apply_generator(psi);
    const double mean = std::real(psi.dot(t_psi));
    return 4.0 * (t_psi.squaredNorm() - mean * mean);
}

std::vector<HermitianOp> commuting_generators(int d) {
    const SuBasis basis(d);
    std::vector<HermitianOp> out;
    for (int i : basis.cartan_indices()) out.emplace_back(basis.generator(i));
    return out;
}

HermitianOp lift_generator(const CMatrix& local, const CMatrix& conjugator, int num_sites) {
    const auto d = static_cast<int>(local.rows());
    const Eigen::Index rest = int_pow(d, num_sites - 1);
    if (conjugator.rows() != d * rest) throw QicError(ErrorKind::invalid_dimension, "conjugator does not match d^N");
    return HermitianOp(conjugator.adjoint() * embed_first(local, rest) * conjugator, 1e-10);
}

RMatrix sld_fisher_matrix(std::span<const HermitianOp> generators, const PureState& state) {
    const auto k = static_cast<Eigen::Index>(generators.size());
    for (Eigen::Index i = 0; i < k; ++i) {
        const CMatrix& ci = generators[static_cast<size_t>(i)].matrix();
        if (ci.rows() != state.dim()) throw QicError(ErrorKind::invalid_dimension, "generator does not match the state");
        for (Eigen::Index j = i + 1; j < k; ++j) {
            const CMatrix& cj = generators[static_cast<size_t>(j)].matrix();
            if (max_abs(CMatrix(ci * cj - cj * ci)) >= 1e-10) {
                throw QicError(ErrorKind::precondition, "SLD Fisher matrix requires pairwise commuting generators");
            }
        }
    }
    const CVector& psi = state.amplitudes();
    std::vector<CVector> centered;
    centered.reserve(generators.size());
    for (const auto& g : generators) {
        CVector c = g.matrix() * psi;
        c -= psi.dot(c) * psi;
        centered.push_back(std::move(c));
    }
    RMatrix f(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            f(i, j) = 4.0 * std::real(centered[static_cast<size_t>(i)].dot(centered[static_cast<size_t>(j)]));
        }
    }
    return f;
}

FeasibilityReport max_entangled_partner_feasible(const WriteOperation& w, const PureState& state) {
    const CVector& psi = state.amplitudes();
    const double expectation = std::real(psi.dot(w.apply_generator(psi)));
    return FeasibilityReport{std::abs(expectation) < 1e-10, expectation};
}

}  // namespace qic
