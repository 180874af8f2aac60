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

#ifndef QIC_QUDIT_INFO_HPP
#define QIC_QUDIT_INFO_HPP

#include <span>
#include <vector>

#include "qic/common.hpp"
#include "qic/qudit_algebra.hpp"

namespace qic {

/// A d-level system living in the correlation space of an N-qudit register:
/// T_i = V^dagger (t_i (x) I) V for a unitary conjugator V.
class VirtualQudit {
   public:
    /// Throws invalid-unitary if the conjugator deviates from unitarity by more
    /// than 1e-8.
    VirtualQudit(SuBasis basis, int num_sites, CMatrix conjugator);

    /// The first real qudit (V = I).
    static VirtualQudit first_site(int d, int num_sites);

    const SuBasis& basis() const { return basis_; }
    int local_dim() const { return basis_.dim(); }
    int num_sites() const { return num_sites_; }
    Eigen::Index dim() const { return conjugator_.rows(); }
    const CMatrix& conjugator() const { return conjugator_; }

    /// T_mu as a dense matrix (mu = 0 gives the identity).
    CMatrix op(int mu) const;
    /// T_1 .. T_{d^2-1}.
    std::vector<CMatrix> operators() const;
    /// T_mu |v> without materializing T_mu.
    CVector apply_op(int mu, const CVector& v) const;

   private:
    SuBasis basis_;
    int num_sites_;
    CMatrix conjugator_;
};

/// rho = (1/d) sum_mu <T_mu> t_mu.
struct CorrelationState {
    CMatrix rho;

    double purity() const { return std::real((rho * rho).trace()); }
};

/// Unitary write W(theta) = exp(-i theta T) with T = U^dagger (t (x) I) U,
/// t traceless Hermitian with Tr(t^2) = d.
class WriteOperation {
   public:
    WriteOperation(CMatrix local_generator, CMatrix conjugator, int num_sites);

    /// U = I: a write acting on the first real qudit only.
    static WriteOperation local(CMatrix local_generator, int num_sites);

    int local_dim() const { return static_cast<int>(local_generator_.rows()); }
    int num_sites() const { return num_sites_; }
    const CMatrix& local_generator() const { return local_generator_; }
    const CMatrix& conjugator() const { return conjugator_; }

    /// w(theta) = exp(-i theta t).
    CMatrix local_unitary(double theta) const;
    /// Dense T.
    CMatrix generator() const;
    CVector apply_generator(const CVector& v) const;
    /// U^dagger (w(theta) (x) I) U |state>, applied in three structured steps.
    PureState apply(double theta, const PureState& state) const;

   private:
    CMatrix local_generator_;
    CMatrix conjugator_;
    int num_sites_;
};

struct PartnerPair {
    VirtualQudit qudit_a;
    VirtualQudit qudit_b;
    /// rho_AB recomputed from the correlation-space definition.
    CMatrix joint_state;
    /// |Psi_AB> = sum_i sqrt(p_i) |phi_i> |phi_i>.
    CVector joint_vector;
};

struct QicConstruction {
    VirtualQudit qudit;
    CorrelationState state;
    /// V: sum_i |phi_i><phi_i| (x) V_i, commuting with t (x) I.
    CMatrix inner;
    /// Reference vector |psi> on the remaining N-1 sites.
    CVector reference;
    /// |Phi> = sum_i c_i |phi_i>.
    CVector capsule;
    /// Eigenvectors of t as columns (descending eigenvalues) and the branch
    /// amplitudes c_i.
    CMatrix eigenbasis;
    RVector eigenvalues;
    CVector branch_amplitudes;
    int reference_branch = 0;
};

struct SwapRetrieval {
    /// Reduced state of the N-qudit register after the SWAP.
    CMatrix residual;
    /// Reduced state of the external qudit after the SWAP.
    CMatrix extracted;
};

struct FeasibilityReport {
    bool feasible;
    double expectation;
};

CorrelationState correlation_state(const VirtualQudit& q, const PureState& state);

/// (1/d^2) sum_{mu,nu} <T^A_mu T^B_nu> t_mu (x) t_nu. The d^4 expectation
/// values are the parallel loop.
CMatrix correlation_joint_state(const VirtualQudit& a, const VirtualQudit& b, const PureState& state,
                                Exec exec = Exec::serial);

/// max_{i,j} ||[T^A_i, T^B_j]||_max.
double locality_residual(const VirtualQudit& a, const VirtualQudit& b);

PartnerPair construct_partner(const VirtualQudit& qudit_a, const PureState& state, Exec exec = Exec::serial);

/// Correlation-space state of the pair recomputed from W(theta)|Psi>.
/// Throws contract-violation unless the pair's A-conjugator is the write's U.
CMatrix partner_write_action(const PartnerPair& pair, const WriteOperation& w, double theta, const PureState& state,
                             Exec exec = Exec::serial);

/// (w(theta) (x) I) rho (w(theta) (x) I)^dagger.
CMatrix local_write_image(const CMatrix& rho_ab, const CMatrix& w_local);

QicConstruction construct_qic(const WriteOperation& w, const PureState& state);

/// Deformed QIC with conjugator exp(-i r t (x) |psi><psi|) V U.
VirtualQudit qic_family(const QicConstruction& qic, const WriteOperation& w, double r);

/// U_swap = (1/d) sum_mu T_mu (x) t_mu on the register (x) external qudit.
CMatrix assemble_swap(const VirtualQudit& q);

/// Applies U_swap to |state> (x) |0> and returns both reduced states.
SwapRetrieval retrieve_by_swap(const VirtualQudit& q, const PureState& state_after_write);

/// 4 (<T^2> - <T>^2).
double fisher_information(const WriteOperation& w, const PureState& state);

/// Diagonal generators of su(d), normalized Tr(c_i c_j) = d delta_ij.
std::vector<HermitianOp> commuting_generators(int d);

/// U^dagger (c (x) I) U on the full register.
HermitianOp lift_generator(const CMatrix& local, const CMatrix& conjugator, int num_sites);

/// F_ij = 4 Re <Psi| dC_i dC_j |Psi>. Throws precondition on non-commuting input.
RMatrix sld_fisher_matrix(std::span<const HermitianOp> generators, const PureState& state);

/// Necessary condition for a maximally entangled partner pair: <T> = 0.
FeasibilityReport max_entangled_partner_feasible(const WriteOperation& w, const PureState& state);

}  // namespace qic

#endif
