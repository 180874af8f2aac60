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

#ifndef QIC_QUDIT_ALGEBRA_HPP
#define QIC_QUDIT_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "qic/common.hpp"
#include "qic/random.hpp"

namespace qic {

/// Orthogonal traceless Hermitian generators of su(d), normalized so that
/// Tr(t_i t_j) = d delta_ij.
///
/// Generator order (0-based index i into `generator(i)`):
///   1. symmetric   |j><k| + |k><j|      for j < k, pairs in row-major order;
///   2. antisymmetric -i|j><k| + i|k><j| for j < k, same pair order;
///   3. diagonal (Cartan) generators D_l, l = 1..d-1, with D_l proportional to
///      sum_{j<l} |j><j| - l |l><l|.
/// `extended(mu)` prepends t_0 = identity, so mu ranges over 0..d^2-1.
/// For d = 2 this yields (sigma_x, sigma_y, sigma_z).
class SuBasis {
   public:
    explicit SuBasis(int d);

    int dim() const { return d_; }
    int size() const { return static_cast<int>(generators_.size()); }
    const CMatrix& generator(int i) const { return generators_.at(i); }
    const std::vector<CMatrix>& generators() const { return generators_; }
    /// t_mu with t_0 = I.
    const CMatrix& extended(int mu) const;
    int extended_size() const { return size() + 1; }

    /// Indices (into `generator`) of the d-1 diagonal generators.
    std::vector<int> cartan_indices() const;

    /// Expansion coefficients c_mu = Tr(t_mu h) / d of a d x d matrix, so that
    /// h = sum_mu c_mu t_mu.
    CVector coefficients(const CMatrix& h) const;

   private:
    int d_;
    CMatrix identity_;
    std::vector<CMatrix> generators_;
};

SuBasis build_su_basis(int d);

/// Unit vector on (C^d)^{tensor N}; the first site is the slowest index.
class PureState {
   public:
    /// Throws invalid-state if the norm deviates from 1 by more than `tol`.
    PureState(int num_sites, int local_dim, CVector amplitudes, double tol = 1e-12);

    static PureState product(const std::vector<CVector>& factors);
    static PureState random(int num_sites, int local_dim, Rng& rng);
    /// Normalizes `amplitudes` before validation.
    static PureState normalized(int num_sites, int local_dim, CVector amplitudes);

    int num_sites() const { return num_sites_; }
    int local_dim() const { return local_dim_; }
    Eigen::Index dim() const { return amplitudes_.size(); }
    const CVector& amplitudes() const { return amplitudes_; }

   private:
    int num_sites_;
    int local_dim_;
    CVector amplitudes_;
};

/// Square matrix validated Hermitian to 1e-12.
class HermitianOp {
   public:
    explicit HermitianOp(CMatrix matrix, double tol = 1e-12);
    Eigen::Index dim() const { return matrix_.rows(); }
    const CMatrix& matrix() const { return matrix_; }

   private:
    CMatrix matrix_;
};

struct SchmidtDecomposition {
    /// sqrt(p_i), nonincreasing, exactly d entries (zero padded).
    RVector coefficients;
    /// Columns |phi_i> in C^d.
    CMatrix left;
    /// Columns |psi_i> in C^{d^{N-1}}, orthonormal.
    CMatrix right;

    CVector reconstruct() const;
};

/// Explicit sum_{i,j} |i><j| (x) |j><i| on C^d (x) C^d.
CMatrix swap_operator(int d);

/// (1/d) sum_mu t_mu (x) t_mu; equals swap_operator(basis.dim()).
CMatrix swap_from_generators(const SuBasis& basis);

/// Schmidt decomposition across the cut after the first site.
SchmidtDecomposition schmidt(const PureState& state);

/// Returns G^dagger (u_first (x) I) G |state> (G = identity when absent). Both
/// unitaries are validated to 1e-8.
PureState apply_structured_unitary(const PureState& state, const CMatrix& u_first,
                                   const std::optional<CMatrix>& global_u = std::nullopt);

/// Unitary V with V src = dst that is the identity on the orthogonal complement
/// of span{src, dst}. Built as an SU(2) rotation in that plane; when dst is a
/// phase multiple of src (including the antipodal case) it reduces to
/// I + (alpha - 1)|src><src|.
CMatrix map_vector_unitary(const CVector& src, const CVector& dst);

}  // namespace qic

#endif
