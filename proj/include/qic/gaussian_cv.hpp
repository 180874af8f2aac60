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

#ifndef QIC_GAUSSIAN_CV_HPP
#define QIC_GAUSSIAN_CV_HPP

#include <span>
#include <string>
#include <vector>

#include "qic/common.hpp"
#include "qic/random.hpp"

namespace qic {

// Canonical ordering throughout: r = (q_1, p_1, ..., q_N, p_N).

/// Block-diagonal symplectic form with blocks [[0, 1], [-1, 0]].
RMatrix symplectic_form(int n_modes);

inline constexpr double kPurityTolerance = 1e-8;

/// First moments and symmetric covariance M = Re<R R^T> of a Gaussian state.
class GaussianState {
   public:
    /// Validates shapes and symmetry (1e-12). Purity is not required; use
    /// `require_pure` or the `pure` factory for that.
    GaussianState(RVector mean, RMatrix covariance);

    /// Throws invalid-state unless ||M Omega M - Omega/4||_max < 1e-8 and
    /// M + i Omega/2 >= -1e-9.
    static GaussianState pure(RVector mean, RMatrix covariance);
    static GaussianState vacuum(int n_modes);
    /// Single mode, M = diag(e^{2r}, e^{-2r}) / 2.
    static GaussianState squeezed(double r);
    /// Two-mode squeezed vacuum with q1-q2 correlation sinh(2r)/2.
    static GaussianState two_mode_squeezed(double r);
    /// M = S^T S / 2, S = exp(Omega H) with H random symmetric (entries in
    /// [-1, 1]) rescaled so ||Omega H||_2 <= 2; mean uniform in [-1, 1].
    static GaussianState random_pure(int n_modes, Rng& rng);

    int n_modes() const { return static_cast<int>(mean_.size() / 2); }
    const RVector& mean() const { return mean_; }
    const RMatrix& covariance() const { return covariance_; }

    double symmetry_residual() const;
    /// ||M Omega M - Omega/4||_max.
    double purity_residual() const;
    /// Smallest eigenvalue of M + i Omega/2.
    double uncertainty_min_eigenvalue() const;
    bool is_pure() const { return purity_residual() < kPurityTolerance; }
    void require_pure() const;

   private:
    RVector mean_;
    RMatrix covariance_;
};

/// Q = v^T R, P = u^T R with R = r - <r>; offsets are v^T<r> and u^T<r>.
struct ModePair {
    RVector v;
    RVector u;
    double q_offset = 0.0;
    double p_offset = 0.0;

    /// v^T Omega u (1 for a canonical pair).
    double pairing() const;
};

struct ModeCovariance {
    Eigen::Matrix2d m;

    double det() const { return m.determinant(); }
};

/// u = -Omega M v / (v^T M v): the unique conjugate with v^T Omega u = 1,
/// v^T M u = 0 and det m = 1/4.
ModePair conjugate_qic_vector(const RVector& v, const GaussianState& state);

ModeCovariance mode_covariance(const ModePair& pair, const GaussianState& state);

/// Entanglement entropy of a mode with its complement, g = sqrt(4 det m - 1).
double mode_entropy(const ModeCovariance& m);
double mode_entropy_from_g(double g);

/// Mean shifted by theta Omega v; covariance untouched.
GaussianState apply_shift_write(const GaussianState& state, const RVector& v, double theta);

struct MultiparamReport {
    /// v_i^T Omega v_j.
    RMatrix symplectic_products;
    /// v_i^T M v_j.
    RMatrix covariance_products;
    bool commuting = false;
    bool independent = false;
    /// Filled only when independent.
    std::vector<ModePair> conjugates;
    /// v_i^T Omega u_j (the delta_ij check); filled only when independent.
    RMatrix cross_pairings;
    double cross_pairing_error = 0.0;
};

MultiparamReport multiparam_conditions(std::span<const RVector> vs, const GaussianState& state);

/// diag(4 v_i^T M v_i); throws precondition unless the writes commute and are
/// independently retrievable.
RMatrix shift_fisher_matrix(std::span<const RVector> vs, const GaussianState& state);

struct WriteDrift {
    double q_drift;
    double p_drift;
};

/// Additive drifts of (Q_1, P_1) under W_2(theta2):
/// |theta2 v1^T Omega v2| and |theta2 v1^T M v2 / (v1^T M v1)|.
WriteDrift qic_invariance_under_other_writes(const ModePair& pair, const RVector& v2, double theta2,
                                             const GaussianState& state);

/// Bilinear SWAP coupling exp(i strength (Q p_ext - P q_ext)) with an external
/// oscillator. Only the descriptor is produced; nothing is simulated.
struct CvSwapDescriptor {
    ModePair pair;
    double strength;
};

CvSwapDescriptor cv_swap_generator(const ModePair& pair);

}  // namespace qic

#endif
