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

#ifndef QIC_LATTICE_FIELD_HPP
#define QIC_LATTICE_FIELD_HPP

#include <span>
#include <vector>

#include "qic/common.hpp"
#include "qic/gaussian_cv.hpp"

namespace qic {

/// Periodic 1+1 dimensional lattice scalar field with N sites and coupling
/// eta = 1/(m eps)^2. Sites are 1-based in every public interface.
struct LatticeConfig {
    int n_sites = 30;
    double eta = 0.4;

    void validate() const;
};

/// omega_k = sqrt(1 + 2 eta (1 - cos(2 pi k / N))), k = 1..N (entry k-1).
RVector dispersion(const LatticeConfig& config);

/// r = A (a_1, a_1^dagger, ..., a_N, a_N^dagger)^T.
struct ModeMatrix {
    CMatrix a;
    CMatrix a_inv;
    RVector omegas;
};

/// Builds A from the mode functions f_k(n) = exp(2 pi i k n / N) / sqrt(N),
/// with rows alternating q_n / p_n and columns alternating a_k / a_k^dagger.
/// Throws ill-conditioned if ||A A^{-1} - I||_max > 1e-8.
ModeMatrix mode_matrix(const LatticeConfig& config);

/// Ground state of H = sum_k omega_k a_k^dagger a_k, assembled from the
/// cosine-kernel mode sums; validated pure.
GaussianState vacuum_covariance(const LatticeConfig& config);

/// Re(A D A^T) with the vacuum ladder moments <a_k a_k^dagger> = 1; an
/// independent route to the same covariance.
RMatrix vacuum_covariance_from_modes(const ModeMatrix& mm);

struct EvolvedPair {
    double t = 0.0;
    RVector v;
    RVector u;
    /// Largest imaginary part discarded from the complex evolution product.
    double imag_residue = 0.0;
};

/// Heisenberg evolution of weighting vectors, w(t)^T = w^T A diag(e^{i w_k t},
/// e^{-i w_k t}) A^{-1}. Throws numerical-failure if the imaginary residue
/// reaches 1e-9.
EvolvedPair evolve_pair(const ModePair& pair, double t, const ModeMatrix& mm);

/// evolve_pair over many times; `exec` picks the serial reference loop or the
/// OpenMP loop over times.
std::vector<EvolvedPair> evolve_pair_many(const ModePair& pair, std::span<const double> times, const ModeMatrix& mm,
                                          Exec exec);

struct ProfileRow {
    int site;
    double v_q, v_p, u_q, u_p;
};

struct FigureFrame {
    double t;
    std::vector<ProfileRow> rows;
    double pairing;       // v(t)^T Omega u(t)
    double det_m;         // against the stationary vacuum
    double imag_residue;
};

/// Writes with Q = q_{write_site} into the vacuum, takes the conjugate QIC
/// vector, and evolves both to every time.
std::vector<FigureFrame> figure_experiment(const LatticeConfig& config, int write_site, std::span<const double> times,
                                           Exec exec = Exec::serial);

/// Unit q-vector at a 1-based site.
RVector site_q_vector(int n_sites, int site);

}  // namespace qic

#endif
