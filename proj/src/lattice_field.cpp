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

#include "qic/lattice_field.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qic/linalg.hpp"

namespace qic {

namespace {

cplx mode_function(int k, int n, int n_sites) {
    const double phase = 2.0 * std::numbers::pi * k * n / n_sites;
    return std::polar(1.0 / std::sqrt(static_cast<double>(n_sites)), phase);
}

}  // namespace

void LatticeConfig::validate() const {
    if (n_sites < 1) throw QicError(ErrorKind::invalid_dimension, "lattice needs at least one site");
    if (!(eta > 0.0)) throw QicError(ErrorKind::precondition, "eta must be positive");
}

RVector dispersion(const LatticeConfig& config) {
    config.validate();
    RVector w(config.n_sites);
    for (int k = 1; k <= config.n_sites; ++k) {
        w(k - 1) = std::sqrt(1.0 + 2.0 * config.eta * (1.0 - std::cos(2.0 * std::numbers::pi * k / config.n_sites)));
    }
    return w;
}

ModeMatrix mode_matrix(const LatticeConfig& config) {
    const int n = config.n_sites;
    ModeMatrix mm;
    mm.omegas = dispersion(config);
    mm.a.resize(2 * n, 2 * n);
    const cplx inv_i(0.0, -1.0);  // 1/i
    // a, b are 1-based; storage is 0-based.
    for (int a = 1; a <= 2 * n; ++a) {
        for (int b = 1; b <= 2 * n; ++b) {
            const bool a_odd = a % 2 == 1;
            const bool b_odd = b % 2 == 1;
            const int site = a_odd ? (a + 1) / 2 : a / 2;
            const int k = b_odd ? (b + 1) / 2 : b / 2;
            const double w = mm.omegas(k - 1);
            const cplx f = mode_function(k, site, n);
            cplx value;
            if (a_odd && b_odd) {
                value = f / std::sqrt(2.0 * w);
            } else if (a_odd) {
                value = std::conj(f) / std::sqrt(2.0 * w);
            } else if (b_odd) {
                value = inv_i * std::sqrt(w / 2.0) * f;
            } else {
                value = -inv_i * std::sqrt(w / 2.0) * std::conj(f);
            }
            mm.a(a - 1, b - 1) = value;
        }
    }
    mm.a_inv = mm.a.partialPivLu().inverse();
    const double residual = max_abs(CMatrix(mm.a * mm.a_inv - CMatrix::Identity(2 * n, 2 * n)));
    if (residual > 1e-8) {
        throw QicError(ErrorKind::ill_conditioned, "mode matrix inversion residual " + std::to_string(residual));
    }
    return mm;
}

GaussianState vacuum_covariance(const LatticeConfig& config) {
    const RVector w = dispersion(config);
    const int n = config.n_sites;
    RMatrix m = RMatrix::Zero(2 * n, 2 * n);
    // Both kernels depend only on (n - m) mod N.
    RVector qq(n), pp(n);
    for (int delta = 0; delta < n; ++delta) {
        double sq = 0.0, sp = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double c = std::cos(2.0 * std::numbers::pi * k * delta / n);
            sq += c / w(k - 1);
            sp += c * w(k - 1);
        }
        qq(delta) = sq / (2.0 * n);
        pp(delta) = sp / (2.0 * n);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int delta = ((i - j) % n + n) % n;
            m(2 * i, 2 * j) = qq(delta);
            m(2 * i + 1, 2 * j + 1) = pp(delta);
        }
    }
    return GaussianState::pure(RVector::Zero(2 * n), std::move(m));
}

RMatrix vacuum_covariance_from_modes(const ModeMatrix& mm) {
    const Eigen::Index dim = mm.a.rows();
    CMatrix ladder = CMatrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim / 2; ++k) ladder(2 * k, 2 * k + 1) = 1.0;  // <a_k a_k^dagger>
    return (mm.a * ladder * mm.a.transpose()).real();
}

EvolvedPair evolve_pair(const ModePair& pair, double t, const ModeMatrix& mm) {
    const Eigen::Index dim = mm.a.rows();
    if (pair.v.size() != dim || pair.u.size() != dim) {
        throw QicError(ErrorKind::invalid_dimension, "weighting vectors do not match the lattice");
    }
    if (t == 0.0) return EvolvedPair{t, pair.v, pair.u, 0.0};
    CVector phases(dim);
    for (Eigen::Index k = 0; k < dim / 2; ++k) {
        phases(2 * k) = std::polar(1.0, mm.omegas(k) * t);
        phases(2 * k + 1) = std::polar(1.0, -mm.omegas(k) * t);
    }
    auto evolve = [&](const RVector& w, double& residue) {
        const Eigen::RowVectorXcd row = w.cast<cplx>().transpose() * mm.a;
        const Eigen::RowVectorXcd out = row.cwiseProduct(phases.transpose()) * mm.a_inv;
        residue = std::max(residue, out.imag().cwiseAbs().maxCoeff());
        return RVector(out.real().transpose());
    };
    EvolvedPair ep;
    ep.t = t;
    ep.v = evolve(pair.v, ep.imag_residue);
    ep.u = evolve(pair.u, ep.imag_residue);
    if (ep.imag_residue >= 1e-9) {
        throw QicError(ErrorKind::numerical_failure, "evolved weighting vector has imaginary residue " + std::to_string(ep.imag_residue));
    }
    return ep;
}

std::vector<EvolvedPair> evolve_pair_many(const ModePair& pair, std::span<const double> times, const ModeMatrix& mm,
                                          Exec exec) {
    const auto count = static_cast<int>(times.size());
    std::vector<EvolvedPair> out(times.size());
    if (exec == Exec::parallel) {
        // Per-time errors are rethrown after the parallel region.
        std::vector<std::exception_ptr> errors(times.size());
#pragma omp parallel for schedule(static)
        for (int i = 0; i < count; ++i) {
            try {
                out[static_cast<size_t>(i)] = evolve_pair(pair, times[static_cast<size_t>(i)], mm);
            } catch (...) {
                errors[static_cast<size_t>(i)] = std::current_exception();
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    } else {
        for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = evolve_pair(pair, times[static_cast<size_t>(i)], mm);
    }
    return out;
}

RVector site_q_vector(int n_sites, int site) {
    if (site < 1 || site > n_sites) {
        throw QicError(ErrorKind::precondition, "write site " + std::to_string(site) + " outside 1.." + std::to_string(n_sites));
    }
    RVector v = RVector::Zero(2 * n_sites);
    v(2 * (site - 1)) = 1.0;
    return v;
}

std::vector<FigureFrame> figure_experiment(const LatticeConfig& config, int write_site, std::span<const double> times,
                                           Exec exec) {
    config.validate();
    const ModeMatrix mm = mode_matrix(config);
    const GaussianState vacuum = vacuum_covariance(config);
    const ModePair pair = conjugate_qic_vector(site_q_vector(config.n_sites, write_site), vacuum);
    const auto evolved = evolve_pair_many(pair, times, mm, exec);

    std::vector<FigureFrame> frames;
    frames.reserve(evolved.size());
    for (const auto& ep : evolved) {
        FigureFrame frame;
        frame.t = ep.t;
        frame.imag_residue = ep.imag_residue;
        const ModePair moved{ep.v, ep.u, 0.0, 0.0};
        frame.pairing = moved.pairing();
        frame.det_m = mode_covariance(moved, vacuum).det();
        for (int s = 1; s <= config.n_sites; ++s) {
            const auto i = static_cast<Eigen::Index>(2 * (s - 1));
            frame.rows.push_back(ProfileRow{s, ep.v(i), ep.v(i + 1), ep.u(i), ep.u(i + 1)});
        }
        frames.push_back(std::move(frame));
    }
    return frames;
}

}  // namespace qic
