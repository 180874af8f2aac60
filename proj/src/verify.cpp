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

#include "qic/verify.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "qic/gaussian_cv.hpp"
#include "qic/lattice_field.hpp"
#include "qic/linalg.hpp"
#include "qic/qudit_algebra.hpp"
#include "qic/qudit_ensemble.hpp"
#include "qic/qudit_info.hpp"
#include "qic/text_io.hpp"

namespace qic {

namespace {

class Collector {
   public:
    void add(const std::string& module, const std::string& invariant, double value, double tolerance) {
        results_.push_back(CheckResult{module, invariant, value, tolerance, std::isfinite(value) && value < tolerance});
    }
    std::vector<CheckResult> take() { return std::move(results_); }

   private:
    std::vector<CheckResult> results_;
};

void check_qudit_algebra(Collector& c, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 1));
    double ortho = 0.0, swap_sum = 0.0, swap_inv = 0.0;
    for (int d = 2; d <= 4; ++d) {
        SuBasis b(d);
        for (int mu = 0; mu < d * d; ++mu) {
            for (int nu = 0; nu < d * d; ++nu) {
                const cplx tr = (b.extended(mu) * b.extended(nu)).trace();
                ortho = std::max(ortho, std::abs(tr - cplx(mu == nu ? d : 0)));
            }
        }
        const CMatrix s = swap_operator(d);
        swap_sum = std::max(swap_sum, max_abs(CMatrix(swap_from_generators(b) - s)));
        swap_inv = std::max(swap_inv, max_abs(CMatrix(s * s - CMatrix::Identity(d * d, d * d))));
    }
    c.add("qudit_algebra", "generator orthonormality", ortho, 1e-10);
    c.add("qudit_algebra", "SWAP generator sum", swap_sum, 1e-12);
    c.add("qudit_algebra", "SWAP involution", swap_inv, 1e-12);

    double recon = 0.0, marginal = 0.0;
    for (int d = 2; d <= 4; ++d) {
        auto st = PureState::random(3, d, rng);
        auto sd = schmidt(st);
        recon = std::max(recon, max_abs(CMatrix(sd.reconstruct() - st.amplitudes())));
        CMatrix rho = CMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i) rho += sd.coefficients(i) * sd.coefficients(i) * sd.left.col(i) * sd.left.col(i).adjoint();
        marginal = std::max(marginal, max_abs(CMatrix(rho - reduced_first_site(st.amplitudes(), d))));
    }
    c.add("qudit_algebra", "Schmidt reconstruction", recon, 1e-10);
    c.add("qudit_algebra", "Schmidt marginal", marginal, 1e-10);

    double map_err = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        CVector src = random_unit_vector(9, rng);
        CVector dst = random_unit_vector(9, rng);
        CMatrix v = map_vector_unitary(src, dst);
        map_err = std::max({map_err, (v * src - dst).norm(), unitarity_residual(v)});
    }
    c.add("qudit_algebra", "map_vector_unitary", map_err, 1e-12);
}

void check_qudit_info(Collector& c, std::uint64_t seed) {
    const int shapes[4][2] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    QuditTrialResult worst;
    for (int s = 0; s < 4; ++s) {
        auto results = run_qudit_trials(shapes[s][0], shapes[s][1], 10, derive_seed(seed, 10 + s), 1.3, Exec::parallel);
        results.push_back(worst);
        worst = worst_case(results);
    }
    c.add("qudit_info", "QIC purity", worst.qic_purity, 1e-8);
    c.add("qudit_info", "QIC commutes with write", worst.qic_commutation, 1e-9);
    c.add("qudit_info", "SWAP residual independence", worst.swap_residual_distance, 1e-7);
    c.add("qudit_info", "SWAP extraction fidelity", worst.extracted_infidelity, 1e-7);
    c.add("qudit_info", "partner purity", worst.partner_purity, 1e-8);
    c.add("qudit_info", "partner locality", worst.partner_locality, 1e-9);
    c.add("qudit_info", "partner write action", worst.partner_write, 1e-8);

    Rng rng(derive_seed(seed, 2));
    double fisher_drift = 0.0, spectrum = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        auto trial_draw = draw_qudit_trial(3, 2, derive_seed(seed, 3), trial);
        const double f0 = fisher_information(trial_draw.write, trial_draw.state);
        for (double th : {0.5, 1.5}) {
            const double f = fisher_information(trial_draw.write, trial_draw.write.apply(th, trial_draw.state));
            fisher_drift = std::max(fisher_drift, std::abs(f - f0) / std::max(1e-300, std::abs(f0)));
        }
        VirtualQudit q(SuBasis(3), 2, haar_unitary(9, rng));
        CMatrix h = CMatrix::Zero(9, 9);
        std::normal_distribution<double> normal;
        for (int mu = 1; mu < 9; ++mu) h += normal(rng) * q.op(mu);
        VirtualQudit moved(SuBasis(3), 2, CMatrix(q.conjugator() * unitary_from_hermitian(h, 1.0)));
        Eigen::SelfAdjointEigenSolver<CMatrix> a(correlation_state(q, trial_draw.state).rho);
        Eigen::SelfAdjointEigenSolver<CMatrix> b(correlation_state(moved, trial_draw.state).rho);
        spectrum = std::max(spectrum, (a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff());
    }
    c.add("qudit_info", "Fisher theta independence", fisher_drift, 1e-9);
    c.add("qudit_info", "equivalence closure spectrum", spectrum, 1e-9);
}

void check_gaussian_cv(Collector& c, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 4));
    double purity = std::max({GaussianState::vacuum(3).purity_residual(), GaussianState::squeezed(0.7).purity_residual(),
                              GaussianState::two_mode_squeezed(0.4).purity_residual()});
    double det_err = 0.0, pairing = 0.0, cross = 0.0, fisher_write = 0.0;
    double uniqueness_violations = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 8;
        auto s = GaussianState::random_pure(n, rng);
        purity = std::max(purity, s.purity_residual());
        RVector v = random_uniform_vector(2 * n, -1.0, 1.0, rng);
        auto pair = conjugate_qic_vector(v, s);
        auto m = mode_covariance(pair, s);
        det_err = std::max(det_err, std::abs(m.det() - 0.25));
        pairing = std::max(pairing, std::abs(pair.pairing() - 1.0));
        cross = std::max(cross, std::abs(m.m(0, 1)));

        const RMatrix omega = symplectic_form(n);
        RMatrix cons(2 * n, 2);
        cons.col(0) = omega.transpose() * v;
        cons.col(1) = s.covariance() * v;
        Eigen::HouseholderQR<RMatrix> qr(cons);
        const RMatrix q = qr.householderQ() * RMatrix::Identity(2 * n, 2);
        if (2 * n > 2) {
            RVector d = random_uniform_vector(2 * n, -1.0, 1.0, rng);
            d -= q * (q.transpose() * d);
            const double increase = mode_covariance(ModePair{v, pair.u + d, 0, 0}, s).det() - m.det();
            if (!(increase > 0)) uniqueness_violations += 1.0;
        }
        const std::vector<RVector> vs{v};
        const double f0 = shift_fisher_matrix(vs, s)(0, 0);
        const double f1 = shift_fisher_matrix(vs, apply_shift_write(s, v, 0.8))(0, 0);
        fisher_write = std::max(fisher_write, std::abs(f1 - f0));
    }
    c.add("gaussian_cv", "pure-state relation M Omega M = Omega/4", purity, 1e-8);
    c.add("gaussian_cv", "conjugate det m = 1/4", det_err, 1e-8);
    c.add("gaussian_cv", "conjugate pairing v^T Omega u = 1", pairing, 1e-8);
    c.add("gaussian_cv", "conjugate v^T M u = 0", cross, 1e-8);
    c.add("gaussian_cv", "conjugate uniqueness (violation count)", uniqueness_violations, 1.0);
    c.add("gaussian_cv", "Fisher invariant under shift write", fisher_write, 1e-12);

    double monotone = 0.0, prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double s = mode_entropy_from_g(1e-8 * std::pow(1e9, i / 200.0));
        monotone = std::max(monotone, prev - s);
        prev = s;
    }
    c.add("gaussian_cv", "entropy monotone in g", monotone, 1e-15);
    const double closed = std::sqrt(2.0) * std::log(1.0 + std::sqrt(2.0)) + std::log(0.5);
    c.add("gaussian_cv", "entropy at g = 1", std::abs(mode_entropy_from_g(1.0) - closed), 1e-10);
}

void check_lattice_field(Collector& c) {
    const LatticeConfig cfg{30, 0.4};
    c.add("lattice_field", "dispersion omega_15", std::abs(dispersion(cfg)(14) - std::sqrt(2.6)), 1e-12);
    const ModeMatrix mm = mode_matrix(cfg);
    c.add("lattice_field", "mode matrix inverse",
          max_abs(CMatrix(mm.a * mm.a_inv - CMatrix::Identity(mm.a.rows(), mm.a.cols()))), 1e-10);
    const GaussianState vac = vacuum_covariance(cfg);
    c.add("lattice_field", "vacuum purity", vac.purity_residual(), 1e-9);
    c.add("lattice_field", "vacuum cross-validation",
          max_abs(RMatrix(vac.covariance() - vacuum_covariance_from_modes(mm))), 1e-12);

    const std::vector<double> times{0.0, 1.0, 5.0, 25.0, 50.0};
    auto frames = figure_experiment(cfg, 15, times, Exec::parallel);
    double pairing = 0.0, det = 0.0, imag = 0.0;
    for (const auto& f : frames) {
        pairing = std::max(pairing, std::abs(f.pairing - 1.0));
        det = std::max(det, std::abs(f.det_m - 0.25));
        imag = std::max(imag, f.imag_residue);
    }
    c.add("lattice_field", "symplectic pairing", pairing, 1e-9);
    c.add("lattice_field", "stationary det m = 1/4", det, 1e-8);
    c.add("lattice_field", "imaginary residue", imag, 1e-9);

    auto shifted = figure_experiment(cfg, 18, times, Exec::parallel);
    double shift = 0.0;
    for (size_t f = 0; f < frames.size(); ++f) {
        for (size_t s = 0; s < frames[f].rows.size(); ++s) {
            const auto& a = frames[f].rows[s];
            const auto& b = shifted[f].rows[(s + 3) % frames[f].rows.size()];
            shift = std::max({shift, std::abs(a.v_q - b.v_q), std::abs(a.v_p - b.v_p), std::abs(a.u_q - b.u_q),
                              std::abs(a.u_p - b.u_p)});
        }
    }
    c.add("lattice_field", "translation covariance", shift, 1e-10);
}

void check_cli_io(Collector& c, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 5));
    auto s = GaussianState::random_pure(3, rng);
    std::stringstream buf;
    write_gaussian_state(buf, s);
    auto back = read_gaussian_state(buf);
    double diff = std::max(max_abs(RMatrix(back.covariance() - s.covariance())), max_abs(RMatrix(back.mean() - s.mean())));
    for (int i = 0; i < 100; ++i) {
        const double x = std::ldexp(std::uniform_real_distribution<double>(-1, 1)(rng), i % 40 - 20);
        diff = std::max(diff, std::abs(std::stod(format_double(x)) - x));
    }
    c.add("qic_cli", "decimal round trip", diff, std::numeric_limits<double>::min());
}

void check_extra_state(Collector& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw QicError(ErrorKind::io, "cannot open state file " + path);
    const GaussianRecord rec = read_gaussian_record(in);
    const RMatrix& m = rec.covariance;
    c.add("gaussian_cv", "GaussianState symmetry (" + path + ")", max_abs(RMatrix(m - m.transpose())), 1e-12);
    const RMatrix sym = 0.5 * (m + m.transpose());
    const RMatrix omega = symplectic_form(static_cast<int>(m.rows() / 2));
    c.add("gaussian_cv", "GaussianState purity (" + path + ")", max_abs(RMatrix(sym * omega * sym - 0.25 * omega)),
          kPurityTolerance);
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed, const std::optional<std::string>& extra_state_path) {
    Collector c;
    check_qudit_algebra(c, seed);
    check_qudit_info(c, seed);
    check_gaussian_cv(c, seed);
    check_lattice_field(c);
    check_cli_io(c, seed);
    if (extra_state_path) check_extra_state(c, *extra_state_path);
    return c.take();
}

}  // namespace qic
