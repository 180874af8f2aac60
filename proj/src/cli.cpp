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

#include "qic/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "qic/gaussian_cv.hpp"
#include "qic/lattice_field.hpp"
#include "qic/qudit_ensemble.hpp"
#include "qic/qudit_info.hpp"
#include "qic/svg_plot.hpp"
#include "qic/text_io.hpp"
#include "qic/verify.hpp"

namespace fs = std::filesystem;

namespace qic {

namespace {

/// Raised when a computed invariant misses its tolerance.
struct InvariantFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse:
        case ErrorKind::io:
        case ErrorKind::precondition:
        case ErrorKind::invalid_dimension:
            return kExitUsage;
        default:
            return kExitInvariant;
    }
}

fs::path prepare_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw QicError(ErrorKind::io, "cannot create output directory " + dir);
    return fs::path(dir);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw QicError(ErrorKind::io, "cannot write " + path.string());
    return f;
}

std::string time_label(double t) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return buf;
}

void add_config(CLI::App* sub) {
    // Listed for --help only; expand_config consumes the flag before parsing.
    sub->add_option("--config", "flat key=value file; command-line flags take precedence");
}

/// Replaces `--config FILE` by the file's entries, placed right after the
/// subcommand so that later command-line flags override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    for (size_t i = 1; i < args.size(); ++i) {
        std::string path;
        size_t used = 0;
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw QicError(ErrorKind::parse, "--config needs a file name");
            path = args[i + 1];
            used = 2;
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            used = 1;
        } else {
            continue;
        }
        if (!fs::is_regular_file(path)) throw QicError(ErrorKind::io, "cannot read config file " + path);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + used));
        std::vector<CLI::ConfigItem> items;
        try {
            items = CLI::ConfigINI().from_file(path);
        } catch (const CLI::Error& e) {
            throw QicError(ErrorKind::parse, "config file " + path + ": " + e.what());
        }
        std::vector<std::string> injected;
        for (const auto& item : items) {
            if (item.name == "++" || item.name == "--") continue;
            if (item.inputs.empty()) {
                injected.push_back("--" + item.name);
                continue;
            }
            std::string joined;
            for (const auto& value : item.inputs) joined += (joined.empty() ? "" : ",") + value;
            injected.push_back("--" + item.name + "=" + joined);
        }
        size_t sub = 1;
        while (sub < args.size() && args[sub].rfind("-", 0) == 0) ++sub;
        const size_t at = std::min(sub + 1, args.size());
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
        break;
    }
    return args;
}

// ---------------------------------------------------------------------------

struct LatticeOptions {
    int sites = 30;
    double eta = 0.4;
    int write_site = 15;
    std::string times = "0,25,50";
    std::string out = "qic_out";
    std::string formats = "csv,svg";
    std::uint64_t seed = 0;
    bool serial = false;
};

int cmd_lattice_evolve(const LatticeOptions& o, std::ostream& out) {
    bool want_csv = false, want_svg = false;
    {
        std::stringstream ss(o.formats);
        std::string f;
        while (std::getline(ss, f, ',')) {
            if (f == "csv") want_csv = true;
            else if (f == "svg") want_svg = true;
            else throw QicError(ErrorKind::parse, "unknown format '" + f + "' (expected csv, svg)");
        }
    }
    const std::vector<double> times = parse_real_list(o.times);
    if (times.empty()) throw QicError(ErrorKind::parse, "--times needs at least one value");
    const LatticeConfig cfg{o.sites, o.eta};
    if (o.sites < 1) throw QicError(ErrorKind::precondition, "--sites must be at least 1");

    const auto frames = figure_experiment(cfg, o.write_site, times, o.serial ? Exec::serial : Exec::parallel);
    const fs::path dir = prepare_dir(o.out);

    for (const auto& f : frames) {
        const std::string stem = "lattice_t" + time_label(f.t);
        if (want_csv) {
            auto file = open_out(dir / (stem + ".csv"));
            CsvWriter csv(file, {"site", "v_q", "v_p", "u_q", "u_p"});
            for (const auto& r : f.rows) csv.row(std::vector<double>{static_cast<double>(r.site), r.v_q, r.v_p, r.u_q, r.u_p});
        }
        if (want_svg) {
            std::vector<PlotSeries> series{{"v_q", "#1f77b4", {}, {}},
                                           {"v_p", "#ff7f0e", {}, {}},
                                           {"u_q", "#2ca02c", {}, {}},
                                           {"u_p", "#d62728", {}, {}}};
            for (const auto& r : f.rows) {
                const double vals[4] = {r.v_q, r.v_p, r.u_q, r.u_p};
                for (int k = 0; k < 4; ++k) {
                    series[k].x.push_back(r.site);
                    series[k].y.push_back(vals[k]);
                }
            }
            auto file = open_out(dir / (stem + ".svg"));
            write_svg_line_plot(file, "QIC weighting profiles, t = " + time_label(f.t), "site", series);
        }
    }

    std::vector<std::string> failures;
    {
        auto file = open_out(dir / "lattice_invariants.csv");
        CsvWriter csv(file, {"t", "pairing", "det_m", "imag_residue", "status"});
        for (const auto& f : frames) {
            const bool pair_ok = std::abs(f.pairing - 1.0) < 1e-9;
            const bool det_ok = std::abs(f.det_m - 0.25) < 1e-8;
            const bool imag_ok = f.imag_residue < 1e-9;
            if (!pair_ok) failures.push_back("symplectic pairing at t=" + time_label(f.t));
            if (!det_ok) failures.push_back("det m = 1/4 at t=" + time_label(f.t));
            if (!imag_ok) failures.push_back("imaginary residue at t=" + time_label(f.t));
            csv.row(std::vector<std::string>{format_double(f.t), format_double(f.pairing), format_double(f.det_m),
                                             format_double(f.imag_residue), pair_ok && det_ok && imag_ok ? "pass" : "fail"});
        }
    }
    {
        auto file = open_out(dir / "lattice_run.txt");
        file << "sites=" << o.sites << "\neta=" << format_double(o.eta) << "\nwrite_site=" << o.write_site
             << "\ntimes=" << o.times << "\nseed=" << o.seed << "\nrng=" << kRngName << "\n";
    }
    out << "lattice-evolve: " << frames.size() << " time(s) written to " << dir.string() << "\n";
    if (!failures.empty()) {
        std::string msg = "invariant violated: " + failures.front();
        throw InvariantFailure(msg);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SuiteOptions {
    int d = 2;
    int n = 2;
    int trials = 50;
    std::optional<std::uint64_t> seed;
    double theta = 1.3;
    std::string out = "qic_out";
    bool serial = false;
};

int cmd_qudit_suite(const SuiteOptions& o, std::ostream& out) {
    if (o.d < 2 || o.d > 4) throw QicError(ErrorKind::precondition, "--d must be 2, 3 or 4");
    if (o.n < 2 || o.n > 3) throw QicError(ErrorKind::precondition, "--n must be 2 or 3");
    if (o.trials < 1) throw QicError(ErrorKind::precondition, "--trials must be at least 1");
    if (!o.seed) throw QicError(ErrorKind::precondition, "--seed is required for randomized runs");

    const auto results = run_qudit_trials(o.d, o.n, o.trials, *o.seed, o.theta, o.serial ? Exec::serial : Exec::parallel);
    const QuditTrialResult w = worst_case(results);
    struct Row {
        const char* name;
        double value;
        double tol;
    };
    const Row rows[] = {{"qic_purity", w.qic_purity, 1e-8},
                        {"qic_commutation", w.qic_commutation, 1e-9},
                        {"swap_residual_distance", w.swap_residual_distance, 1e-7},
                        {"extracted_infidelity", w.extracted_infidelity, 1e-7},
                        {"partner_purity", w.partner_purity, 1e-8},
                        {"partner_locality", w.partner_locality, 1e-9},
                        {"partner_write", w.partner_write, 1e-8}};

    const fs::path dir = prepare_dir(o.out);
    std::vector<std::string> failures;
    {
        auto file = open_out(dir / "qudit_suite.csv");
        CsvWriter csv(file, {"invariant", "worst_residual", "tolerance", "status"});
        for (const auto& r : rows) {
            const bool ok = r.value < r.tol;
            if (!ok) failures.push_back(r.name);
            csv.row(std::vector<std::string>{r.name, format_double(r.value), format_double(r.tol), ok ? "pass" : "fail"});
        }
    }
    {
        auto file = open_out(dir / "qudit_suite_run.txt");
        file << "rng=" << kRngName << "\nseed=" << *o.seed << "\nd=" << o.d << "\nn=" << o.n << "\ntrials=" << o.trials
             << "\ntheta=" << format_double(o.theta) << "\n";
    }
    out << "qudit-suite: d=" << o.d << " N=" << o.n << " trials=" << o.trials << " "
        << (failures.empty() ? "all invariants pass" : "FAILED") << "\n";
    if (!failures.empty()) throw InvariantFailure("invariant violated: " + failures.front());
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct GaussianOptions {
    std::string state;
    std::vector<std::string> vs;
    std::string out = "qic_out";
};

int cmd_gaussian_conj(const GaussianOptions& o, std::ostream& out) {
    std::ifstream in(o.state);
    if (!in) throw QicError(ErrorKind::io, "cannot open state file " + o.state);
    const GaussianState state = read_gaussian_state(in);
    state.require_pure();

    std::vector<RVector> vs;
    for (const auto& text : o.vs) {
        const auto vals = parse_real_list(text);
        if (static_cast<Eigen::Index>(vals.size()) != state.mean().size()) {
            throw QicError(ErrorKind::parse, "--v '" + text + "' needs " + std::to_string(state.mean().size()) + " entries");
        }
        vs.push_back(Eigen::Map<const RVector>(vals.data(), static_cast<Eigen::Index>(vals.size())));
    }

    const fs::path dir = prepare_dir(o.out);
    {
        auto file = open_out(dir / "gaussian_summary.csv");
        CsvWriter csv(file, {"index", "m_qq", "m_qp", "m_pp", "det_m", "entropy", "pairing"});
        for (size_t i = 0; i < vs.size(); ++i) {
            const ModePair pair = conjugate_qic_vector(vs[i], state);
            const ModeCovariance m = mode_covariance(pair, state);
            csv.row(std::vector<double>{static_cast<double>(i + 1), m.m(0, 0), m.m(0, 1), m.m(1, 1), m.det(),
                                        mode_entropy(m), pair.pairing()});
            auto pf = open_out(dir / ("modepair_" + std::to_string(i + 1) + ".txt"));
            write_mode_pair(pf, pair);
            auto sf = open_out(dir / ("cvswap_" + std::to_string(i + 1) + ".txt"));
            write_cv_swap(sf, cv_swap_generator(pair));
        }
    }
    if (vs.size() >= 2) {
        const MultiparamReport rep = multiparam_conditions(vs, state);
        auto file = open_out(dir / "multiparam.csv");
        CsvWriter csv(file, {"i", "j", "v_i^T Omega v_j", "v_i^T M v_j", "v_i^T Omega u_j", "flag"});
        for (Eigen::Index i = 0; i < rep.symplectic_products.rows(); ++i) {
            for (Eigen::Index j = 0; j < rep.symplectic_products.cols(); ++j) {
                if (i == j) continue;
                const double so = rep.symplectic_products(i, j);
                const double cm = rep.covariance_products(i, j);
                std::string flag = "ok";
                if (std::abs(so) >= 1e-12) flag = "non-commuting";
                else if (std::abs(cm) >= 1e-12) flag = "correlated";
                csv.row(std::vector<std::string>{std::to_string(i + 1), std::to_string(j + 1), format_double(so),
                                                 format_double(cm),
                                                 rep.independent && rep.commuting ? format_double(rep.cross_pairings(i, j)) : "",
                                                 flag});
            }
        }
        auto summary = open_out(dir / "multiparam_summary.txt");
        summary << "commuting=" << (rep.commuting ? "true" : "false") << "\nindependent=" << (rep.independent ? "true" : "false")
                << "\ncross_pairing_error=" << format_double(rep.cross_pairing_error) << "\n";
        out << "gaussian-conj: commuting=" << rep.commuting << " independent=" << rep.independent << "\n";
    }
    out << "gaussian-conj: " << vs.size() << " mode pair(s) written to " << dir.string() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_qudit_demo(std::ostream& out) {
    CVector bell = CVector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const PureState state(2, 2, bell);
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    const WriteOperation w = WriteOperation::local(z, 2);
    const QicConstruction qic = construct_qic(w, state);
    auto fmt = [](const CVector& v) {
        std::string s;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += format_double(v(i).real());
            if (v(i).imag() != 0.0) s += (v(i).imag() < 0 ? "-" : "+") + format_double(std::abs(v(i).imag())) + "i";
        }
        return s;
    };
    out << "Bell state, t = sigma_z on the first qubit\n";
    out << "capsule:   " << fmt(qic.capsule) << "\n";
    out << "reference: " << fmt(qic.reference) << "\n";
    out << "purity:    " << format_double(qic.state.purity()) << "\n";
    for (double th : {0.0, 1.0}) {
        const SwapRetrieval r = retrieve_by_swap(qic.qudit, w.apply(th, state));
        const double fid = std::real((w.local_unitary(th) * qic.capsule).dot(r.extracted * (w.local_unitary(th) * qic.capsule)));
        out << "theta=" << format_double(th) << " extracted fidelity " << format_double(fid) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::optional<std::string> out;
    std::optional<std::string> extra_state;
    std::uint64_t seed = 20240601;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const auto results = run_verification(o.seed, o.extra_state);
    std::map<std::string, std::pair<int, int>> per_module;  // passed, total
    std::vector<const CheckResult*> failed;
    for (const auto& r : results) {
        auto& cnt = per_module[r.module];
        ++cnt.second;
        if (r.passed) ++cnt.first;
        else failed.push_back(&r);
    }
    if (o.out) {
        const fs::path dir = prepare_dir(*o.out);
        auto file = open_out(dir / "verify.csv");
        CsvWriter csv(file, {"module", "invariant", "value", "tolerance", "status"});
        for (const auto& r : results) {
            csv.row(std::vector<std::string>{r.module, r.invariant, format_double(r.value), format_double(r.tolerance),
                                             r.passed ? "pass" : "fail"});
        }
    }
    out << "verify: seed=" << o.seed << " rng=" << kRngName << "\n";
    for (const auto& [module, cnt] : per_module) {
        out << "  " << module << ": " << cnt.first << "/" << cnt.second << " checks passed\n";
    }
    for (const auto* r : failed) {
        out << "  FAIL " << r->module << ": " << r->invariant << " = " << format_double(r->value) << " (tolerance "
            << format_double(r->tolerance) << ")\n";
    }
    if (!failed.empty()) {
        throw InvariantFailure("invariant violated: " + failed.front()->module + ": " + failed.front()->invariant);
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum information capsule toolkit", "qic"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    LatticeOptions lat;
    auto* le = app.add_subcommand("lattice-evolve", "Evolve the QIC weighting vectors of a periodic lattice field");
    add_config(le);
    le->add_option("--sites", lat.sites, "number of lattice sites N")->capture_default_str();
    le->add_option("--eta", lat.eta, "coupling eta = 1/(m eps)^2")->capture_default_str();
    le->add_option("--write-site", lat.write_site, "1-based site of the write q_s")->capture_default_str();
    le->add_option("--times", lat.times, "comma-separated times")->capture_default_str();
    le->add_option("--out", lat.out, "output directory")->capture_default_str();
    le->add_option("--formats", lat.formats, "subset of csv,svg")->capture_default_str();
    le->add_option("--seed", lat.seed, "recorded for reproducibility (the run is deterministic)")->capture_default_str();
    le->add_flag("--serial", lat.serial, "use the serial reference loop");

    SuiteOptions suite;
    auto* qs = app.add_subcommand("qudit-suite", "Random-ensemble checks of QIC, SWAP retrieval and partners");
    qs->alias("qudit-random-suite");
    add_config(qs);
    qs->add_option("--d", suite.d, "local dimension (2, 3 or 4)")->capture_default_str();
    qs->add_option("--n", suite.n, "number of sites (2 or 3)")->capture_default_str();
    qs->add_option("--trials", suite.trials, "number of random trials")->capture_default_str();
    qs->add_option("--seed", suite.seed, "64-bit seed");
    qs->add_option("--theta", suite.theta, "write angle")->capture_default_str();
    qs->add_option("--out", suite.out, "output directory")->capture_default_str();
    qs->add_flag("--serial", suite.serial, "use the serial reference loop");

    GaussianOptions gauss;
    auto* gc = app.add_subcommand("gaussian-conj", "Conjugate QIC modes of a Gaussian state");
    gc->alias("gaussian-conjugate");
    add_config(gc);
    gc->add_option("--state", gauss.state, "state file")->required();
    gc->add_option("--v", gauss.vs, "weighting vector as comma-separated reals (repeatable)")
        ->required()
        ->allow_extra_args(false)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    gc->add_option("--out", gauss.out, "output directory")->capture_default_str();

    auto* demo = app.add_subcommand("qudit-demo", "Bell-state QIC walk-through");

    VerifyOptions ver;
    auto* vf = app.add_subcommand("verify", "Run every module's invariant checks");
    add_config(vf);
    vf->add_option("--out", ver.out, "directory for verify.csv");
    vf->add_option("--extra-state", ver.extra_state, "additional state file to validate");
    vf->add_option("--seed", ver.seed, "64-bit seed")->capture_default_str();

    try {
        std::vector<std::string> args = expand_config(std::vector<std::string>(argv, argv + argc));
        std::vector<const char*> cargs;
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const QicError& e) {
        err << "qic: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qic: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (le->parsed()) return cmd_lattice_evolve(lat, out);
        if (qs->parsed()) return cmd_qudit_suite(suite, out);
        if (gc->parsed()) return cmd_gaussian_conj(gauss, out);
        if (demo->parsed()) return cmd_qudit_demo(out);
        if (vf->parsed()) return cmd_verify(ver, out);
    } catch (const InvariantFailure& e) {
        err << "qic: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const QicError& e) {
        err << "qic: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "qic: internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}

}  // namespace qic
