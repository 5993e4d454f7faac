// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Tolerances are fixed below.

#include "augkaf/baselines.hpp"
#include "augkaf/channel.hpp"
#include "augkaf/config.hpp"
#include "augkaf/kernel_filters.hpp"
#include "augkaf/linear_filters.hpp"
#include "test_support.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

using namespace augkaf;
using namespace augkaf::testing;
namespace fs = std::filesystem;

namespace {

// pinned tolerances
constexpr double kFig1GapMinDb = 1.0;
constexpr double kFig1GapMaxDb = 3.0;
constexpr double kFig1MaxSeconds = 300.0;
constexpr double kCircularGapDb = 0.5;
constexpr double kLinearPairGapDb = 0.5;
constexpr double kKernelOverLinearDb = 3.0;
constexpr double kDegeneracyTol = 1e-10;
constexpr std::size_t kDegeneracySamples = 500;
constexpr double kDegeneracyMaxSeconds = 1.0;
constexpr std::size_t kDecompositionCases = 1000;
constexpr double kDecompositionTol = 1e-12;
constexpr std::size_t kGradientConfigs = 100;
constexpr double kGradientTol = 1e-5;
constexpr double kMlpGradientTol = 1e-4;
constexpr double kSmoothRegion = kTanhImagClamp - 0.05; // |Im| bound on tanh pre-activations
constexpr std::size_t kStatSamples = 100000;
constexpr double kPseudoCovTol = 0.01;
constexpr double kSnrTolDb = 0.2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Report {
    bool all_pass = true;

    void line(int id, bool pass, const std::string& detail) {
        all_pass = all_pass && pass;
        std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
        std::fflush(stdout);
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double steady(const ExperimentResult& r, const std::string& name) {
    for (const auto& row : r.summary)
        if (row.name == name) return row.steady_state_db;
    throw std::runtime_error("no algorithm named " + name);
}

void fig1(Report& rep) {
    const auto cfg_b = paper_fig1_config(PresetScale::Fast, false);
    const auto t0 = Clock::now();
    const auto b = run_experiment(cfg_b, Execution::Serial);
    const double secs = seconds_since(t0);
    const double k2 = steady(b, "NCKLMS2"), ak = steady(b, "NACKLMS");
    const double lin = steady(b, "NCLMS"), alin = steady(b, "NACLMS");
    const double gap = k2 - ak;
    rep.line(1, gap >= kFig1GapMinDb && gap <= kFig1GapMaxDb && secs < kFig1MaxSeconds,
             fmt("non-circular NCKLMS2 %.2f dB, NACKLMS %.2f dB, gap %.2f dB (want %.1f..%.1f); serial %.1f s (want < %.0f)",
                 k2, ak, gap, kFig1GapMinDb, kFig1GapMaxDb, secs, kFig1MaxSeconds));

    const auto a = run_experiment(paper_fig1_config(PresetScale::Fast, true));
    const double ck2 = steady(a, "NCKLMS2"), cak = steady(a, "NACKLMS");
    rep.line(2, std::abs(ck2 - cak) < kCircularGapDb,
             fmt("circular NCKLMS2 %.2f dB, NACKLMS %.2f dB, |gap| %.2f dB (want < %.1f)", ck2, cak,
                 std::abs(ck2 - cak), kCircularGapDb));

    const double pair_gain = lin - alin;
    const double worst_kernel = std::max(k2, ak), best_linear = std::min(lin, alin);
    const double margin = best_linear - worst_kernel;
    rep.line(3, pair_gain < kLinearPairGapDb && margin > kKernelOverLinearDb,
             fmt("NCLMS %.2f dB, NACLMS %.2f dB, pair gain %.2f dB (want < %.1f); "
                 "kernel-over-linear margin %.2f dB (want > %.1f)",
                 lin, alin, pair_gain, kLinearPairGapDb, margin, kKernelOverLinearDb));
}

void degeneracy(Report& rep) {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(4004);
    double worst = 0.0;
    bool admissions_agree = true;
    for (bool normalized : {true, false}) {
        KernelFilterConfig lin_cfg, aug_cfg;
        lin_cfg.kernel = aug_cfg.kernel = RealKernel(GaussianRbf{2.0});
        lin_cfg.mode = KernelMode::ComplexifiedLinear;
        aug_cfg.mode = KernelMode::ComplexifiedAugmented;
        aug_cfg.mu = 0.1;
        lin_cfg.mu = 2.0 * aug_cfg.mu;
        lin_cfg.normalized = aug_cfg.normalized = normalized;
        KernelLms lin(lin_cfg), aug(aug_cfg);
        for (std::size_t n = 0; n < kDegeneracySamples; ++n) {
            const auto z = random_vec(gen, 5, 0.8);
            const cplx d = random_complex(gen, 0.8);
            const auto x = aug.step(z, d), y = lin.step(z, d);
            worst = std::max(worst, std::abs(x.error - y.error));
            admissions_agree = admissions_agree && x.admitted == y.admitted;
        }
    }
    const double secs = seconds_since(t0);
    rep.line(4, worst <= kDegeneracyTol && admissions_agree && secs < kDegeneracyMaxSeconds,
             fmt("max |e_aug - e_lin| %.2e over %zu samples x2 (want <= %.0e); %.3f s (want < %.0f)", worst,
                 kDegeneracySamples, kDegeneracyTol, secs, kDegeneracyMaxSeconds));
}

void decomposition(Report& rep) {
    std::mt19937_64 gen(5005);
    double worst = 0.0;
    for (std::size_t t = 0; t < kDecompositionCases; ++t) {
        const std::size_t n = 1 + t % 8;
        RealOperatorBlocks b{random_real(gen, n), random_real(gen, n), random_real(gen, n), random_real(gen, n)};
        const auto z = random_vec(gen, n);
        const auto [w, v] = decompose_operator(b);
        // independent real evaluation: [u11 u12; u21 u22] [x; y], real part plus i times imaginary part
        double re = 0.0, im = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            re += b.u11[k] * z[k].real() + b.u12[k] * z[k].imag();
            im += b.u21[k] * z[k].real() + b.u22[k] * z[k].imag();
        }
        const cplx rhs = hermitian_dot(z, w) + hermitian_dot(z.conj(), v);
        worst = std::max(worst, std::abs(cplx{re, im} - rhs));
    }
    rep.line(5, worst < kDecompositionTol,
             fmt("max reconstruction error %.2e over %zu cases (want < %.0e)", worst, kDecompositionCases,
                 kDecompositionTol));
}

void gradients(Report& rep) {
    std::mt19937_64 gen(6006);
    double worst_lin = 0.0, worst_wl = 0.0, worst_kernel = 0.0, worst_cngd = 0.0, worst_mlp = 0.0;

    for (std::size_t t = 0; t < kGradientConfigs; ++t) {
        const std::size_t n = 1 + t % 5;
        ComplexVec w = random_vec(gen, n), v = random_vec(gen, n), zero(n);
        const auto z = random_vec(gen, n);
        const cplx d = random_complex(gen, 2.0);
        const auto lin = linear_descent_direction(w, zero, z, d);
        const auto wl = linear_descent_direction(w, v, z, d);
        auto lin_loss = [&] { return std::norm(d - hermitian_dot(z, w)); };
        auto wl_loss = [&] { return std::norm(d - hermitian_dot(z, w) - hermitian_dot(z.conj(), v)); };
        for (std::size_t k = 0; k < n; ++k) {
            const cplx g = wirtinger_fd(w[k], [&](cplx p) { w[k] = p; }, lin_loss);
            worst_lin = std::max(worst_lin, rel_err(lin.w_direction[k], -g));
            const cplx gw = wirtinger_fd(w[k], [&](cplx p) { w[k] = p; }, wl_loss);
            const cplx gv = wirtinger_fd(v[k], [&](cplx p) { v[k] = p; }, wl_loss);
            worst_wl = std::max({worst_wl, rel_err(wl.w_direction[k], -gw), rel_err(wl.v_direction[k], -gv)});
        }
    }

    const KernelMode modes[] = {KernelMode::PureComplexLinear, KernelMode::PureComplexAugmented,
                                KernelMode::ComplexifiedLinear, KernelMode::ComplexifiedAugmented};
    for (std::size_t t = 0; t < kGradientConfigs; ++t) {
        const auto mode = modes[t % 4];
        KernelFilterConfig cfg;
        cfg.mode = mode;
        if (uses_real_kernel(mode))
            cfg.kernel = RealKernel(GaussianRbf{1.5});
        else
            cfg.kernel = ComplexKernel(3.0);
        KernelLms f(cfg);
        for (int k = 0; k < 3; ++k) f.dictionary().append(random_vec(gen, 3, 0.8), random_complex(gen));
        const auto z = random_vec(gen, 3, 0.8);
        const cplx d = random_complex(gen, 2.0);
        const auto dir = f.coefficient_descent_direction(z, d);
        auto& coeffs = f.dictionary().coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const cplx g = wirtinger_fd(coeffs[k], [&](cplx p) { coeffs[k] = p; },
                                        [&] { return std::norm(d - f.predict(z)); });
            worst_kernel = std::max(worst_kernel, rel_err(dir[k], -g));
        }
    }

    for (std::size_t t = 0; t < kGradientConfigs; ++t) {
        const std::size_t n = 1 + t % 5;
        CngdParams p;
        ComplexVec z;
        do {
            p = {random_vec(gen, n, 0.4), random_complex(gen, 0.3)};
            z = random_vec(gen, n, 0.8);
        } while (!preactivations_within({p.w.conj()}, ComplexVec{p.bias}, ComplexVec{{1.0, 0.0}}, {0.0, 0.0}, z, true,
                                        kSmoothRegion));
        const cplx d = random_complex(gen, 0.9);
        const auto dir = cngd_descent(p, z, d).direction;
        auto loss = [&] { return cngd_loss(p, z, d); };
        for (std::size_t k = 0; k < n; ++k) {
            const cplx g = wirtinger_fd(p.w[k], [&](cplx q) { p.w[k] = q; }, loss);
            worst_cngd = std::max(worst_cngd, rel_err(dir.w[k], -g));
        }
        const cplx gb = wirtinger_fd(p.bias, [&](cplx q) { p.bias = q; }, loss);
        worst_cngd = std::max(worst_cngd, rel_err(dir.bias, -gb));
    }

    for (std::size_t t = 0; t < kGradientConfigs; ++t) {
        const bool linear_output = t % 4 == 3;
        const std::size_t n = 1 + t % 5;
        const std::size_t h = t % 10 == 0 ? 50 : 1 + t % 7;
        MlpParams p = MlpParams::zeros(n, h);
        ComplexVec z;
        do {
            for (auto& row : p.hidden_weights) row = random_vec(gen, n, 0.5);
            p.hidden_bias = random_vec(gen, h, 0.3);
            p.out_weights = random_vec(gen, h, 0.5);
            p.out_bias = random_complex(gen, 0.3);
            z = random_vec(gen, n, 0.8);
        } while (!preactivations_within(p.hidden_weights, p.hidden_bias, p.out_weights, p.out_bias, z, linear_output,
                                        kSmoothRegion));
        const cplx d = random_complex(gen, 0.9);
        const auto dir = mlp_descent(p, z, d, linear_output).direction;
        auto loss = [&] { return mlp_loss(p, z, d, linear_output); };
        auto check = [&](cplx& param, cplx expected) {
            const cplx g = wirtinger_fd(param, [&](cplx q) { param = q; }, loss);
            worst_mlp = std::max(worst_mlp, rel_err(expected, -g));
        };
        for (std::size_t j = 0; j < h; ++j) {
            for (std::size_t k = 0; k < n; ++k) check(p.hidden_weights[j][k], dir.hidden_weights[j][k]);
            check(p.hidden_bias[j], dir.hidden_bias[j]);
            check(p.out_weights[j], dir.out_weights[j]);
        }
        check(p.out_bias, dir.out_bias);
    }

    const bool pass = worst_lin < kGradientTol && worst_wl < kGradientTol && worst_kernel < kGradientTol &&
                      worst_cngd < kGradientTol && worst_mlp < kMlpGradientTol;
    rep.line(6, pass,
             fmt("max rel err over %zu configs each: NCLMS %.1e, NACLMS %.1e, kernel %.1e, CNGD %.1e (want < %.0e), "
                 "MLP %.1e (want < %.0e)",
                 kGradientConfigs, worst_lin, worst_wl, worst_kernel, worst_cngd, kGradientTol, worst_mlp,
                 kMlpGradientTol));
}

void statistics(Report& rep) {
    SeededRng rng(7007);
    const auto s = gen_input({std::numbers::sqrt2 / 2.0, 0.70}, kStatSamples, rng);
    cplx pc{0.0, 0.0};
    for (const auto& v : s) pc += v * v;
    pc /= static_cast<double>(s.size());

    const auto q = soft_channel(gen_input({0.1, 0.70}, kStatSamples, rng)).distorted;
    double worst_snr = 0.0;
    for (double target : {5.0, 15.0, 25.0}) {
        const auto r = add_noise(q, target, rng);
        double signal = 0.0, noise = 0.0;
        for (std::size_t n = 0; n < q.size(); ++n) {
            signal += std::norm(q[n]);
            noise += std::norm(r[n] - q[n]);
        }
        worst_snr = std::max(worst_snr, std::abs(10.0 * std::log10(signal / noise) - target));
    }
    rep.line(7, std::abs(pc) < kPseudoCovTol && worst_snr <= kSnrTolDb,
             fmt("|pseudo-covariance| %.4f (want < %.2f); worst SNR error %.3f dB at 5/15/25 dB (want <= %.1f)",
                 std::abs(pc), kPseudoCovTol, worst_snr, kSnrTolDb));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return {};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void determinism(Report& rep, const std::string& cli, const fs::path& workdir) {
    if (cli.empty()) {
        rep.line(8, false, "no --cli given");
        return;
    }
    bool ok = true;
    std::string detail;
    fs::path dirs[2] = {workdir / "run1", workdir / "run2"};
    for (const auto& dir : dirs) {
        fs::remove_all(dir);
        const std::string cmd = "\"" + cli + "\" paper-fig1 --scale fast --seed 1 --out \"" + dir.string() + "\" > \"" +
                                (workdir / (dir.filename().string() + ".log")).string() + "\" 2>&1";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) {
            ok = false;
            detail += fmt("command exited %d; ", rc);
        }
    }
    for (const char* file : {"curves.csv", "summary.csv"}) {
        const auto a = slurp(dirs[0] / file), b = slurp(dirs[1] / file);
        const bool same = !a.empty() && a == b;
        ok = ok && same;
        detail += fmt("%s %s (%zu bytes); ", file, same ? "identical" : "DIFFER", a.size());
    }
    rep.line(8, ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"augkaf acceptance runner"};
    std::string cli;
    std::string workdir = (fs::temp_directory_path() / "augkaf_acceptance").string();
    app.add_option("--cli", cli, "path to the augkaf executable");
    app.add_option("--workdir", workdir, "scratch directory for CLI runs");
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(workdir);

    Report rep;
    try {
        fig1(rep);
        degeneracy(rep);
        decomposition(rep);
        gradients(rep);
        statistics(rep);
        determinism(rep, cli, workdir);
    } catch (const std::exception& ex) {
        std::printf("acceptance aborted: %s\n", ex.what());
        return 2;
    }
    std::printf("%s\n", rep.all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return rep.all_pass ? 0 : 1;
}
