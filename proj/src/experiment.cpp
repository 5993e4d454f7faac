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

#include "augkaf/experiment.hpp"

#include "augkaf/baselines.hpp"
#include "augkaf/kernel_filters.hpp"
#include "augkaf/linear_filters.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#ifdef AUGKAF_HAVE_OPENMP
#include <omp.h>
#endif

namespace augkaf {

namespace {

struct KindName {
    AlgorithmKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {AlgorithmKind::Nclms, "nclms"},
    {AlgorithmKind::Naclms, "naclms"},
    {AlgorithmKind::Ncklms1, "ncklms1"},
    {AlgorithmKind::Ncklms2, "ncklms2"},
    {AlgorithmKind::Nacklms, "nacklms"},
    {AlgorithmKind::AcklmsComplexified, "acklms-complexified"},
    {AlgorithmKind::Cngd, "cngd"},
    {AlgorithmKind::Mlp, "mlp"},
};

KernelFilterConfig kernel_config(const AlgorithmConfig& a) {
    KernelFilterConfig k;
    switch (a.kind) {
    case AlgorithmKind::Ncklms1:
        k.kernel = RealKernel(GaussianRbf{a.sigma});
        k.mode = KernelMode::ComplexifiedLinear;
        break;
    case AlgorithmKind::AcklmsComplexified:
        k.kernel = RealKernel(GaussianRbf{a.sigma});
        k.mode = KernelMode::ComplexifiedAugmented;
        break;
    case AlgorithmKind::Ncklms2:
        k.kernel = ComplexKernel(a.sigma);
        k.mode = KernelMode::PureComplexLinear;
        break;
    case AlgorithmKind::Nacklms:
        k.kernel = ComplexKernel(a.sigma);
        k.mode = KernelMode::PureComplexAugmented;
        break;
    default: throw ConfigError("algorithm '" + a.name + "' is not a kernel filter");
    }
    k.mu = a.mu;
    k.epsilon = a.epsilon;
    k.delta1 = a.delta1;
    k.delta2 = a.delta2;
    k.normalized = a.normalized;
    k.capacity = a.capacity;
    return k;
}

std::string fixed6(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

} // namespace

std::string to_string(AlgorithmKind kind) {
    for (const auto& kn : kKindNames)
        if (kn.kind == kind) return kn.name;
    return "unknown";
}

AlgorithmKind parse_algorithm_kind(const std::string& text) {
    for (const auto& kn : kKindNames)
        if (text == kn.name) return kn.kind;
    throw ConfigError("unknown algorithm type '" + text + "'");
}

bool is_kernel_algorithm(AlgorithmKind kind) noexcept {
    return kind == AlgorithmKind::Ncklms1 || kind == AlgorithmKind::Ncklms2 ||
           kind == AlgorithmKind::Nacklms || kind == AlgorithmKind::AcklmsComplexified;
}

std::string to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::Soft: return "soft";
    case ChannelKind::Strong: return "strong";
    case ChannelKind::Custom: return "custom";
    }
    return "unknown";
}

void ExperimentConfig::validate() const {
    try {
        channel.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (!(rho >= 0.0 && rho <= 1.0)) throw ConfigError("rho must lie in [0, 1]");
    if (std::isnan(snr_db) || snr_db == -INFINITY) throw ConfigError("snr_db must be a number or inf");
    if (filter_length == 0) throw ConfigError("filter_length must be positive");
    if (samples < filter_length) throw ConfigError("samples must be >= filter_length");
    if (trials == 0) throw ConfigError("trials must be >= 1");
    if (!(steady_fraction > 0.0 && steady_fraction <= 1.0))
        throw ConfigError("steady_fraction must lie in (0, 1]");
    if (algorithms.empty()) throw ConfigError("no algorithms configured");

    std::set<std::string> seen;
    for (const auto& a : algorithms) {
        if (a.name.empty()) throw ConfigError("algorithm with empty name");
        if (!seen.insert(a.name).second) throw ConfigError("duplicate algorithm name '" + a.name + "'");
        // constructing the filter runs every per-algorithm check
        try {
            (void)make_filter(a, filter_length, 0);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError("algorithm '" + a.name + "': " + e.what());
        }
    }
}

std::unique_ptr<AdaptiveFilter> make_filter(const AlgorithmConfig& a, std::size_t length,
                                            std::uint64_t init_seed) {
    switch (a.kind) {
    case AlgorithmKind::Nclms:
    case AlgorithmKind::Naclms: {
        LinearFilterConfig c;
        c.length = length;
        c.mu = a.mu;
        c.epsilon = a.epsilon;
        c.normalized = a.normalized;
        c.widely_linear = a.kind == AlgorithmKind::Naclms;
        return std::make_unique<LinearFilter>(c);
    }
    case AlgorithmKind::Cngd: {
        CngdConfig c;
        c.length = length;
        c.mu = a.mu;
        c.init_scale = a.init_scale;
        return std::make_unique<Cngd>(c, init_seed);
    }
    case AlgorithmKind::Mlp: {
        MlpConfig c;
        c.length = length;
        c.hidden = a.hidden;
        c.mu = a.mu;
        c.init_scale = a.init_scale;
        c.linear_output = a.linear_output;
        return std::make_unique<Mlp>(c, init_seed);
    }
    default: return std::make_unique<KernelLms>(kernel_config(a));
    }
}

std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t trial) noexcept {
    return config.base_seed + trial;
}

std::uint64_t init_seed(std::uint64_t trial_seed, std::size_t algorithm_index) noexcept {
    return mix_seed(trial_seed, algorithm_index + 1);
}

EqualizationDataset generate_trial_data(const ExperimentConfig& config, std::size_t trial) {
    SeededRng rng(trial_seed(config, trial));
    const std::size_t n_source = config.samples + config.delay;
    const auto s = gen_input(InputModel{config.rho, 0.70}, n_source, rng);
    const auto channel = apply_channel(config.channel, s);
    const auto r = add_noise(channel.distorted, config.snr_db, rng);
    return make_dataset(r, std::span<const cplx>(s).first(config.samples), config.filter_length, config.delay);
}

TrialResult run_trial(const ExperimentConfig& config, std::size_t trial) {
    const auto data = generate_trial_data(config, trial);
    const std::uint64_t seed = trial_seed(config, trial);

    TrialResult out;
    out.data_hash = fingerprint(data);
    out.squared_errors.resize(config.algorithms.size());
    out.dictionary_sizes.resize(config.algorithms.size());
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        auto filter = make_filter(config.algorithms[a], config.filter_length, init_seed(seed, a));
        auto& trace = out.squared_errors[a];
        trace.resize(data.size());
        for (std::size_t n = 0; n < data.size(); ++n)
            trace[n] = std::norm(filter->update(data.inputs[n], data.targets[n]));
        out.dictionary_sizes[a] = filter->dictionary_size();
    }
    return out;
}

std::vector<double> LearningCurve::db() const {
    std::vector<double> out(mse.size());
    std::transform(mse.begin(), mse.end(), out.begin(), [](double v) { return 10.0 * std::log10(v); });
    return out;
}

double steady_state_db(const LearningCurve& curve, double fraction) {
    if (curve.mse.empty()) throw std::invalid_argument("steady_state_db: empty curve");
    if (!(fraction > 0.0 && fraction <= 1.0)) throw std::invalid_argument("steady_state_db: bad window");
    const auto n = curve.mse.size();
    const auto window = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n))), 1, n);
    double acc = 0.0;
    for (std::size_t i = n - window; i < n; ++i) acc += curve.mse[i];
    return 10.0 * std::log10(acc / static_cast<double>(window));
}

ExperimentResult run_experiment(const ExperimentConfig& config, Execution mode) {
    config.validate();
    const std::size_t n_trials = config.trials;
    std::vector<TrialResult> trials(n_trials);

    if (mode == Execution::Parallel) {
#ifdef AUGKAF_HAVE_OPENMP
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (long long t = 0; t < static_cast<long long>(n_trials); ++t) {
            try {
                trials[t] = run_trial(config, static_cast<std::size_t>(t));
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
#else
        for (std::size_t t = 0; t < n_trials; ++t) trials[t] = run_trial(config, t);
#endif
    } else {
        for (std::size_t t = 0; t < n_trials; ++t) trials[t] = run_trial(config, t);
    }

    // reduction in trial order regardless of completion order
    ExperimentResult result;
    const std::size_t n_algos = config.algorithms.size();
    result.curves.resize(n_algos);
    std::vector<double> dict_totals(n_algos, 0.0);
    for (std::size_t a = 0; a < n_algos; ++a) {
        result.curves[a].name = config.algorithms[a].name;
        result.curves[a].mse.assign(config.samples, 0.0);
    }
    for (const auto& tr : trials) {
        result.trial_hashes.push_back(tr.data_hash);
        for (std::size_t a = 0; a < n_algos; ++a) {
            auto& acc = result.curves[a].mse;
            for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += tr.squared_errors[a][n];
            dict_totals[a] += static_cast<double>(tr.dictionary_sizes[a]);
        }
    }
    const double scale = 1.0 / static_cast<double>(n_trials);
    for (std::size_t a = 0; a < n_algos; ++a) {
        for (auto& v : result.curves[a].mse) v *= scale;
        result.summary.push_back({result.curves[a].name,
                                  steady_state_db(result.curves[a], config.steady_fraction),
                                  dict_totals[a] * scale});
    }
    return result;
}

void emit_csv(const std::vector<LearningCurve>& curves, const std::filesystem::path& path) {
    if (curves.empty()) throw std::invalid_argument("emit_csv: no curves");
    const std::size_t n = curves.front().mse.size();
    for (const auto& c : curves)
        if (c.mse.size() != n) throw DimensionError("emit_csv: curve lengths differ", n, c.mse.size());

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "iteration";
    for (const auto& c : curves) out << ',' << c.name;
    out << '\n';
    std::vector<std::vector<double>> db;
    db.reserve(curves.size());
    for (const auto& c : curves) db.push_back(c.db());
    for (std::size_t i = 0; i < n; ++i) {
        out << (i + 1);
        for (const auto& col : db) out << ',' << fixed6(col[i]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_summary_csv(const std::vector<SummaryRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "algorithm,steady_state_mse_db,dictionary_size\n";
    for (const auto& r : rows) out << r.name << ',' << fixed6(r.steady_state_db) << ',' << fixed6(r.dictionary_size) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string format_summary_table(const std::vector<SummaryRow>& rows) {
    std::size_t width = 9;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    std::ostringstream os;
    auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
    os << pad("algorithm") << "steady-state MSE (dB)  dictionary\n";
    for (const auto& r : rows) {
        char line[96];
        std::snprintf(line, sizeof(line), "%21.3f  %10.1f", r.steady_state_db, r.dictionary_size);
        os << pad(r.name) << line << '\n';
    }
    return os.str();
}

} // namespace augkaf
