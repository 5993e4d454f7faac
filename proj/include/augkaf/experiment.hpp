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

#pragma once

#include "augkaf/channel.hpp"
#include "augkaf/filter.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace augkaf {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AlgorithmKind {
    Nclms,
    Naclms,
    Ncklms1,              // complexified real Gaussian kernel
    Ncklms2,              // pure complex Gaussian kernel
    Nacklms,              // augmented, pure complex Gaussian kernel
    AcklmsComplexified,   // augmented, complexified real Gaussian kernel
    Cngd,
    Mlp,
};

std::string to_string(AlgorithmKind kind);
/// Accepts the lowercase type names used in config files; throws ConfigError.
AlgorithmKind parse_algorithm_kind(const std::string& text);
bool is_kernel_algorithm(AlgorithmKind kind) noexcept;

struct AlgorithmConfig {
    std::string name;
    AlgorithmKind kind = AlgorithmKind::Nclms;
    double mu = 0.125;
    double sigma = 10.0;
    double delta1 = 0.1;
    double delta2 = 0.2;
    double epsilon = 1e-8;
    bool normalized = true;
    std::optional<std::size_t> capacity;
    std::size_t hidden = 50;
    bool linear_output = false;
    double init_scale = 0.1;
};

enum class ChannelKind { Soft, Strong, Custom };
std::string to_string(ChannelKind kind);

struct ExperimentConfig {
    ChannelKind channel_kind = ChannelKind::Soft;
    ChannelSpec channel = ChannelSpec::soft();
    double rho = 0.1;
    double snr_db = 15.0;
    std::size_t filter_length = 5;
    std::size_t delay = 2;
    std::size_t samples = 3000;
    std::size_t trials = 20;
    std::uint64_t base_seed = 1;
    /// Fraction of the final iterations averaged into the steady-state figure.
    double steady_fraction = 0.1;
    std::vector<AlgorithmConfig> algorithms;

    /// Throws ConfigError describing the first problem found, including
    /// kernel/mode incompatibilities of the configured algorithms.
    void validate() const;
};

/// Builds the filter for one algorithm. init_seed drives random weight
/// initialization of the neural baselines and is ignored otherwise.
std::unique_ptr<AdaptiveFilter> make_filter(const AlgorithmConfig& algo, std::size_t length,
                                            std::uint64_t init_seed);

/// Seed of trial tau, and the weight-init seed of algorithm a within it.
std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t trial) noexcept;
std::uint64_t init_seed(std::uint64_t trial_seed, std::size_t algorithm_index) noexcept;

/// Data of one trial: input, channel, noise, windows. Every algorithm sees this same stream.
EqualizationDataset generate_trial_data(const ExperimentConfig& config, std::size_t trial);

struct TrialResult {
    std::vector<std::vector<double>> squared_errors; // [algorithm][iteration]
    std::vector<std::size_t> dictionary_sizes;       // [algorithm]
    std::uint64_t data_hash = 0;
};

TrialResult run_trial(const ExperimentConfig& config, std::size_t trial);

struct LearningCurve {
    std::string name;
    std::vector<double> mse; // trial-averaged |e(n)|^2

    std::vector<double> db() const;
};

struct SummaryRow {
    std::string name;
    double steady_state_db = 0.0;
    /// Mean over trials of the final dictionary size; zero for parametric filters.
    double dictionary_size = 0.0;
};

/// 10 log10 of the mean MSE over the last ceil(fraction * n) iterations.
double steady_state_db(const LearningCurve& curve, double fraction);

enum class Execution { Serial, Parallel };

struct ExperimentResult {
    std::vector<LearningCurve> curves; // config order
    std::vector<SummaryRow> summary;
    std::vector<std::uint64_t> trial_hashes;
};

/// Runs all trials (in parallel with OpenMP when requested) and reduces them
/// in trial order, so both execution modes produce identical numbers.
ExperimentResult run_experiment(const ExperimentConfig& config, Execution mode = Execution::Parallel);

void emit_csv(const std::vector<LearningCurve>& curves, const std::filesystem::path& path);
void emit_summary_csv(const std::vector<SummaryRow>& rows, const std::filesystem::path& path);
std::string format_summary_table(const std::vector<SummaryRow>& rows);

} // namespace augkaf
