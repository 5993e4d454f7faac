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

// Serial vs OpenMP trial execution on the fig1 preset workload.

#include "augkaf/config.hpp"
#include "augkaf/experiment.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace augkaf;

namespace {

double best_of(int repeats, const ExperimentConfig& cfg, Execution mode, ExperimentResult& out) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        out = run_experiment(cfg, mode);
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"augkaf trial benchmark"};
    std::size_t trials = 20, samples = 3000;
    int repeats = 3;
    bool circular = false;
    app.add_option("--trials", trials)->check(CLI::PositiveNumber);
    app.add_option("--samples", samples)->check(CLI::PositiveNumber);
    app.add_option("--repeats", repeats)->check(CLI::PositiveNumber);
    app.add_flag("--circular", circular);
    CLI11_PARSE(app, argc, argv);

    auto cfg = paper_fig1_config(PresetScale::Fast, circular);
    cfg.trials = trials;
    cfg.samples = samples;

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif

    ExperimentResult serial, parallel;
    const double ts = best_of(repeats, cfg, Execution::Serial, serial);
    const double tp = best_of(repeats, cfg, Execution::Parallel, parallel);

    bool identical = serial.trial_hashes == parallel.trial_hashes;
    for (std::size_t a = 0; a < serial.curves.size(); ++a)
        identical = identical && serial.curves[a].mse == parallel.curves[a].mse;

    std::printf("workload   %zu trials x %zu samples, %zu algorithms\n", trials, samples, cfg.algorithms.size());
    std::printf("threads    %d\n", threads);
    std::printf("serial     %.3f s\n", ts);
    std::printf("parallel   %.3f s\n", tp);
    std::printf("speedup    %.2fx\n", ts / tp);
    std::printf("results    %s\n", identical ? "identical" : "DIFFER");
    return identical ? 0 : 1;
}
