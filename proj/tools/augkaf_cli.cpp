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

#include "augkaf/config.hpp"
#include "augkaf/experiment.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace augkaf;

namespace {

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> samples;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Base seed; trial t uses seed + t");
        cmd->add_option("--trials", trials, "Number of Monte-Carlo trials");
        cmd->add_option("--samples", samples, "Samples per trial");
    }
    void apply(ExperimentConfig& c) const {
        if (seed) c.base_seed = *seed;
        if (trials) c.trials = *trials;
        if (samples) c.samples = *samples;
    }
};

int run_and_write(const ExperimentConfig& config, const fs::path& out_dir, bool serial) {
    config.validate();
    fs::create_directories(out_dir);
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_experiment(config, serial ? Execution::Serial : Execution::Parallel);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    emit_csv(result.curves, out_dir / "curves.csv");
    emit_summary_csv(result.summary, out_dir / "summary.csv");
    std::cout << format_summary_table(result.summary);
    std::cout << config.trials << " trials x " << config.samples << " samples in " << secs << " s; wrote "
              << (out_dir / "curves.csv").string() << " and " << (out_dir / "summary.csv").string() << '\n';
    return 0;
}

PresetScale parse_scale(const std::string& s) { return s == "full" ? PresetScale::Full : PresetScale::Fast; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex linear, widely-linear and kernel LMS equalization experiments"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run an experiment described by a config file");
    std::string run_config;
    std::string run_out = "out";
    bool run_serial = false;
    Overrides run_over;
    run->add_option("--config", run_config, "Config file")->required()->check(CLI::ExistingFile);
    run->add_option("--out", run_out, "Output directory for curves.csv and summary.csv");
    run->add_flag("--serial", run_serial, "Run trials on one thread");
    run_over.add_to(run);

    // presets
    struct PresetCmd {
        CLI::App* cmd;
        std::string scale = "fast";
        std::string panel = "b";
        std::string out;
        bool serial = false;
        bool dump = false;
        Overrides over;
    };
    auto make_preset = [&](const char* name, const char* help, const char* default_out) {
        PresetCmd p{app.add_subcommand(name, help)};
        p.out = default_out;
        return p;
    };
    PresetCmd fig1 = make_preset("paper-fig1", "Soft channel: NCKLMS2, NACKLMS, NCLMS, NACLMS", "out/fig1");
    PresetCmd fig2 = make_preset("paper-fig2", "Strong channel: NCKLMS2, NACKLMS, MLP, CNGD", "out/fig2");
    for (PresetCmd* p : {&fig1, &fig2}) {
        p->cmd->add_option("--scale", p->scale, "fast (20 x 3000) or full (100 x 5000)")
            ->check(CLI::IsMember({"fast", "full"}));
        p->cmd->add_option("--panel", p->panel, "a: circular input, b: non-circular input (rho = 0.1)")
            ->check(CLI::IsMember({"a", "b"}));
        p->cmd->add_option("--out", p->out, "Output directory");
        p->cmd->add_flag("--serial", p->serial, "Run trials on one thread");
        p->cmd->add_flag("--dump-config", p->dump, "Print the preset config and exit");
        p->over.add_to(p->cmd);
    }

    // validate
    auto* validate = app.add_subcommand("validate", "Check a config file without running it");
    std::string validate_config;
    validate->add_option("--config", validate_config, "Config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            auto config = load_config(run_config);
            run_over.apply(config);
            return run_and_write(config, run_out, run_serial);
        }
        for (PresetCmd* p : {&fig1, &fig2}) {
            if (!*p->cmd) continue;
            const bool circular = p->panel == "a";
            auto config = p == &fig1 ? paper_fig1_config(parse_scale(p->scale), circular)
                                     : paper_fig2_config(parse_scale(p->scale), circular);
            p->over.apply(config);
            if (p->dump) {
                std::cout << dump_config(config);
                return 0;
            }
            return run_and_write(config, p->out, p->serial);
        }
        if (*validate) {
            const auto config = load_config(validate_config);
            config.validate();
            std::cout << validate_config << ": ok (" << config.algorithms.size() << " algorithms, "
                      << config.trials << " x " << config.samples << ")\n";
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
