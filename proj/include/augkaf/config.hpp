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

#include "augkaf/experiment.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

namespace augkaf {

/// Current version of the key-value config grammar (see README).
inline constexpr int kConfigFormatVersion = 1;

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i"). Throws ConfigError.
cplx parse_complex(std::string_view text);
/// Shortest round-trip decimal, e.g. "-0.9+0.8i".
std::string format_complex(cplx v);
std::string format_double(double v);

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Serializes every field; parse_config(dump_config(c)) reproduces c exactly.
std::string dump_config(const ExperimentConfig& config);

enum class PresetScale { Fast, Full };

/// Soft channel; NCKLMS2 and NACKLMS (mu 1/8, sigma 10) against NCLMS and
/// NACLMS (mu 1/16). circular selects rho = sqrt(2)/2, otherwise rho = 0.1.
ExperimentConfig paper_fig1_config(PresetScale scale, bool circular);
/// Strong channel; NCKLMS2 and NACKLMS (mu 1/8, sigma 15) against the MLP
/// (mu 0.0003) and CNGD (mu 0.0005).
ExperimentConfig paper_fig2_config(PresetScale scale, bool circular);

} // namespace augkaf
