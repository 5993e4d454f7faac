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

#include "augkaf/core.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace augkaf {

/// FIR stage followed by a memoryless polynomial:
///   t(n) = sum_j taps[j] s(n - j)
///   q(n) = t(n) + nl2 t(n)^2 + nl3 t(n)^3
struct ChannelSpec {
    std::vector<cplx> taps;
    cplx nl2{0.0, 0.0};
    cplx nl3{0.0, 0.0};

    void validate() const;

    static ChannelSpec soft();
    /// The last tap is printed as "(-0.1i - 0.2i)" in the source material,
    /// which has no real part; -0.1 - 0.2i is used by default.
    static ChannelSpec strong();
};

/// s(n) = scale * (sqrt(1 - rho^2) X(n) + i rho Y(n)). Circular at rho = sqrt(2)/2.
struct InputModel {
    double rho = 0.1;
    double scale = 0.70;
};

struct ChannelOutput {
    std::vector<cplx> linear;     // t
    std::vector<cplx> distorted;  // q
};

std::vector<cplx> gen_input(const InputModel& model, std::size_t n_samples, SeededRng& rng);

ChannelOutput apply_channel(const ChannelSpec& channel, std::span<const cplx> s);
ChannelOutput soft_channel(std::span<const cplx> s);
ChannelOutput strong_channel(std::span<const cplx> s);

/// r = q + circular white Gaussian noise with variance mean|q|^2 / 10^(snr/10).
/// snr_db = +inf returns q unchanged without touching rng.
std::vector<cplx> add_noise(std::span<const cplx> q, double snr_db, SeededRng& rng);

double mean_power(std::span<const cplx> x);

/// Pairs ((r(n+D), ..., r(n+D-L+1)), s(n)) for n = 0 .. n_pairs-1, with r(k) = 0 for k < 0.
struct EqualizationDataset {
    std::vector<ComplexVec> inputs;
    std::vector<cplx> targets;
    std::size_t length = 0;
    std::size_t delay = 0;

    std::size_t size() const noexcept { return targets.size(); }
};

EqualizationDataset make_dataset(std::span<const cplx> received, std::span<const cplx> transmitted,
                                 std::size_t length, std::size_t delay);

/// FNV-1a over the raw bytes of inputs and targets.
std::uint64_t fingerprint(const EqualizationDataset& data);

} // namespace augkaf
