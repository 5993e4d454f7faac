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

#include "augkaf/channel.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace augkaf {

void ChannelSpec::validate() const {
    if (taps.empty()) throw std::invalid_argument("channel needs at least one tap");
}

ChannelSpec ChannelSpec::soft() {
    return {{{-0.9, 0.8}, {0.6, -0.7}}, {0.1, 0.15}, {0.06, 0.05}};
}

ChannelSpec ChannelSpec::strong() {
    return {{{-0.9, 0.8}, {0.6, -0.7}, {-0.4, 0.3}, {0.3, -0.2}, {-0.1, -0.2}},
            {0.2, 0.25},
            {0.08, 0.09}};
}

std::vector<cplx> gen_input(const InputModel& model, std::size_t n_samples, SeededRng& rng) {
    if (!(model.rho >= 0.0 && model.rho <= 1.0)) throw std::invalid_argument("gen_input: rho must lie in [0, 1]");
    const double re_scale = model.scale * std::sqrt(1.0 - model.rho * model.rho);
    const double im_scale = model.scale * model.rho;
    std::vector<cplx> s(n_samples);
    for (auto& v : s) {
        const auto [x, y] = rng.gaussian_pair();
        v = {re_scale * x, im_scale * y};
    }
    return s;
}

ChannelOutput apply_channel(const ChannelSpec& channel, std::span<const cplx> s) {
    channel.validate();
    ChannelOutput out{std::vector<cplx>(s.size()), std::vector<cplx>(s.size())};
    for (std::size_t n = 0; n < s.size(); ++n) {
        cplx t{0.0, 0.0};
        for (std::size_t j = 0; j < channel.taps.size() && j <= n; ++j) t += channel.taps[j] * s[n - j];
        out.linear[n] = t;
        out.distorted[n] = t + channel.nl2 * t * t + channel.nl3 * t * t * t;
    }
    return out;
}

ChannelOutput soft_channel(std::span<const cplx> s) { return apply_channel(ChannelSpec::soft(), s); }
ChannelOutput strong_channel(std::span<const cplx> s) { return apply_channel(ChannelSpec::strong(), s); }

double mean_power(std::span<const cplx> x) {
    if (x.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& v : x) acc += std::norm(v);
    return acc / static_cast<double>(x.size());
}

std::vector<cplx> add_noise(std::span<const cplx> q, double snr_db, SeededRng& rng) {
    if (q.empty()) throw std::invalid_argument("add_noise: empty signal");
    if (std::isnan(snr_db) || snr_db == -INFINITY) throw std::invalid_argument("add_noise: invalid SNR");
    std::vector<cplx> r(q.begin(), q.end());
    if (std::isinf(snr_db)) return r;
    const double variance = mean_power(q) / std::pow(10.0, snr_db / 10.0);
    const double per_axis = std::sqrt(variance / 2.0);
    for (auto& v : r) {
        const auto [x, y] = rng.gaussian_pair();
        v += cplx{per_axis * x, per_axis * y};
    }
    return r;
}

EqualizationDataset make_dataset(std::span<const cplx> received, std::span<const cplx> transmitted,
                                 std::size_t length, std::size_t delay) {
    if (length == 0) throw std::invalid_argument("make_dataset: filter length must be positive");
    const std::size_t n_pairs = transmitted.size();
    if (received.size() < n_pairs + delay)
        throw DimensionError("make_dataset: received sequence too short", n_pairs + delay, received.size());

    EqualizationDataset data;
    data.length = length;
    data.delay = delay;
    data.inputs.reserve(n_pairs);
    data.targets.assign(transmitted.begin(), transmitted.end());

    RegressorWindow window(length);
    for (std::size_t k = 0; k < delay; ++k) window.push(received[k]);
    for (std::size_t n = 0; n < n_pairs; ++n) {
        window.push(received[n + delay]);
        data.inputs.push_back(window.snapshot());
    }
    return data;
}

std::uint64_t fingerprint(const EqualizationDataset& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const cplx& v) {
        unsigned char bytes[sizeof(double) * 2];
        const double parts[2] = {v.real(), v.imag()};
        std::memcpy(bytes, parts, sizeof(bytes));
        for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& z : data.inputs)
        for (const auto& v : z) feed(v);
    for (const auto& v : data.targets) feed(v);
    return h;
}

} // namespace augkaf
